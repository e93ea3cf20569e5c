#include "recdiff/algebraics.hpp"

#include <algorithm>
#include <numeric>

#include "recdiff/errors.hpp"

namespace recdiff {

namespace {

// Largest e with a = b^e for some integer b >= 2; returns the primitive base b
// (itself not a perfect power) and the exponent.
std::pair<mpz_class, unsigned long> primitive_power_base(const mpz_class& a) {
  mpz_class base = a;
  unsigned long exponent = 1;
  bool reduced = true;
  while (reduced && base > 3) {
    reduced = false;
    const unsigned long max_e = mpz_sizeinbase(base.get_mpz_t(), 2);
    for (unsigned long e = max_e; e >= 2; --e) {
      mpz_class root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), base.get_mpz_t(), e);
      if (rem == 0 && root >= 2) {
        base = root;
        exponent *= e;
        reduced = true;
        break;
      }
    }
  }
  return {base, exponent};
}

long checked_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw BadInput("exponent does not fit a machine integer");
  return z.get_si();
}

}  // namespace

IndependenceVerdict multiplicative_independence(const Interval& abs_alpha,
                                                const Interval& abs_beta,
                                                unsigned long denominator_bound,
                                                mpfr_prec_t precision_bits) {
  if (!(abs_alpha.lo().cmp(1L) > 0) || !(abs_beta.lo().cmp(1L) > 0)) {
    throw BadInput("multiplicative independence requires both moduli > 1");
  }
  const mpfr_prec_t prec = precision_bits;
  IndependenceVerdict verdict;
  verdict.denominator_bound = denominator_bound;
  verdict.certified_precision_bits = prec;

  // Exact path: both moduli are rational integers.
  if (abs_alpha.is_exact() && abs_alpha.lo().is_integer() && abs_beta.is_exact() &&
      abs_beta.lo().is_integer()) {
    mpz_class a = abs_alpha.lo().rational().get_num();
    mpz_class b = abs_beta.lo().rational().get_num();
    auto [base_a, ea] = primitive_power_base(a);
    auto [base_b, eb] = primitive_power_base(b);
    verdict.exact = true;
    if (base_a == base_b) {
      // log a / log b = ea / eb
      unsigned long g = std::gcd(ea, eb);
      verdict.kind = IndependenceVerdict::Kind::Dependent;
      verdict.p = static_cast<long>(ea / g);
      verdict.q = static_cast<long>(eb / g);
    }
    return verdict;
  }

  // Heuristic path: continued-fraction convergents of log|alpha|/log|beta|.
  Interval la = abs_alpha.round_to(prec).log();
  Interval lb = abs_beta.round_to(prec).log();
  BigFloat theta = (la / lb).mid();

  // Convergent recurrences p_k = a_k p_{k-1} + p_{k-2}.
  mpz_class p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  mpz_class p_cur, q_cur;
  BigFloat x = theta;
  const BigFloat tol = BigFloat::ldexp(BigFloat::of(1L, prec), -(prec / 2));
  bool first = true;
  for (int k = 0; k < 256; ++k) {
    mpz_class a = x.floor_z();
    if (first) {
      p_cur = a;
      q_cur = 1;
      first = false;
    } else {
      mpz_class p_next = a * p_cur + p_prev;
      mpz_class q_next = a * q_cur + q_prev;
      p_prev = p_cur;
      q_prev = q_cur;
      p_cur = p_next;
      q_cur = q_next;
    }
    if (q_cur > static_cast<unsigned long>(denominator_bound)) break;
    if (p_cur > 0 && q_cur > 0) {
      // test q*log|alpha| - p*log|beta| == 0 to working precision
      Interval residual = la * Interval::exact(q_cur, prec) - lb * Interval::exact(p_cur, prec);
      if (residual.contains_zero() && residual.width_upper().cmp(tol) < 0) {
        verdict.kind = IndependenceVerdict::Kind::Dependent;
        verdict.p = checked_long(p_cur);
        verdict.q = checked_long(q_cur);
        return verdict;
      }
    }
    // next partial quotient
    BigFloat frac = BigFloat::sub(x, BigFloat::of(a, prec, MPFR_RNDN), MPFR_RNDN);
    if (frac.is_zero() || frac.cmp(tol) < 0) break;
    x = BigFloat::div(BigFloat::of(1L, prec), frac, MPFR_RNDN);
  }
  return verdict;
}

Interval height_interval(const IntPolynomial& min_poly, mpfr_prec_t precision_bits) {
  if (!min_poly.is_primitive()) {
    throw NotPrimitive("height requires a primitive minimal polynomial (content 1)");
  }
  const mpfr_prec_t prec = precision_bits;
  const int d = min_poly.degree();
  if (d == 0) throw BadInput("height of a constant polynomial");

  mpz_class lead = min_poly.leading();
  if (lead < 0) lead = -lead;
  Interval acc = Interval::exact(lead, prec).log();

  RootProfile profile = find_roots(min_poly, prec);
  const mpq_class one(1);
  for (const auto& root : profile.roots) {
    Interval modulus = root.modulus();
    for (int i = 0; i < root.multiplicity; ++i) {
      int pos = modulus.position_of(one);
      if (pos > 0) {
        acc = acc + modulus.log();
      } else if (pos == 0 && modulus.hi().cmp(1L) > 0) {
        // straddles 1: log max(1,|z|) lies in [0, log hi]
        acc = acc + Interval(BigFloat::of(0L, prec), BigFloat::log(modulus.hi(), MPFR_RNDU));
      }
      // modulus certifiedly <= 1 contributes log 1 = 0
    }
  }
  return acc / Interval::exact(static_cast<long>(d), prec);
}

BigFloat height(const IntPolynomial& min_poly, mpfr_prec_t precision_bits) {
  return height_interval(min_poly, precision_bits).mid();
}

BinetCoefficients binet_coefficients(const RecurrenceSpec& spec, const RootProfile& profile) {
  for (const auto& r : profile.roots) {
    if (r.multiplicity != 1) {
      throw MultipleRootsUnsupported(
          "closed-form coefficients implemented for simple roots only");
    }
  }
  const mpfr_prec_t prec = profile.precision_bits;
  const size_t k = profile.roots.size();
  if (static_cast<int>(k) != spec.order()) {
    throw BadInput("root count does not match recurrence order");
  }

  // Vandermonde system V a = u with V[n][i] = root_i^n, solved with interval
  // Gaussian elimination for rigorous coefficient enclosures.
  std::vector<std::vector<ComplexInterval>> m(k, std::vector<ComplexInterval>(k + 1));
  for (size_t i = 0; i < k; ++i) {
    ComplexInterval root = profile.roots[i].enclosure();
    ComplexInterval power = ComplexInterval::exact(mpz_class(1), prec);
    for (size_t n = 0; n < k; ++n) {
      m[n][i] = power;
      power = power * root;
    }
  }
  for (size_t n = 0; n < k; ++n) {
    m[n][k] = ComplexInterval::exact(spec.initial_terms()[n], prec);
  }

  for (size_t col = 0; col < k; ++col) {
    // pivot: widest-magnitude midpoint
    size_t pivot = col;
    BigFloat best = m[col][col].abs().mid();
    for (size_t row = col + 1; row < k; ++row) {
      BigFloat mag = m[row][col].abs().mid();
      if (mag.cmp(best) > 0) {
        pivot = row;
        best = mag;
      }
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col].abs_sq().contains_zero()) {
      throw IllConditioned("singular coefficient system at working precision");
    }
    for (size_t row = 0; row < k; ++row) {
      if (row == col) continue;
      if (m[row][col].contains_zero() && m[row][col].abs().hi().is_zero()) continue;
      ComplexInterval factor = m[row][col] / m[col][col];
      for (size_t j = col; j <= k; ++j) {
        m[row][j] = m[row][j] - factor * m[col][j];
      }
    }
  }

  BinetCoefficients result;
  result.coefficients.resize(k);
  for (size_t i = 0; i < k; ++i) {
    result.coefficients[i] = m[i][k] / m[i][i];
  }
  if (!profile.dominant_index) throw NoDominantRoot("coefficients need a dominant root");
  result.dominant_pos = *profile.dominant_index;

  // Calibration: reconstruct exact terms and bound the residual.
  const long calibrate_to = std::max<long>(20, 2 * static_cast<long>(k));
  result.calibrated_to = calibrate_to;
  TermCache cache(spec);
  cache.ensure(calibrate_to);
  BigFloat worst = BigFloat::of(0L, prec);
  std::vector<ComplexInterval> powers(k);
  for (size_t i = 0; i < k; ++i) powers[i] = ComplexInterval::exact(mpz_class(1), prec);
  for (long n = 0; n <= calibrate_to; ++n) {
    ComplexInterval sum = ComplexInterval::exact(mpz_class(0), prec);
    for (size_t i = 0; i < k; ++i) {
      sum = sum + result.coefficients[i] * powers[i];
      powers[i] = powers[i] * profile.roots[i].enclosure();
    }
    ComplexInterval diff = sum - ComplexInterval::exact(cache[n], prec);
    worst = BigFloat::max(worst, diff.abs().hi());
  }
  result.residual_bound = worst;

  const BigFloat tol = BigFloat::ldexp(BigFloat::of(1L, prec), -(prec / 2));
  if (worst.cmp(tol) > 0) {
    throw IllConditioned("reconstruction residual exceeds tolerance; raise precision");
  }

  // The dominant coefficient must be certifiedly nonzero for the linear-form
  // machinery downstream.
  if (result.dominant().abs_sq().contains_zero()) {
    throw IllConditioned("dominant coefficient not separated from zero");
  }
  return result;
}

namespace {

bool root_matches(const CertifiedRoot& root, const mpq_class& r) {
  return root.enclosure().re.contains(r) && root.enclosure().im.contains(mpq_class(0));
}

// True when the certified dominant root lies inside some root disc of `factor`
// computed at the profile's precision.
bool factor_contains_dominant(const IntPolynomial& factor, const CertifiedRoot& dominant,
                              mpfr_prec_t prec) {
  RootProfile fp = find_roots(factor, prec);
  Interval dre = Interval::ball(dominant.value.re, dominant.radius);
  Interval dim = Interval::ball(dominant.value.im, dominant.radius);
  for (const auto& root : fp.roots) {
    ComplexInterval enc = root.enclosure();
    bool overlap_re = !(enc.re.hi().cmp(dre.lo()) < 0 || enc.re.lo().cmp(dre.hi()) > 0);
    bool overlap_im = !(enc.im.hi().cmp(dim.lo()) < 0 || enc.im.lo().cmp(dim.hi()) > 0);
    if (overlap_re && overlap_im) return true;
  }
  return false;
}

}  // namespace

std::optional<IntPolynomial> minimal_polynomial_of_dominant(const IntPolynomial& char_poly,
                                                            const RootProfile& profile) {
  const CertifiedRoot dom = dominant_root(profile).first;
  const mpfr_prec_t prec = profile.precision_bits;

  // Work with the square-free factor containing the dominant root.
  IntPolynomial work = char_poly.primitive_part();
  auto sf = squarefree_decomposition(work);
  if (sf.size() > 1 || (sf.size() == 1 && sf[0].multiplicity > 1)) {
    bool found = false;
    for (const auto& f : sf) {
      if (factor_contains_dominant(f.factor, dom, prec)) {
        work = f.factor;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }

  // Exact rational dominant root -> linear minimal polynomial q*z - p.
  for (const auto& r : rational_roots(work)) {
    if (root_matches(dom, r)) {
      return IntPolynomial({mpz_class(-r.get_num()), mpz_class(r.get_den())});
    }
  }

  // Otherwise remove every rational linear factor.
  IntPolynomial reduced = work;
  for (const auto& r : rational_roots(work)) {
    while (reduced.degree() > 0 && reduced.eval(r) == 0) {
      reduced = deflate_rational_root(reduced, r);
    }
  }
  if (reduced.degree() <= 1) return std::nullopt;
  if (reduced.degree() <= 3) {
    // no rational roots and degree <= 3: irreducible over Q
    return reduced.primitive_part();
  }
  if (reduced.degree() == 4 && reduced.leading() == 1) {
    // try integer splittings (x^2 + a x + b)(x^2 + c x + d)
    const mpz_class e3 = reduced[3], e2 = reduced[2], e1 = reduced[1], e0 = reduced[0];
    std::vector<mpz_class> bs;
    mpz_class abs0 = e0 < 0 ? mpz_class(-e0) : e0;
    if (abs0 != 0) {
      for (mpz_class d = 1; d * d <= abs0; ++d) {
        if (abs0 % d == 0) {
          bs.push_back(d);
          bs.push_back(abs0 / d);
          bs.push_back(-d);
          bs.push_back(-(abs0 / d));
        }
      }
    } else {
      bs.push_back(0);
    }
    // bound |a| by twice the Cauchy root bound of the quartic
    long abound = 2;
    for (int i = 0; i < 4; ++i) {
      mpz_class c = reduced[i] < 0 ? mpz_class(-reduced[i]) : reduced[i];
      if (c.fits_slong_p()) abound = std::max(abound, 2 * (c.get_si() + 1));
    }
    for (const auto& b : bs) {
      if (b == 0 || e0 % b != 0) continue;
      mpz_class d = e0 / b;
      for (long a = -abound; a <= abound; ++a) {
        // match coefficients: e3 = a + c, e2 = b + d + a c, e1 = a d + b c
        mpz_class c = e3 - a;
        if (b + d + a * c != e2) continue;
        if (a * d + b * c != e1) continue;
        IntPolynomial f1({b, a, mpz_class(1)});
        IntPolynomial f2({d, c, mpz_class(1)});
        IntPolynomial pick = factor_contains_dominant(f1, dom, prec) ? f1 : f2;
        if (!rational_roots(pick).empty()) {
          for (const auto& r : rational_roots(pick)) {
            if (root_matches(dom, r)) {
              return IntPolynomial({mpz_class(-r.get_num()), mpz_class(r.get_den())});
            }
          }
          // quadratic with rational roots but dominant not rational: deflate
          IntPolynomial rest = pick;
          for (const auto& r : rational_roots(pick)) rest = deflate_rational_root(rest, r);
          return rest.primitive_part();
        }
        return pick.primitive_part();
      }
    }
    // no rational roots and no integer quadratic splitting: irreducible
    return reduced.primitive_part();
  }
  return std::nullopt;  // degree >= 5: config must supply it
}

}  // namespace recdiff
