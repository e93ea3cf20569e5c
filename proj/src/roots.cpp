#include "recdiff/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "recdiff/errors.hpp"

namespace recdiff {

ComplexInterval CertifiedRoot::enclosure() const {
  return ComplexInterval(Interval::ball(value.re, radius), Interval::ball(value.im, radius));
}

Interval CertifiedRoot::modulus() const {
  const mpfr_prec_t prec = value.prec();
  BigFloat lo(prec), hi(prec);
  mpfr_hypot(lo.get(), value.re.get(), value.im.get(), MPFR_RNDD);
  mpfr_hypot(hi.get(), value.re.get(), value.im.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), radius.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), radius.get(), MPFR_RNDU);
  if (lo.sign() < 0) lo = BigFloat::of(0L, prec);
  return Interval(std::move(lo), std::move(hi));
}

int RootProfile::degree() const {
  int d = 0;
  for (const auto& r : roots) d += r.multiplicity;
  return d;
}

const CertifiedRoot& RootProfile::dominant() const {
  if (!dominant_index) throw NoDominantRoot("no certified dominant root in profile");
  return roots[*dominant_index];
}

Interval RootProfile::dominant_modulus() const { return dominant().modulus(); }

std::optional<Interval> RootProfile::second_modulus() const {
  if (!dominant_index) throw NoDominantRoot("no certified dominant root in profile");
  std::optional<Interval> best;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i == *dominant_index) continue;
    Interval m = roots[i].modulus();
    if (!best || best->hi().cmp(m.hi()) < 0) best = m;
  }
  return best;
}

namespace {

// Initial guesses from the double-precision companion matrix; falls back to a
// perturbed circle at the Cauchy bound when coefficients overflow doubles.
std::vector<Complex> initial_guesses(const IntPolynomial& p, mpfr_prec_t prec) {
  const int n = p.degree();
  std::vector<Complex> guesses;
  guesses.reserve(static_cast<size_t>(n));

  bool fits = true;
  std::vector<double> cd(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    cd[static_cast<size_t>(i)] = p[i].get_d();
    if (!std::isfinite(cd[static_cast<size_t>(i)])) fits = false;
  }
  const double lead = cd.back();
  if (fits && lead != 0.0) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -cd[static_cast<size_t>(i)] / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() == Eigen::Success) {
      for (int i = 0; i < n; ++i) {
        auto ev = solver.eigenvalues()(i);
        if (!std::isfinite(ev.real()) || !std::isfinite(ev.imag())) {
          fits = false;
          break;
        }
        guesses.push_back(Complex::of(ev.real(), ev.imag(), prec));
      }
    } else {
      fits = false;
    }
  }
  if (fits && static_cast<int>(guesses.size()) == n) {
    // Separate numerically coincident guesses so Aberth corrections stay finite.
    for (size_t i = 0; i < guesses.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        Complex diff = guesses[i] - guesses[j];
        if (diff.abs().cmp(BigFloat::of(1e-12, prec)) < 0) {
          guesses[i].re = BigFloat::add(guesses[i].re, BigFloat::of(1e-6 * (double)(i + 1), prec),
                                        MPFR_RNDN);
          guesses[i].im = BigFloat::add(guesses[i].im, BigFloat::of(1e-6, prec), MPFR_RNDN);
        }
      }
    }
    return guesses;
  }

  guesses.clear();
  double bound = 1.0;
  for (int i = 0; i < n; ++i) {
    double q = std::abs(mpq_class(p[i], p.leading()).get_d());
    bound = std::max(bound, 1.0 + q);
  }
  for (int i = 0; i < n; ++i) {
    double angle = 2.0 * M_PI * (static_cast<double>(i) + 0.25) / static_cast<double>(n) + 0.4;
    guesses.push_back(Complex::of(bound * std::cos(angle), bound * std::sin(angle), prec));
  }
  return guesses;
}

// Aberth-Ehrlich simultaneous iteration on a square-free polynomial.
std::vector<Complex> aberth(const IntPolynomial& p, mpfr_prec_t prec) {
  const int n = p.degree();
  std::vector<Complex> z = initial_guesses(p, prec);
  const BigFloat tol = BigFloat::ldexp(BigFloat::of(1L, prec), -(prec - 8));
  const int max_iters = 64 + 8 * static_cast<int>(prec) / 32;

  for (int iter = 0; iter < max_iters; ++iter) {
    BigFloat worst = BigFloat::of(0L, prec);
    for (int i = 0; i < n; ++i) {
      Complex pz = p.eval(z[static_cast<size_t>(i)]);
      if (pz.is_zero()) continue;
      Complex dpz = p.eval_derivative(z[static_cast<size_t>(i)]);
      if (dpz.is_zero()) {
        // nudge off a critical point
        z[static_cast<size_t>(i)].re =
            BigFloat::add(z[static_cast<size_t>(i)].re, BigFloat::of(1e-8, prec), MPFR_RNDN);
        continue;
      }
      Complex w = pz / dpz;
      Complex sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (diff.is_zero()) continue;
        Complex one(BigFloat::of(1L, prec), BigFloat::of(0L, prec));
        sum = sum + one / diff;
      }
      Complex one(BigFloat::of(1L, prec), BigFloat::of(0L, prec));
      Complex denom = one - w * sum;
      Complex corr = denom.is_zero() ? w : w / denom;
      z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - corr;
      BigFloat rel = BigFloat::div(corr.abs(), BigFloat::max(BigFloat::of(1L, prec),
                                                             z[static_cast<size_t>(i)].abs()),
                                   MPFR_RNDN);
      worst = BigFloat::max(worst, rel);
    }
    if (worst.cmp(tol) < 0) break;
  }
  return z;
}

// Certified inclusion radius: the disc |z - z0| <= deg * |p(z0)/p'(z0)|
// contains at least one root of p. Evaluated in interval arithmetic so the
// radius is an upper bound.
BigFloat inclusion_radius(const IntPolynomial& p, const Complex& z0, mpfr_prec_t prec) {
  ComplexInterval zi(Interval::point(z0.re), Interval::point(z0.im));
  Interval num = p.eval(zi, prec).abs();

  // derivative coefficients as a polynomial
  IntPolynomial dp = p.derivative();
  Interval den = dp.eval(zi, prec).abs();
  if (den.contains_zero()) throw PrecisionExhausted("derivative vanishes at root approximation");
  Interval r = (num / den) * Interval::exact(static_cast<long>(p.degree()), prec);
  return r.hi();
}

struct LocatedRoot {
  Complex value;
  BigFloat radius;
};

// Locate and certify all roots of a square-free primitive factor.
std::vector<LocatedRoot> certified_roots_of_squarefree(const IntPolynomial& g,
                                                       mpfr_prec_t prec) {
  std::vector<LocatedRoot> out;
  const int n = g.degree();
  if (n == 1) {
    mpq_class r(-g[0], g[1]);
    r.canonicalize();
    Interval enc = Interval::exact(r, prec);
    Complex center(enc.mid(), BigFloat::of(0L, prec));
    out.push_back({center, enc.width_upper()});
    return out;
  }

  std::vector<Complex> zs = aberth(g, prec);
  out.reserve(zs.size());
  for (const auto& z : zs) {
    out.push_back({z, inclusion_radius(g, z, prec)});
  }

  // Pairwise disjoint inclusion discs: with n discs and >= 1 root in each,
  // every disc contains exactly one root.
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Complex diff = out[i].value - out[j].value;
      BigFloat dist(prec);
      mpfr_hypot(dist.get(), diff.re.get(), diff.im.get(), MPFR_RNDD);
      BigFloat rsum = BigFloat::add(out[i].radius, out[j].radius, MPFR_RNDU);
      if (dist.cmp(rsum) <= 0) {
        throw PrecisionExhausted("root inclusion discs overlap at this precision");
      }
    }
  }
  return out;
}

}  // namespace

RootProfile find_roots(const IntPolynomial& poly, mpfr_prec_t precision_bits) {
  if (poly.degree() < 1) throw BadInput("root finding needs degree >= 1");

  RootProfile profile;
  profile.precision_bits = precision_bits;

  for (const auto& sf : squarefree_decomposition(poly)) {
    for (auto& located : certified_roots_of_squarefree(sf.factor, precision_bits)) {
      profile.roots.push_back({located.value, located.radius, sf.multiplicity});
    }
  }
  if (profile.degree() != poly.degree()) {
    throw PrecisionExhausted("root multiplicities do not sum to the degree");
  }

  // Deterministic order: by modulus midpoint descending, then by real/imag.
  std::sort(profile.roots.begin(), profile.roots.end(),
            [](const CertifiedRoot& a, const CertifiedRoot& b) {
              int c = a.value.abs().cmp(b.value.abs());
              if (c != 0) return c > 0;
              c = a.value.re.cmp(b.value.re);
              if (c != 0) return c > 0;
              return a.value.im.cmp(b.value.im) > 0;
            });

  // Certify strict dominance of the largest modulus when possible.
  if (profile.roots.size() == 1) {
    profile.dominant_index = 0;
  } else {
    size_t best = 0;
    Interval best_mod = profile.roots[0].modulus();
    for (size_t i = 1; i < profile.roots.size(); ++i) {
      Interval m = profile.roots[i].modulus();
      if (best_mod.hi().cmp(m.hi()) < 0) {
        best = i;
        best_mod = m;
      }
    }
    bool strict = true;
    for (size_t i = 0; i < profile.roots.size(); ++i) {
      if (i == best) continue;
      if (!(profile.roots[i].modulus().hi().cmp(best_mod.lo()) < 0)) {
        strict = false;
        break;
      }
    }
    if (strict) profile.dominant_index = best;
  }
  return profile;
}

RootProfile find_roots_auto(const IntPolynomial& poly, mpfr_prec_t start_bits,
                            mpfr_prec_t max_bits) {
  mpfr_prec_t prec = start_bits;
  while (true) {
    try {
      return find_roots(poly, prec);
    } catch (const PrecisionExhausted&) {
      if (prec >= max_bits) throw;
      prec = std::min<mpfr_prec_t>(prec * 2, max_bits);
    }
  }
}

std::pair<CertifiedRoot, int> dominant_root(const RootProfile& profile) {
  if (!profile.dominant_index) {
    throw NoDominantRoot("two largest moduli tie or are unresolved at this precision");
  }
  const CertifiedRoot& r = profile.roots[*profile.dominant_index];
  return {r, r.multiplicity};
}

bool mutually_dominant(const RootProfile& profile_u, const RootProfile& profile_g) {
  const Interval alpha = dominant_root(profile_u).first.modulus();
  const Interval beta = dominant_root(profile_g).first.modulus();

  auto exceeds_second_of = [](const Interval& dom, const RootProfile& other) {
    if (other.unique_root()) return true;
    std::optional<Interval> second = other.second_modulus();
    auto less = second->certainly_less(dom);
    if (!less.has_value()) {
      throw PrecisionExhausted("dominance comparison unresolved at this precision");
    }
    return *less;
  };

  return exceeds_second_of(alpha, profile_g) && exceeds_second_of(beta, profile_u);
}

}  // namespace recdiff
