#include "recdiff/bounds.hpp"

#include <algorithm>

#include "recdiff/errors.hpp"

namespace recdiff {

namespace {

// Smallest power of two >= q (q > 0).
mpq_class pow2_ceil(const mpq_class& q) {
  if (q <= 0) throw BadInput("pow2_ceil needs a positive value");
  mpq_class p(1);
  if (q <= 1) {
    while (p / 2 >= q) p /= 2;
    return p;
  }
  while (p < q) p *= 2;
  return p;
}

// Largest power of two <= q (q > 0).
mpq_class pow2_floor(const mpq_class& q) {
  if (q <= 0) throw BadInput("pow2_floor needs a positive value");
  mpq_class p(1);
  if (q >= 1) {
    while (p * 2 <= q) p *= 2;
    return p;
  }
  while (p > q) p /= 2;
  return p;
}

// Certified rational bounds on a positive interval, shrunk to ~64 bits so
// exact rational power scans stay small.
mpq_class rational_lower(const Interval& v) {
  return v.lo().round_to(64, MPFR_RNDD).rational();
}
mpq_class rational_upper(const Interval& v) {
  return v.hi().round_to(64, MPFR_RNDU).rational();
}

mpz_class pow_z(mpz_class base, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Interval EpsilonPolicy::value_for(const mpz_class& x, mpfr_prec_t prec) const {
  if (kind == Kind::Fixed) {
    if (fixed_value <= 0) throw BadEpsilon("fixed epsilon must be positive");
    return Interval::point(BigFloat::of(fixed_value, prec));
  }
  if (x < 3) throw BadX("epsilon policy 1/log x needs x >= 3");
  return Interval::exact(1L, prec) / Interval::exact(x, prec).log();
}

mpz_class SearchWindow::pair_count(long n0, long m0) const {
  if (empty) return 0;
  long nn = n_max - std::max(n0, 0L) + 1;
  long mm = m_max - std::max(m0, 0L) + 1;
  if (nn <= 0 || mm <= 0) return 0;
  return mpz_class(nn) * mpz_class(mm);
}

GrowthEnvelope fit_envelope(TermCache& cache, const RootProfile& profile, long n_max) {
  if (n_max < 10) throw BadInput("envelope fitting needs n_max >= 10");
  const auto [dom, sigma] = dominant_root(profile);
  const int d = sigma - 1;

  const mpq_class alpha_lo = rational_lower(dom.modulus());
  if (alpha_lo <= 0) throw PrecisionExhausted("dominant modulus lower bound not positive");

  cache.ensure(n_max);
  // max over 1 <= n <= n_max of |U_n| / (n^d alpha_lo^n), exact
  mpq_class best(0);
  mpq_class alpha_pow(1);
  for (long n = 1; n <= n_max; ++n) {
    alpha_pow *= alpha_lo;
    mpz_class abs_u = abs(cache[n]);
    if (abs_u == 0) continue;
    mpq_class quotient = mpq_class(abs_u) / (mpq_class(pow_z(mpz_class(n), d)) * alpha_pow);
    if (quotient > best) best = quotient;
  }
  if (d == 0) {
    mpq_class u0(abs(cache[0]));
    if (u0 > best) best = u0;
  }
  if (best <= 0) throw BadInput("cannot fit an envelope to an all-zero range");

  GrowthEnvelope env;
  env.d = d;
  env.L = std::max(mpq_class(1), pow2_ceil(best));
  env.verified_to = n_max;

  // Re-verify the claimed inequality exactly.
  alpha_pow = 1;
  for (long n = 1; n <= n_max; ++n) {
    alpha_pow *= alpha_lo;
    if (mpq_class(abs(cache[n])) > env.L * mpq_class(pow_z(mpz_class(n), d)) * alpha_pow) {
      throw PrecisionExhausted("envelope re-verification failed");
    }
  }
  if (d == 0 && mpq_class(abs(cache[0])) > env.L) {
    throw PrecisionExhausted("envelope re-verification failed at n = 0");
  }
  return env;
}

EnvelopeK k_epsilon(const GrowthEnvelope& env_u, const GrowthEnvelope& env_g,
                    const Interval& abs_alpha, const Interval& abs_beta, const Interval& eps) {
  if (!eps.certainly_positive() || eps.hi().cmp(1L) > 0) {
    throw BadEpsilon("epsilon must lie in (0, 1]");
  }
  const mpfr_prec_t prec = std::max(abs_alpha.prec(), abs_beta.prec());

  EnvelopeK k;
  k.d = std::max(env_u.d, env_g.d);
  k.L = std::max(env_u.L, env_g.L);
  k.epsilon = eps.mid();
  k.eps_certified = eps;

  if (k.d == 0) {
    // kappa = 2L exactly; K is epsilon-free
    mpq_class two_l = 2 * k.L;
    k.kappa = BigFloat::of(two_l, prec, MPFR_RNDN);
    k.k_epsilon = k.kappa;
    k.k_certified = Interval::exact(two_l, prec);
    return k;
  }

  Interval d_iv = Interval::exact(static_cast<long>(k.d), prec);
  Interval alpha_d = abs_alpha.pow_si(k.d);
  Interval beta_d = abs_beta.pow_si(k.d);
  Interval max_pow(BigFloat::max(alpha_d.lo(), beta_d.lo()), BigFloat::max(alpha_d.hi(), beta_d.hi()));
  Interval kappa = Interval::exact(2L, prec) * max_pow * Interval::exact(k.L, prec) *
                   d_iv.pow_si(k.d) * d_iv.neg().exp();
  k.k_certified = kappa / eps.pow_si(k.d);
  k.kappa = kappa.mid();
  k.k_epsilon = BigFloat::div(k.kappa, BigFloat::pow_si(k.epsilon, k.d, MPFR_RNDN), MPFR_RNDN);
  return k;
}

namespace {

EnvelopeReport check_exponential_bound(TermCache& cache, const Interval& factor,
                                       const Interval& base, long n_lo, long n_hi,
                                       mpfr_prec_t prec) {
  EnvelopeReport report;
  report.checked_from = n_lo;
  report.checked_to = n_hi;
  cache.ensure(n_hi);

  Interval power = base.pow_si(n_lo);
  for (long n = n_lo; n <= n_hi; ++n) {
    Interval rhs = factor * power;
    mpz_class lhs = abs(cache[n]);
    int pos = rhs.position_of(lhs);  // -1: rhs < lhs everywhere, 1: rhs > lhs
    if (pos == 0) {
      // ambiguous at working precision: recompute this n directly, escalated
      bool resolved = false;
      for (mpfr_prec_t p2 = prec * 2; p2 <= 4096; p2 *= 2) {
        Interval rhs2 = factor.round_to(p2) * base.round_to(p2).pow_si(n);
        int pos2 = rhs2.position_of(lhs);
        if (pos2 != 0) {
          pos = pos2;
          resolved = true;
          break;
        }
      }
      if (!resolved) {
        // could still be an exact equality; treat lhs <= hi as pass
        if (rhs.hi().cmp(lhs) >= 0 && rhs.lo().cmp(lhs) <= 0) {
          report.ambiguous = n;
          power = power * base;
          continue;
        }
      }
    }
    if (pos < 0) {
      report.pass = false;
      report.first_violation = n;
      return report;
    }
    power = power * base;
  }
  return report;
}

}  // namespace

EnvelopeReport envelope_check(const EnvelopeK& k, TermCache& cache, const Interval& abs_root,
                              long n_lo, long n_hi) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(abs_root.prec(), 128);
  Interval base = abs_root + k.eps_certified;
  return check_exponential_bound(cache, k.k_certified, base, n_lo, n_hi, prec);
}

EnvelopeReport envelope_check(const GrowthEnvelope& env, TermCache& cache,
                              const RootProfile& profile, long n_lo, long n_hi) {
  EnvelopeReport report;
  report.checked_from = n_lo;
  report.checked_to = n_hi;
  cache.ensure(n_hi);
  const mpq_class alpha_lo = rational_lower(dominant_root(profile).first.modulus());

  mpq_class power(1);
  for (long n = 1; n < n_lo; ++n) power *= alpha_lo;
  for (long n = n_lo; n <= n_hi; ++n) {
    if (n == 0) {
      if (env.d == 0 && mpq_class(abs(cache[0])) > env.L) {
        report.pass = false;
        report.first_violation = 0;
        return report;
      }
      continue;
    }
    power *= alpha_lo;
    if (mpq_class(abs(cache[n])) > env.L * mpq_class(pow_z(mpz_class(n), env.d)) * power) {
      report.pass = false;
      report.first_violation = n;
      return report;
    }
  }
  return report;
}

LowerTermBound fit_lower_term(TermCache& cache, const RootProfile& profile, long n_max) {
  const auto dom = dominant_root(profile).first;
  const mpq_class alpha_hi = rational_upper(dom.modulus());
  cache.ensure(n_max);

  long last_zero = -1;
  for (long n = 0; n <= n_max; ++n) {
    if (cache[n] == 0) last_zero = n;
  }
  const long n1 = last_zero + 1;
  if (n1 > n_max) throw NotFound("every scanned term is zero");

  mpq_class alpha_pow(1);
  for (long n = 1; n <= n1; ++n) alpha_pow *= alpha_hi;
  std::optional<mpq_class> min_q;
  for (long n = n1; n <= n_max; ++n) {
    mpq_class quotient = mpq_class(abs(cache[n])) / alpha_pow;
    if (!min_q || quotient < *min_q) min_q = quotient;
    alpha_pow *= alpha_hi;
  }

  LowerTermBound bound;
  bound.n1 = n1;
  bound.J0 = pow2_floor(*min_q);
  bound.verified_to = n_max;

  // exact re-verification
  alpha_pow = 1;
  for (long n = 1; n <= n1; ++n) alpha_pow *= alpha_hi;
  for (long n = n1; n <= n_max; ++n) {
    if (mpq_class(abs(cache[n])) < bound.J0 * alpha_pow) {
      throw PrecisionExhausted("lower-term re-verification failed");
    }
    alpha_pow *= alpha_hi;
  }
  return bound;
}

namespace {

// Largest integer n >= 0 with K * base^n <= threshold certified via upper
// endpoints; -1 when even n = 0 fails.
long largest_exponent_below(const Interval& k, const Interval& base, const mpq_class& threshold) {
  auto certified_ok = [&](long n) {
    BigFloat rhs = BigFloat::mul(k.hi(), BigFloat::pow_si(base.hi(), n, MPFR_RNDU), MPFR_RNDU);
    return rhs.cmp(threshold) <= 0;
  };
  if (!certified_ok(0)) return -1;
  // double-and-probe, then binary search
  long lo = 0, hi = 1;
  while (certified_ok(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (1L << 40)) break;
  }
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    if (certified_ok(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

SearchWindow lower_window(const mpz_class& x, const EnvelopeK& k, const Interval& abs_alpha,
                          const Interval& abs_beta) {
  if (x < 3) throw BadX("lower window needs x >= 3");
  SearchWindow w;
  w.kind = SearchWindow::Kind::LowerConstruction;
  w.x = x;
  w.epsilon_note = "eps = " + k.epsilon.str(8);

  const mpq_class half_x = mpq_class(x) / 2;
  long n = largest_exponent_below(k.k_certified, abs_alpha + k.eps_certified, half_x);
  long m = largest_exponent_below(k.k_certified, abs_beta + k.eps_certified, half_x);
  if (n < 0 || m < 0) {
    w.empty = true;
    return w;
  }
  w.n_max = n;
  w.m_max = m;
  return w;
}

SearchWindow upper_window(const mpz_class& x, double eta, const EnvelopeK& k,
                          const LowerTermBound& j0_u, const LowerTermBound& j0_g,
                          const Interval& abs_alpha, const Interval& abs_beta) {
  if (!(eta > 0.0 && eta < 1.0)) throw BadEta("eta must lie in (0, 1)");
  if (x < 3) throw BadX("upper window needs x >= 3");
  const mpfr_prec_t prec = std::max(abs_alpha.prec(), abs_beta.prec());

  SearchWindow w;
  w.kind = SearchWindow::Kind::UpperBound;
  w.x = x;
  w.eta = eta;
  w.conditioned = false;  // x1(eta) is non-effective; exact scans must confirm
  w.epsilon_note = "eps = " + k.epsilon.str(8);

  Interval log_x = Interval::exact(x, prec).log();
  Interval log_a = abs_alpha.log();
  Interval log_b = abs_beta.log();
  Interval log_a_eps = (abs_alpha + k.eps_certified).log();
  Interval log_b_eps = (abs_beta + k.eps_certified).log();
  Interval one_eta = Interval::point(BigFloat::of(1.0 + eta, prec));
  Interval log_2k = (Interval::exact(2L, prec) * k.k_certified).log();
  Interval log_j0u = Interval::exact(j0_u.J0, prec).log();
  Interval log_j0g = Interval::exact(j0_g.J0, prec).log();

  // m <= (1+eta) (log(|a|+eps)/log|a|) (log x/log|b|) + (log 2K - log J0_G)/log|b|
  Interval m_bound = one_eta * (log_a_eps / log_a) * (log_x / log_b) + (log_2k - log_j0g) / log_b;
  Interval n_bound = one_eta * (log_b_eps / log_b) * (log_x / log_a) + (log_2k - log_j0u) / log_a;

  mpz_class m_ceil = m_bound.hi().ceil_z();
  mpz_class n_ceil = n_bound.hi().ceil_z();
  if (m_ceil < 0 || n_ceil < 0) {
    w.empty = true;
    return w;
  }
  if (!m_ceil.fits_slong_p() || !n_ceil.fits_slong_p()) {
    throw BadInput("upper window out of machine range");
  }
  w.m_max = m_ceil.get_si();
  w.n_max = n_ceil.get_si();
  return w;
}

Interval matveev_lower_bound_interval(const MatveevInput& input, mpfr_prec_t prec) {
  if (input.t < 1 || input.D < 1 || input.B < 1) {
    throw BadInput("matveev bound needs t >= 1, D >= 1, B >= 1");
  }
  const mpq_class min_a(16, 100);
  for (const auto& a : input.A) {
    if (a.cmp(min_a) < 0) throw BadInput("every A_i must be >= 0.16");
  }
  if (static_cast<int>(input.A.size()) != input.t) {
    throw BadInput("need exactly t height majorants");
  }

  Interval acc = Interval::exact(3L, prec) *
                 Interval::exact(30L, prec).pow_si(input.t + 4) *
                 (Interval::exact(static_cast<long>(input.t) + 1, prec).log() *
                  Interval::point(BigFloat::of(5.5, prec)))
                     .exp() *
                 Interval::exact(input.D, prec).pow_si(2) *
                 (Interval::exact(1L, prec) + Interval::exact(input.D, prec).log()) *
                 (Interval::exact(1L, prec) +
                  (Interval::exact(static_cast<long>(input.t), prec) *
                   Interval::exact(input.B, prec))
                      .log());
  for (const auto& a : input.A) {
    acc = acc * Interval::point(a);
  }
  return acc.neg();
}

BigFloat matveev_lower_bound(const MatveevInput& input, mpfr_prec_t precision_bits) {
  return matveev_lower_bound_interval(input, precision_bits).mid();
}

std::vector<MatveevSample> matveev_check(const MatveevContext& ctx,
                                         const std::vector<std::pair<long, long>>& samples) {
  std::vector<MatveevSample> out;
  out.reserve(samples.size());
  const mpfr_prec_t prec = ctx.precision_bits;

  for (auto [n, m] : samples) {
    MatveevSample sample;
    sample.n = n;
    sample.m = m;

    // Lambda = (a1/b1) alpha^n beta^{-m} - 1 with certified enclosures,
    // escalating precision until the sign of Lambda is certain.
    std::optional<Interval> lambda;
    for (mpfr_prec_t p = prec; p <= 4096; p *= 2) {
      Interval ratio = ctx.a1.round_to(p) / ctx.b1.round_to(p);
      Interval value = ratio * ctx.alpha.round_to(p).pow_si(n) * ctx.beta.round_to(p).pow_si(-m) -
                       Interval::exact(1L, p);
      if (!value.contains_zero()) {
        lambda = value;
        break;
      }
      if (value.is_exact()) {  // exactly zero
        break;
      }
    }
    if (!lambda) {
      sample.status = MatveevSample::Status::ExcludedLambdaZero;
      out.push_back(std::move(sample));
      continue;
    }
    sample.lambda = lambda->mid();

    Interval log_abs = lambda->abs().log();
    sample.log_abs_lambda = log_abs.lo();

    MatveevInput input;
    input.t = 3;
    input.D = ctx.D;
    input.B = std::max({n, m, 1L});
    Interval d_iv = Interval::exact(ctx.D, prec);
    BigFloat a2 = BigFloat::max(
        BigFloat::max((d_iv * Interval::point(ctx.h_alpha)).hi(), ctx.alpha.log().abs().hi()),
        BigFloat::of(0.16, prec));
    BigFloat a3 = BigFloat::max(
        BigFloat::max((d_iv * Interval::point(ctx.h_beta)).hi(), ctx.beta.log().abs().hi()),
        BigFloat::of(0.16, prec));
    // A1 policy: C' log max(n, m), floored by the computable pieces
    long nm = std::max({n, m, 2L});
    Interval gamma1 = ctx.a1 / ctx.b1;
    BigFloat a1 = BigFloat::mul(BigFloat::of(ctx.c_prime, prec),
                                BigFloat::log(BigFloat::of(nm, prec), MPFR_RNDU), MPFR_RNDU);
    a1 = BigFloat::max(a1, gamma1.abs().log().abs().hi());
    a1 = BigFloat::max(a1, BigFloat::of(0.16, prec));
    input.A = {a1, a2, a3};

    Interval bound = matveev_lower_bound_interval(input, prec);
    sample.bound = bound.hi();
    sample.margin = BigFloat::sub(sample.log_abs_lambda, sample.bound, MPFR_RNDD);
    sample.status = sample.log_abs_lambda.cmp(sample.bound) > 0 ? MatveevSample::Status::Pass
                                                                : MatveevSample::Status::Fail;
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace recdiff
