#include "recdiff/realpower.hpp"

#include <algorithm>
#include <cctype>

#include "recdiff/errors.hpp"

namespace recdiff {

Interval RealBase::eval(mpfr_prec_t prec) const {
  switch (kind) {
    case Kind::Integer:
      return Interval::exact(a, prec);
    case Kind::Rational:
      return Interval::exact(mpq_class(a, b), prec);
    case Kind::Pi:
      return Interval::pi(prec);
    case Kind::E:
      return Interval::e(prec);
    case Kind::Sqrt:
      return Interval::exact(a, prec).sqrt();
  }
  throw BadInput("unknown base kind");
}

std::string RealBase::str() const {
  switch (kind) {
    case Kind::Integer:
      return a.get_str();
    case Kind::Rational:
      return a.get_str() + "/" + b.get_str();
    case Kind::Pi:
      return "pi";
    case Kind::E:
      return "e";
    case Kind::Sqrt:
      return "sqrt(" + a.get_str() + ")";
  }
  return "?";
}

RealBase parse_real_base(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  RealBase base;
  if (s == "pi") {
    base.kind = RealBase::Kind::Pi;
    return base;
  }
  if (s == "e") {
    base.kind = RealBase::Kind::E;
    return base;
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(5, s.size() - 6);
    if (!is_int(inner)) throw BadInput("sqrt argument must be an integer: " + text);
    base.kind = RealBase::Kind::Sqrt;
    base.a = mpz_class(inner);
    if (base.a < 0) throw BadInput("sqrt argument must be nonnegative: " + text);
    return base;
  }
  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw BadInput("bad rational base: " + text);
    base.kind = RealBase::Kind::Rational;
    base.a = mpz_class(num);
    base.b = mpz_class(den);
    if (base.b == 0) throw BadInput("zero denominator: " + text);
    return base;
  }
  if (!is_int(s)) throw BadInput("unrecognized base expression: " + text);
  base.kind = RealBase::Kind::Integer;
  base.a = mpz_class(s);
  return base;
}

namespace {

// Certified |alpha^n - beta^m| <= x test, escalating precision until decided.
// Returns nullopt when undecidable at the precision cap (e.g. an exact tie on
// irrational bases).
std::optional<bool> pair_within(const RealBase& alpha, const RealBase& beta, long n, long m,
                                const mpz_class& x, mpfr_prec_t start, mpfr_prec_t cap,
                                mpfr_prec_t& used) {
  for (mpfr_prec_t p = start; p <= cap; p *= 2) {
    used = std::max(used, p);
    Interval diff = alpha.eval(p).pow_si(n) - beta.eval(p).pow_si(m);
    Interval gap = diff.abs();
    int pos = gap.position_of(x);
    if (pos < 0) return true;   // |a^n - b^m| certifiedly < x
    if (pos > 0) return false;  // certifiedly > x
    if (gap.is_exact()) return true;  // exactly on the boundary (dyadic case)
  }
  return std::nullopt;
}

// Least k with base^{k+1} certifiedly > threshold.
long power_cutoff(const RealBase& base, const mpz_class& threshold, mpfr_prec_t prec) {
  long k = 0;
  while (true) {
    Interval p = base.eval(prec).pow_si(k + 1);
    if (p.lo().cmp(threshold) > 0) return k;
    if (p.hi().cmp(threshold) <= 0) {
      ++k;
      if (k > 1000000) throw CertificateExhausted("real-power exclusion scan exceeded its cap");
      continue;
    }
    prec *= 2;  // boundary unresolved; retry sharper
    if (prec > 1 << 16) throw PrecisionExhausted("real-power cutoff undecidable");
  }
}

}  // namespace

RealCensusResult real_power_census(const RealBase& alpha, const RealBase& beta,
                                   const mpz_class& x, mpfr_prec_t precision_bits) {
  const mpfr_prec_t prec = precision_bits;
  Interval a = alpha.eval(prec), b = beta.eval(prec);
  if (!(a.lo().cmp(1L) > 0) || !(b.lo().cmp(1L) > 0)) {
    throw BadInput("real-power census needs bases > 1");
  }
  if (x < 1) throw BadX("census threshold must be >= 1");

  RealCensusResult result;
  result.x = x;
  result.max_precision_used = prec;

  // Mutual exclusion box, same shape as the recurrence census: alpha^n is
  // strictly increasing, so one certified cutoff bounds the tail.
  long n_max = 0, m_max = 0;
  for (int iter = 0; iter < 200; ++iter) {
    // max alpha^n over [0, n_max] is alpha^{n_max}
    mpz_class max_u = a.pow_si(n_max).hi().ceil_z();
    long m_next = power_cutoff(beta, x + max_u, prec);
    mpz_class max_g = b.pow_si(std::max(m_next, m_max)).hi().ceil_z();
    long n_next = power_cutoff(alpha, x + max_g, prec);
    if (n_next <= n_max && m_next <= m_max) break;
    n_max = std::max(n_max, n_next);
    m_max = std::max(m_max, m_next);
    if (iter == 199) throw CertificateExhausted("real-power exclusion fixpoint did not converge");
  }
  result.n_max = n_max;
  result.m_max = m_max;

  const mpfr_prec_t cap = 1 << 14;
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= m_max; ++m) {
      mpfr_prec_t used = prec;
      auto inside = pair_within(alpha, beta, n, m, x, prec, cap, used);
      result.max_precision_used = std::max(result.max_precision_used, used);
      if (!inside.has_value()) {
        result.ambiguous.emplace_back(n, m);
      } else if (*inside) {
        result.S += 1;
      }
    }
  }

  if (x >= 3) {
    Interval log_x = Interval::exact(x, prec).log();
    Interval asym = (log_x * log_x) / (a.log() * b.log());
    result.asymptotic = asym.mid();
    result.ratio_S = (Interval::exact(static_cast<long>(result.S), prec) / asym).mid();
  }
  return result;
}

}  // namespace recdiff
