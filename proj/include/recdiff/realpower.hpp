#pragma once

#include <string>
#include <vector>

#include "recdiff/interval.hpp"

namespace recdiff {

// Base for the real-power census, given as a tiny expression so it can be
// re-evaluated at any precision: INT, INT/INT, "pi", "e", "sqrt(INT)".
struct RealBase {
  enum class Kind { Integer, Rational, Pi, E, Sqrt };
  Kind kind = Kind::Integer;
  mpz_class a, b;  // integer value, rational a/b, or sqrt(a)

  Interval eval(mpfr_prec_t prec) const;
  std::string str() const;
  bool exact_integer() const { return kind == Kind::Integer; }
};

RealBase parse_real_base(const std::string& text);

struct RealCensusResult {
  mpz_class x;
  unsigned long S = 0;
  long n_max = 0, m_max = 0;
  BigFloat asymptotic;  // (log x)^2 / (log alpha log beta)
  BigFloat ratio_S;
  std::vector<std::pair<long, long>> ambiguous;  // undecidable at max precision
  mpfr_prec_t max_precision_used = 0;
};

// Count pairs (n, m) in N x N with |alpha^n - beta^m| <= x using certified
// interval evaluation; ambiguous pairs are recounted at doubled precision and
// reported (never silently miscounted) if still undecided at the cap.
RealCensusResult real_power_census(const RealBase& alpha, const RealBase& beta,
                                   const mpz_class& x, mpfr_prec_t precision_bits);

}  // namespace recdiff
