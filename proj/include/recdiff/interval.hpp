#pragma once

#include <optional>

#include "recdiff/bigfloat.hpp"
#include "recdiff/errors.hpp"

namespace recdiff {

// Closed real interval [lo, hi] with outward-rounded endpoint arithmetic.
// Every endpoint is an exact rational (an MPFR value), so comparisons against
// exact integers and rationals are certified. Operations never narrow the
// true range.
class Interval {
 public:
  Interval() : lo_(), hi_() {}
  Interval(BigFloat lo, BigFloat hi);

  static Interval exact(long x, mpfr_prec_t prec);
  static Interval exact(const mpz_class& z, mpfr_prec_t prec);
  static Interval exact(const mpq_class& q, mpfr_prec_t prec);
  static Interval point(const BigFloat& x);      // degenerate [x, x]
  static Interval pi(mpfr_prec_t prec);
  static Interval e(mpfr_prec_t prec);
  // [center - radius, center + radius], outward rounded.
  static Interval ball(const BigFloat& center, const BigFloat& radius);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t prec() const;
  BigFloat mid() const;
  BigFloat width_upper() const;

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  // Divisor must be certified nonzero; throws PrecisionExhausted otherwise.
  Interval operator/(const Interval& o) const;
  Interval neg() const;
  Interval abs() const;
  Interval sqrt() const;  // requires lo >= 0
  Interval log() const;   // requires certainly positive
  Interval exp() const;
  // x^e for a certainly-positive base (any integer e) or e >= 0 with
  // a nonnegative base.
  Interval pow_si(long e) const;
  Interval square() const;

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_negative() const { return hi_.sign() < 0; }
  bool contains(const mpq_class& q) const;
  bool is_exact() const { return lo_.equals(hi_); }

  // Certified strict order against another interval: true if this < o
  // everywhere, false if this > o everywhere, nullopt when overlapping.
  std::optional<bool> certainly_less(const Interval& o) const;

  // Certified three-way comparison against an exact rational:
  // -1 if hi < q, +1 if lo > q, 0 if q inside, nullopt never.
  int position_of(const mpq_class& q) const;
  int position_of(const mpz_class& z) const;

  // Widen endpoints to a target precision (outward).
  Interval round_to(mpfr_prec_t prec) const;

 private:
  BigFloat lo_, hi_;
};

// Rectangular complex interval: re + i*im with real intervals for each part.
struct ComplexInterval {
  Interval re, im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval exact(const mpz_class& z, mpfr_prec_t prec);
  static ComplexInterval real(Interval r, mpfr_prec_t prec);

  ComplexInterval operator+(const ComplexInterval& o) const;
  ComplexInterval operator-(const ComplexInterval& o) const;
  ComplexInterval operator*(const ComplexInterval& o) const;
  ComplexInterval operator/(const ComplexInterval& o) const;
  ComplexInterval neg() const;

  Interval abs_sq() const;
  Interval abs() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

}  // namespace recdiff
