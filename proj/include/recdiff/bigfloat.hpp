#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace recdiff {

// RAII wrapper over mpfr_t. Every value carries its own precision; arithmetic
// takes an explicit rounding mode so callers can build certified one-sided
// bounds. Copy/assign preserve the source value exactly.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long x, mpfr_prec_t prec);
  static BigFloat of(double x, mpfr_prec_t prec);
  static BigFloat of(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat of(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_integer() const { return mpfr_integer_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(long x) const { return mpfr_cmp_si(v_, x); }
  int cmp(const mpz_class& z) const { return mpfr_cmp_z(v_, z.get_mpz_t()); }
  int cmp(const mpq_class& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
  bool equals(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

  // Exact rational value of this float (finite values only).
  mpq_class rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  mpz_class floor_z() const;
  mpz_class ceil_z() const;

  std::string str(int significant_digits = 17) const;

  // Directed arithmetic: result precision defaults to max of operands.
  static BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat neg(const BigFloat& a);
  static BigFloat abs(const BigFloat& a);
  static BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd);
  static BigFloat log(const BigFloat& a, mpfr_rnd_t rnd);
  static BigFloat exp(const BigFloat& a, mpfr_rnd_t rnd);
  static BigFloat pow_si(const BigFloat& a, long e, mpfr_rnd_t rnd);
  static BigFloat pow(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat hypot(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat min(const BigFloat& a, const BigFloat& b);
  static BigFloat max(const BigFloat& a, const BigFloat& b);
  static BigFloat ldexp(const BigFloat& a, long e);  // a * 2^e, exact

  // Round to a different working precision.
  BigFloat round_to(mpfr_prec_t prec, mpfr_rnd_t rnd) const;

 private:
  mpfr_t v_;
};

}  // namespace recdiff
