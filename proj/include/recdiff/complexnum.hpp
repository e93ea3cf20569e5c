#pragma once

#include "recdiff/bigfloat.hpp"

namespace recdiff {

// Point complex number at working precision, round-to-nearest arithmetic.
// Used by the simultaneous root iteration; certified bounds come from
// ComplexInterval afterwards.
struct Complex {
  BigFloat re, im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  static Complex of(double r, double i, mpfr_prec_t prec) {
    return Complex(BigFloat::of(r, prec), BigFloat::of(i, prec));
  }

  Complex operator+(const Complex& o) const {
    return Complex(BigFloat::add(re, o.re, MPFR_RNDN), BigFloat::add(im, o.im, MPFR_RNDN));
  }
  Complex operator-(const Complex& o) const {
    return Complex(BigFloat::sub(re, o.re, MPFR_RNDN), BigFloat::sub(im, o.im, MPFR_RNDN));
  }
  Complex operator*(const Complex& o) const {
    BigFloat ac = BigFloat::mul(re, o.re, MPFR_RNDN);
    BigFloat bd = BigFloat::mul(im, o.im, MPFR_RNDN);
    BigFloat ad = BigFloat::mul(re, o.im, MPFR_RNDN);
    BigFloat bc = BigFloat::mul(im, o.re, MPFR_RNDN);
    return Complex(BigFloat::sub(ac, bd, MPFR_RNDN), BigFloat::add(ad, bc, MPFR_RNDN));
  }
  Complex operator/(const Complex& o) const {
    BigFloat n = o.norm_sq();
    BigFloat ac = BigFloat::mul(re, o.re, MPFR_RNDN);
    BigFloat bd = BigFloat::mul(im, o.im, MPFR_RNDN);
    BigFloat bc = BigFloat::mul(im, o.re, MPFR_RNDN);
    BigFloat ad = BigFloat::mul(re, o.im, MPFR_RNDN);
    return Complex(BigFloat::div(BigFloat::add(ac, bd, MPFR_RNDN), n, MPFR_RNDN),
                   BigFloat::div(BigFloat::sub(bc, ad, MPFR_RNDN), n, MPFR_RNDN));
  }

  BigFloat norm_sq() const {
    return BigFloat::add(BigFloat::mul(re, re, MPFR_RNDN), BigFloat::mul(im, im, MPFR_RNDN),
                         MPFR_RNDN);
  }
  BigFloat abs() const { return BigFloat::hypot(re, im, MPFR_RNDN); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  mpfr_prec_t prec() const { return re.prec(); }
};

}  // namespace recdiff
