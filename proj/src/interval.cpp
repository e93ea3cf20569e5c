#include "recdiff/interval.hpp"

#include <algorithm>

namespace recdiff {

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_.is_finite() && hi_.is_finite()) || lo_.cmp(hi_) > 0) {
    throw PrecisionExhausted("invalid interval endpoints");
  }
}

Interval Interval::exact(long x, mpfr_prec_t prec) {
  // long always fits a 64-bit-or-wider mpfr exactly at prec >= 64
  BigFloat lo(prec >= 64 ? prec : 64), hi(prec >= 64 ? prec : 64);
  mpfr_set_si(lo.get(), x, MPFR_RNDD);
  mpfr_set_si(hi.get(), x, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exact(const mpz_class& z, mpfr_prec_t prec) {
  return Interval(BigFloat::of(z, prec, MPFR_RNDD), BigFloat::of(z, prec, MPFR_RNDU));
}

Interval Interval::exact(const mpq_class& q, mpfr_prec_t prec) {
  return Interval(BigFloat::of(q, prec, MPFR_RNDD), BigFloat::of(q, prec, MPFR_RNDU));
}

Interval Interval::point(const BigFloat& x) { return Interval(x, x); }

Interval Interval::pi(mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::e(mpfr_prec_t prec) {
  BigFloat one = BigFloat::of(1L, prec);
  return Interval(BigFloat::exp(one, MPFR_RNDD), BigFloat::exp(one, MPFR_RNDU));
}

Interval Interval::ball(const BigFloat& center, const BigFloat& radius) {
  if (radius.sign() < 0) throw PrecisionExhausted("negative ball radius");
  return Interval(BigFloat::sub(center, radius, MPFR_RNDD),
                  BigFloat::add(center, radius, MPFR_RNDU));
}

mpfr_prec_t Interval::prec() const { return std::max(lo_.prec(), hi_.prec()); }

BigFloat Interval::mid() const {
  BigFloat m(prec());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2si(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

BigFloat Interval::width_upper() const { return BigFloat::sub(hi_, lo_, MPFR_RNDU); }

Interval Interval::operator+(const Interval& o) const {
  return Interval(BigFloat::add(lo_, o.lo_, MPFR_RNDD), BigFloat::add(hi_, o.hi_, MPFR_RNDU));
}

Interval Interval::operator-(const Interval& o) const {
  return Interval(BigFloat::sub(lo_, o.hi_, MPFR_RNDD), BigFloat::sub(hi_, o.lo_, MPFR_RNDU));
}

Interval Interval::operator*(const Interval& o) const {
  // min/max over the four endpoint products, rounded outward.
  const BigFloat* as[2] = {&lo_, &hi_};
  const BigFloat* bs[2] = {&o.lo_, &o.hi_};
  BigFloat lo = BigFloat::mul(lo_, o.lo_, MPFR_RNDD);
  BigFloat hi = BigFloat::mul(lo_, o.lo_, MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      lo = BigFloat::min(lo, BigFloat::mul(*as[i], *bs[j], MPFR_RNDD));
      hi = BigFloat::max(hi, BigFloat::mul(*as[i], *bs[j], MPFR_RNDU));
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) {
    throw PrecisionExhausted("interval division by a range containing zero");
  }
  const BigFloat* as[2] = {&lo_, &hi_};
  const BigFloat* bs[2] = {&o.lo_, &o.hi_};
  BigFloat lo = BigFloat::div(lo_, o.lo_, MPFR_RNDD);
  BigFloat hi = BigFloat::div(lo_, o.lo_, MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      lo = BigFloat::min(lo, BigFloat::div(*as[i], *bs[j], MPFR_RNDD));
      hi = BigFloat::max(hi, BigFloat::div(*as[i], *bs[j], MPFR_RNDU));
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::neg() const { return Interval(BigFloat::neg(hi_), BigFloat::neg(lo_)); }

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return neg();
  return Interval(BigFloat::of(0L, prec()), BigFloat::max(BigFloat::neg(lo_), hi_));
}

Interval Interval::sqrt() const {
  if (lo_.sign() < 0) throw PrecisionExhausted("sqrt of a range with negative part");
  return Interval(BigFloat::sqrt(lo_, MPFR_RNDD), BigFloat::sqrt(hi_, MPFR_RNDU));
}

Interval Interval::log() const {
  if (!certainly_positive()) throw PrecisionExhausted("log of a range not certainly positive");
  return Interval(BigFloat::log(lo_, MPFR_RNDD), BigFloat::log(hi_, MPFR_RNDU));
}

Interval Interval::exp() const {
  return Interval(BigFloat::exp(lo_, MPFR_RNDD), BigFloat::exp(hi_, MPFR_RNDU));
}

Interval Interval::pow_si(long e) const {
  if (e == 0) return Interval::exact(1L, prec());
  if (lo_.sign() >= 0) {
    // monotone on nonnegative base
    if (e > 0) {
      return Interval(BigFloat::pow_si(lo_, e, MPFR_RNDD), BigFloat::pow_si(hi_, e, MPFR_RNDU));
    }
    if (!certainly_positive()) throw PrecisionExhausted("negative power of a range touching zero");
    return Interval(BigFloat::pow_si(hi_, e, MPFR_RNDD), BigFloat::pow_si(lo_, e, MPFR_RNDU));
  }
  if (e > 0 && hi_.sign() <= 0) {
    // negative base, integer power: map through the sign.
    Interval p = neg().pow_si(e);
    return (e % 2 == 0) ? p : p.neg();
  }
  if (e > 0) {
    // straddles zero: even powers in [0, max^e], odd powers in [lo^e, hi^e]
    if (e % 2 != 0) {
      return Interval(BigFloat::pow_si(lo_, e, MPFR_RNDD), BigFloat::pow_si(hi_, e, MPFR_RNDU));
    }
    BigFloat m = BigFloat::max(BigFloat::neg(lo_), hi_);
    return Interval(BigFloat::of(0L, prec()), BigFloat::pow_si(m, e, MPFR_RNDU));
  }
  throw PrecisionExhausted("negative power of a range containing zero");
}

Interval Interval::square() const { return pow_si(2); }

bool Interval::contains(const mpq_class& q) const {
  return lo_.cmp(q) <= 0 && hi_.cmp(q) >= 0;
}

std::optional<bool> Interval::certainly_less(const Interval& o) const {
  if (hi_.cmp(o.lo_) < 0) return true;
  if (lo_.cmp(o.hi_) > 0) return false;
  return std::nullopt;
}

int Interval::position_of(const mpq_class& q) const {
  if (hi_.cmp(q) < 0) return -1;
  if (lo_.cmp(q) > 0) return 1;
  return 0;
}

int Interval::position_of(const mpz_class& z) const {
  if (hi_.cmp(z) < 0) return -1;
  if (lo_.cmp(z) > 0) return 1;
  return 0;
}

Interval Interval::round_to(mpfr_prec_t prec) const {
  return Interval(lo_.round_to(prec, MPFR_RNDD), hi_.round_to(prec, MPFR_RNDU));
}

ComplexInterval ComplexInterval::exact(const mpz_class& z, mpfr_prec_t prec) {
  return ComplexInterval(Interval::exact(z, prec), Interval::exact(0L, prec));
}

ComplexInterval ComplexInterval::real(Interval r, mpfr_prec_t prec) {
  return ComplexInterval(std::move(r), Interval::exact(0L, prec));
}

ComplexInterval ComplexInterval::operator+(const ComplexInterval& o) const {
  return ComplexInterval(re + o.re, im + o.im);
}

ComplexInterval ComplexInterval::operator-(const ComplexInterval& o) const {
  return ComplexInterval(re - o.re, im - o.im);
}

ComplexInterval ComplexInterval::operator*(const ComplexInterval& o) const {
  return ComplexInterval(re * o.re - im * o.im, re * o.im + im * o.re);
}

ComplexInterval ComplexInterval::operator/(const ComplexInterval& o) const {
  Interval n = o.abs_sq();
  if (n.contains_zero()) {
    throw PrecisionExhausted("complex interval division by a range containing zero");
  }
  return ComplexInterval((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
}

ComplexInterval ComplexInterval::neg() const { return ComplexInterval(re.neg(), im.neg()); }

Interval ComplexInterval::abs_sq() const { return re.square() + im.square(); }

Interval ComplexInterval::abs() const { return abs_sq().sqrt(); }

}  // namespace recdiff
