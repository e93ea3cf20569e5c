#include "recdiff/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace recdiff {

BigFloat BigFloat::of(long x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(double x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::of(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

mpq_class BigFloat::rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

mpz_class BigFloat::floor_z() const {
  BigFloat t(prec());
  mpfr_floor(t.v_, v_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

mpz_class BigFloat::ceil_z() const {
  BigFloat t(prec());
  mpfr_ceil(t.v_, v_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::str(int significant_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", significant_digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat BigFloat::add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(joint_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, rnd);
  return r;
}

BigFloat BigFloat::sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(joint_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, rnd);
  return r;
}

BigFloat BigFloat::mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(joint_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, rnd);
  return r;
}

BigFloat BigFloat::div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(joint_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, rnd);
  return r;
}

BigFloat BigFloat::neg(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.v_, a.v_, rnd);
  return r;
}

BigFloat BigFloat::log(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.prec());
  mpfr_log(r.v_, a.v_, rnd);
  return r;
}

BigFloat BigFloat::exp(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.prec());
  mpfr_exp(r.v_, a.v_, rnd);
  return r;
}

BigFloat BigFloat::pow_si(const BigFloat& a, long e, mpfr_rnd_t rnd) {
  BigFloat r(a.prec());
  mpfr_pow_si(r.v_, a.v_, e, rnd);
  return r;
}

BigFloat BigFloat::pow(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(joint_prec(a, b));
  mpfr_pow(r.v_, a.v_, b.v_, rnd);
  return r;
}

BigFloat BigFloat::hypot(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(joint_prec(a, b));
  mpfr_hypot(r.v_, a.v_, b.v_, rnd);
  return r;
}

BigFloat BigFloat::min(const BigFloat& a, const BigFloat& b) {
  return a.cmp(b) <= 0 ? a : b;
}

BigFloat BigFloat::max(const BigFloat& a, const BigFloat& b) {
  return a.cmp(b) >= 0 ? a : b;
}

BigFloat BigFloat::ldexp(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::round_to(mpfr_prec_t prec, mpfr_rnd_t rnd) const {
  BigFloat r(prec);
  mpfr_set(r.get(), v_, rnd);
  return r;
}

}  // namespace recdiff
