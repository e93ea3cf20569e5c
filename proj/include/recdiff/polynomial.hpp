#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "recdiff/complexnum.hpp"
#include "recdiff/interval.hpp"
#include "recdiff/recurrence.hpp"

namespace recdiff {

// Integer-coefficient polynomial, constant term first, leading coefficient
// nonzero. The zero polynomial is not representable.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPolynomial derivative() const;
  mpz_class content() const;                 // gcd of coefficients (positive)
  bool is_primitive() const { return content() == 1; }
  IntPolynomial primitive_part() const;      // content 1, positive leading coeff

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  Complex eval(const Complex& z) const;
  Complex eval_derivative(const Complex& z) const;
  ComplexInterval eval(const ComplexInterval& z, mpfr_prec_t prec) const;

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  std::string str(const std::string& var = "x") const;

 private:
  std::vector<mpz_class> c_;
};

// f(X) = X^k - sum_i coeffs[i] X^i for the recurrence U_{n+k} = sum coeffs[i] U_{n+i}.
IntPolynomial characteristic_polynomial(const RecurrenceSpec& spec);

// Square-free factor together with its multiplicity in the original polynomial.
struct SquareFreeFactor {
  IntPolynomial factor;  // primitive, positive leading coefficient
  int multiplicity;
};

// Yun decomposition over Q, factors returned primitive over Z.
// Constant polynomials decompose to an empty list.
std::vector<SquareFreeFactor> squarefree_decomposition(const IntPolynomial& poly);

// All rational roots (exact, via the rational root theorem), in lowest terms.
std::vector<mpq_class> rational_roots(const IntPolynomial& poly);

// Quotient poly / (x - r) for an exact rational root r; throws if r is not a root.
IntPolynomial deflate_rational_root(const IntPolynomial& poly, const mpq_class& r);

// Exact quotient of integer polynomials; throws BadInput when not divisible over Q.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

}  // namespace recdiff
