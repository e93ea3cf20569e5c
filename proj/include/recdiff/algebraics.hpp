#pragma once

#include <optional>
#include <vector>

#include "recdiff/interval.hpp"
#include "recdiff/polynomial.hpp"
#include "recdiff/roots.hpp"

namespace recdiff {

// Verdict of the multiplicative-(in)dependence probe for |alpha|, |beta| > 1.
// Dependent(p, q) certifies |alpha|^q = |beta|^p, i.e. log|alpha|/log|beta| = p/q.
// ProbablyIndependent is a semi-decision unless `exact` is set (integer inputs).
struct IndependenceVerdict {
  enum class Kind { Dependent, ProbablyIndependent };
  Kind kind = Kind::ProbablyIndependent;
  long p = 0, q = 0;
  unsigned long denominator_bound = 0;
  mpfr_prec_t certified_precision_bits = 0;
  bool exact = false;

  bool dependent() const { return kind == Kind::Dependent; }
};

IndependenceVerdict multiplicative_independence(const Interval& abs_alpha,
                                                const Interval& abs_beta,
                                                unsigned long denominator_bound,
                                                mpfr_prec_t precision_bits);

// Absolute logarithmic height from the minimal primitive polynomial
// a*(z - z_1)...(z - z_d): h = (log|a| + sum log max(1, |z_j|)) / d.
// The polynomial must be primitive; irreducibility is the caller's contract.
BigFloat height(const IntPolynomial& min_poly, mpfr_prec_t precision_bits);
Interval height_interval(const IntPolynomial& min_poly, mpfr_prec_t precision_bits);

// Coefficients a_i with U_n = sum_i a_i * root_i^n (all roots simple).
// Enclosures are rigorous (interval Vandermonde solve); residual_bound is a
// certified bound on |sum a_i root_i^n - U_n| over the calibration range.
struct BinetCoefficients {
  std::vector<ComplexInterval> coefficients;  // aligned with profile.roots
  size_t dominant_pos = 0;
  BigFloat residual_bound;
  long calibrated_to = 0;

  const ComplexInterval& dominant() const { return coefficients[dominant_pos]; }
  // Real enclosure of the dominant coefficient (dominant roots are real).
  Interval dominant_real() const { return coefficients[dominant_pos].re; }
};

BinetCoefficients binet_coefficients(const RecurrenceSpec& spec, const RootProfile& profile);

// Minimal polynomial of the certified dominant root, when derivable:
// rational roots are split off exactly; remaining factors of degree <= 3 are
// irreducible by the rational-root test; degree-4 remainders are tried against
// integer quadratic splittings. Returns nullopt when the caller must supply it.
std::optional<IntPolynomial> minimal_polynomial_of_dominant(const IntPolynomial& char_poly,
                                                            const RootProfile& profile);

}  // namespace recdiff
