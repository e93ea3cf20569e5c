#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "recdiff/interval.hpp"
#include "recdiff/polynomial.hpp"

namespace recdiff {

// A numerically located root with a certified inclusion disc. The disc of
// `radius` around `value` contains exactly one root of the square-free factor
// the root came from; `multiplicity` is exact (from square-free decomposition).
struct CertifiedRoot {
  Complex value;
  BigFloat radius;  // upper bound, certified
  int multiplicity;

  ComplexInterval enclosure() const;
  Interval modulus() const;  // certified |root| range
};

struct RootProfile {
  std::vector<CertifiedRoot> roots;
  mpfr_prec_t precision_bits = 128;
  std::optional<size_t> dominant_index;  // set when strict dominance certified

  int degree() const;
  bool unique_root() const { return roots.size() == 1; }
  const CertifiedRoot& dominant() const;
  Interval dominant_modulus() const;
  int dominant_multiplicity() const { return dominant().multiplicity; }
  // Largest certified modulus among non-dominant roots; nullopt when unique.
  std::optional<Interval> second_modulus() const;
};

// All complex roots with certified error radii. Multiplicities are exact via
// square-free decomposition; clusters that cannot be separated at this
// precision raise PrecisionExhausted.
RootProfile find_roots(const IntPolynomial& poly, mpfr_prec_t precision_bits);

// find_roots with the escalation policy: doubles precision on
// PrecisionExhausted up to max_bits.
RootProfile find_roots_auto(const IntPolynomial& poly, mpfr_prec_t start_bits = 128,
                            mpfr_prec_t max_bits = 1024);

// The unique root of strictly largest modulus with its multiplicity;
// throws NoDominantRoot on a tie or when unresolved at this precision.
std::pair<CertifiedRoot, int> dominant_root(const RootProfile& profile);

// True iff each dominant root certifiedly exceeds the other profile's
// second-largest modulus (or the other profile has a unique root).
bool mutually_dominant(const RootProfile& profile_u, const RootProfile& profile_g);

}  // namespace recdiff
