#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace recdiff {

// Exact integer linear recurrence U_{n+k} = sum_i coeffs[i] * U_{n+i},
// fully determined by the coefficients and the k initial terms.
class RecurrenceSpec {
 public:
  RecurrenceSpec(std::vector<mpz_class> coeffs, std::vector<mpz_class> initial_terms,
                 std::string label);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const std::vector<mpz_class>& initial_terms() const { return initial_terms_; }
  const std::string& label() const { return label_; }

  std::optional<long> start_index() const { return start_index_; }
  void set_start_index(long n0) { start_index_ = n0; }

 private:
  std::vector<mpz_class> coeffs_;
  std::vector<mpz_class> initial_terms_;
  std::string label_;
  std::optional<long> start_index_;
};

RecurrenceSpec make_recurrence(std::vector<mpz_class> coeffs, std::vector<mpz_class> initials,
                               std::string label);

// Contiguous cache of exact terms U_0..U_N. Growth is single-writer;
// a fully extended cache is safe to read from many threads.
class TermCache {
 public:
  explicit TermCache(const RecurrenceSpec& spec);

  const RecurrenceSpec& spec() const { return spec_; }
  // Extend the cache so terms 0..n are available.
  void ensure(long n);
  long size() const { return static_cast<long>(terms_.size()); }
  const mpz_class& operator[](long n) const { return terms_[static_cast<size_t>(n)]; }

 private:
  const RecurrenceSpec& spec_;
  std::vector<mpz_class> terms_;
};

// n-th term by forward iteration (cached).
mpz_class term(TermCache& cache, long n);
mpz_class term(const RecurrenceSpec& spec, long n);

// n-th term by k x k companion-matrix exponentiation over exact integers.
// Agrees with iteration everywhere; preferred for isolated large n.
mpz_class term_by_matrix_power(const RecurrenceSpec& spec, long n);

std::vector<mpz_class> term_range(TermCache& cache, long n_lo, long n_hi);
std::vector<mpz_class> term_range(const RecurrenceSpec& spec, long n_lo, long n_hi);

// Least N0 <= search_limit with |U_{n+1}| > |U_n| > 0 for all N0 <= n < search_limit.
// The certificate is scan-verified up to search_limit only. nullopt when every
// candidate start fails (the property must hold on a nonempty tail).
std::optional<long> find_monotone_start(TermCache& cache, long search_limit);
std::optional<long> find_monotone_start(const RecurrenceSpec& spec, long search_limit);

}  // namespace recdiff
