#include "recdiff/recurrence.hpp"

#include <algorithm>

#include "recdiff/errors.hpp"

namespace recdiff {

RecurrenceSpec::RecurrenceSpec(std::vector<mpz_class> coeffs, std::vector<mpz_class> initial_terms,
                               std::string label)
    : coeffs_(std::move(coeffs)), initial_terms_(std::move(initial_terms)), label_(std::move(label)) {
  if (coeffs_.empty() || initial_terms_.empty()) {
    throw LengthMismatch("recurrence needs at least one coefficient and one initial term");
  }
  if (coeffs_.size() != initial_terms_.size()) {
    throw LengthMismatch("coefficient count (" + std::to_string(coeffs_.size()) +
                         ") != initial term count (" + std::to_string(initial_terms_.size()) + ")");
  }
  bool all_zero = std::all_of(initial_terms_.begin(), initial_terms_.end(),
                              [](const mpz_class& z) { return z == 0; });
  if (all_zero) {
    throw DegenerateSequence("all initial terms zero: sequence is identically zero");
  }
}

RecurrenceSpec make_recurrence(std::vector<mpz_class> coeffs, std::vector<mpz_class> initials,
                               std::string label) {
  return RecurrenceSpec(std::move(coeffs), std::move(initials), std::move(label));
}

TermCache::TermCache(const RecurrenceSpec& spec) : spec_(spec) {
  terms_ = spec.initial_terms();
}

void TermCache::ensure(long n) {
  const int k = spec_.order();
  const auto& xi = spec_.coeffs();
  while (static_cast<long>(terms_.size()) <= n) {
    mpz_class next = 0;
    const size_t base = terms_.size() - static_cast<size_t>(k);
    for (int i = 0; i < k; ++i) {
      next += xi[static_cast<size_t>(i)] * terms_[base + static_cast<size_t>(i)];
    }
    terms_.push_back(std::move(next));
  }
}

mpz_class term(TermCache& cache, long n) {
  if (n < 0) throw BadRange("negative index");
  cache.ensure(n);
  return cache[n];
}

mpz_class term(const RecurrenceSpec& spec, long n) {
  TermCache cache(spec);
  return term(cache, n);
}

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

Matrix identity(int k) {
  Matrix m(static_cast<size_t>(k), std::vector<mpz_class>(static_cast<size_t>(k), 0));
  for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const size_t k = a.size();
  Matrix c(k, std::vector<mpz_class>(k, 0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < k; ++j) {
        c[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return c;
}

}  // namespace

mpz_class term_by_matrix_power(const RecurrenceSpec& spec, long n) {
  if (n < 0) throw BadRange("negative index");
  const int k = spec.order();
  if (n < k) return spec.initial_terms()[static_cast<size_t>(n)];

  // Companion matrix C with state (U_n, ..., U_{n+k-1}): C * state shifts by one.
  Matrix c(static_cast<size_t>(k), std::vector<mpz_class>(static_cast<size_t>(k), 0));
  for (int i = 0; i + 1 < k; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = 1;
  for (int i = 0; i < k; ++i) {
    c[static_cast<size_t>(k - 1)][static_cast<size_t>(i)] = spec.coeffs()[static_cast<size_t>(i)];
  }

  Matrix acc = identity(k);
  Matrix base = c;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1UL) acc = mat_mul(acc, base);
    e >>= 1UL;
    if (e > 0) base = mat_mul(base, base);
  }

  // U_n = first row of C^n applied to the initial state.
  mpz_class result = 0;
  for (int i = 0; i < k; ++i) {
    result += acc[0][static_cast<size_t>(i)] * spec.initial_terms()[static_cast<size_t>(i)];
  }
  return result;
}

std::vector<mpz_class> term_range(TermCache& cache, long n_lo, long n_hi) {
  if (n_lo < 0 || n_lo > n_hi) throw BadRange("need 0 <= n_lo <= n_hi");
  cache.ensure(n_hi);
  std::vector<mpz_class> out;
  out.reserve(static_cast<size_t>(n_hi - n_lo + 1));
  for (long n = n_lo; n <= n_hi; ++n) out.push_back(cache[n]);
  return out;
}

std::vector<mpz_class> term_range(const RecurrenceSpec& spec, long n_lo, long n_hi) {
  TermCache cache(spec);
  return term_range(cache, n_lo, n_hi);
}

std::optional<long> find_monotone_start(TermCache& cache, long search_limit) {
  if (search_limit < cache.spec().order()) {
    throw BadRange("search_limit below the recurrence order");
  }
  cache.ensure(search_limit);
  // N0 = one past the last n < search_limit violating |U_{n+1}| > |U_n| > 0.
  long last_bad = -1;
  for (long n = 0; n < search_limit; ++n) {
    const mpz_class& a = cache[n];
    const mpz_class& b = cache[n + 1];
    if (sgn(a) == 0 || mpz_cmpabs(b.get_mpz_t(), a.get_mpz_t()) <= 0) last_bad = n;
  }
  long n0 = last_bad + 1;
  if (n0 >= search_limit) return std::nullopt;  // no nonempty verified tail
  return n0;
}

std::optional<long> find_monotone_start(const RecurrenceSpec& spec, long search_limit) {
  TermCache cache(spec);
  return find_monotone_start(cache, search_limit);
}

}  // namespace recdiff
