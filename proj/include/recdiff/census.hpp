#pragma once

#include <map>
#include <vector>

#include "recdiff/bounds.hpp"
#include "recdiff/recurrence.hpp"
#include "recdiff/roots.hpp"

namespace recdiff {

// One configured sequence pair with shared caches and resolved start indices.
// Caches are extended up front by the census entry points; enumeration workers
// only read them.
struct SequencePair {
  RecurrenceSpec u, g;
  TermCache cache_u, cache_g;
  long n0 = 0, m0 = 0;  // counting start indices

  SequencePair(RecurrenceSpec u_spec, RecurrenceSpec g_spec)
      : u(std::move(u_spec)), g(std::move(g_spec)), cache_u(u), cache_g(g) {}

  // Auto-detect start indices by monotone scan; throws CertificateExhausted
  // when a sequence has no verified strictly-increasing tail.
  void resolve_start_indices(long search_limit = 2000);
};

struct CensusResult {
  mpz_class x;
  unsigned long S = 0, R = 0;
  unsigned long S_from0 = 0, R_from0 = 0;  // convention counting from n = m = 0
  long n_max = 0, m_max = 0;
  bool complete = false;
  BigFloat asymptotic;  // (log x)^2 / (log|alpha| log|beta|)
  BigFloat ratio_S, ratio_R;
};

struct MultiRepRecord {
  mpz_class c;
  std::vector<std::pair<long, long>> representations;  // (n, m), length >= 2
};

struct MultiRepReport {
  std::vector<MultiRepRecord> records;  // sorted by |c|, then c
  bool stable = false;                  // identical against the enlarged window
  bool degenerate_pair = false;         // dominant moduli multiplicatively dependent
  long check_n_max = 0, check_m_max = 0;
  std::vector<mpz_class> unstable_c;    // records present in one window only
};

struct ConvergenceRow {
  CensusResult census;
  mpz_class lower_bound_count;  // clamped pair count of the section-3.1 box
  mpz_class upper_window_area;  // pair count of the asymptotic exclusion box
  long lower_n_max = -1, lower_m_max = -1;
  long upper_n_max = -1, upper_m_max = -1;
};

// Exhaustive box for |U_n - G_m| <= x: past n_max every |U_n| exceeds
// x + max_{m <= m_max} |G_m| and symmetrically (exact scans, strict growth
// verified along the way). Completeness beyond the box rests on the pair's
// mutual-dominance and independence hypotheses.
SearchWindow safe_window(SequencePair& pair, const mpz_class& x);

// Exact double-loop count over the window. The result is flagged complete
// only when the window is a safe_window-style certified box.
CensusResult count_pairs(SequencePair& pair, const mpz_class& x, const SearchWindow& window,
                         long n0, long m0, int workers = 1);
CensusResult count_distinct(SequencePair& pair, const mpz_class& x, const SearchWindow& window,
                            long n0, long m0, int workers = 1);

// Shared enumeration: pair count, distinct-c count, both index conventions.
CensusResult census_count(SequencePair& pair, const mpz_class& x, const SearchWindow& window,
                          long n0, long m0, int workers = 1);

// All c with >= 2 representations inside the window and |c| <= c_limit,
// plus a stability comparison against a strictly larger window.
MultiRepReport multi_representations(SequencePair& pair, const SearchWindow& window,
                                     const mpz_class& c_limit, long n0, long m0, int workers = 1);

// Per-x census with the section-3.1 lower box count and the section-3.2
// candidate box area as diagnostics.
std::vector<ConvergenceRow> convergence_table(SequencePair& pair,
                                              const std::vector<mpz_class>& x_grid, long n0,
                                              long m0, double eta, long envelope_fit_range = 500,
                                              int workers = 1);

// Attach the dominant moduli needed for asymptotic columns.
struct PairRoots {
  RootProfile profile_u, profile_g;
  Interval abs_alpha, abs_beta;
};
PairRoots analyze_roots(const SequencePair& pair, mpfr_prec_t precision_bits);

void fill_asymptotics(CensusResult& result, const Interval& abs_alpha, const Interval& abs_beta);

}  // namespace recdiff
