#include "recdiff/census.hpp"

#include <algorithm>
#include <thread>

#include "recdiff/errors.hpp"

namespace recdiff {

void SequencePair::resolve_start_indices(long search_limit) {
  auto n0_found = find_monotone_start(cache_u, search_limit);
  auto m0_found = find_monotone_start(cache_g, search_limit);
  if (!n0_found || !m0_found) {
    throw CertificateExhausted(
        "no strictly-increasing tail found by scan; supply start indices explicitly");
  }
  n0 = *n0_found;
  m0 = *m0_found;
  u.set_start_index(n0);
  g.set_start_index(m0);
}

namespace {

// max |terms[i]| over [lo, hi]
mpz_class max_abs_term(const TermCache& cache, long lo, long hi) {
  mpz_class best = 0;
  for (long i = lo; i <= hi; ++i) {
    mpz_class a = abs(cache[i]);
    if (a > best) best = a;
  }
  return best;
}

// Least n* >= start with |U_{n*+1}| > threshold, requiring |U| strictly
// increasing along the walk past `start`. scan_cap bounds the search.
long exclusion_cutoff(TermCache& cache, long start, const mpz_class& threshold, long scan_cap) {
  long n = start;
  cache.ensure(n + 1);
  while (mpz_cmpabs(cache[n + 1].get_mpz_t(), threshold.get_mpz_t()) <= 0) {
    ++n;
    if (n > scan_cap) {
      throw CertificateExhausted("exclusion scan exceeded its cap; pair may be degenerate");
    }
    cache.ensure(n + 1);
    // The box relies on growth past the cutoff, so the certificate must keep
    // holding through the scanned stretch.
    if (mpz_cmpabs(cache[n + 1].get_mpz_t(), cache[n].get_mpz_t()) <= 0) {
      throw CertificateExhausted("strict growth failed inside the exclusion scan");
    }
  }
  return n;
}

}  // namespace

SearchWindow safe_window(SequencePair& pair, const mpz_class& x) {
  if (x < 0) throw BadX("negative census threshold");
  const long scan_cap = 1000000;

  // Fixpoint of the mutual exclusion inequalities, starting at the counting
  // origins and growing monotonically. Term maxima run from index 0 so the
  // box is exhaustive for both counting conventions.
  long n_max = pair.n0, m_max = pair.m0;
  for (int iter = 0; iter < 200; ++iter) {
    mpz_class max_u = max_abs_term(pair.cache_u, 0, n_max);
    long m_next = exclusion_cutoff(pair.cache_g, pair.m0, x + max_u, scan_cap);
    mpz_class max_g = max_abs_term(pair.cache_g, 0, std::max(m_next, m_max));
    long n_next = exclusion_cutoff(pair.cache_u, pair.n0, x + max_g, scan_cap);
    if (n_next <= n_max && m_next <= m_max) {
      SearchWindow w;
      w.kind = SearchWindow::Kind::UpperBound;
      w.x = x;
      w.n_max = n_max;
      w.m_max = m_max;
      w.certified_exhaustive = true;
      w.epsilon_note = "exact exclusion scan";
      return w;
    }
    n_max = std::max(n_max, n_next);
    m_max = std::max(m_max, m_next);
  }
  throw CertificateExhausted("exclusion fixpoint did not converge; pair may be degenerate");
}

namespace {

struct WorkerOutcome {
  unsigned long s = 0, s_from0 = 0;
  std::vector<mpz_class> cs, cs_from0;  // may contain duplicates
  std::map<mpz_class, std::vector<std::pair<long, long>>> reps;
};

// Count solutions for n in [n_lo, n_hi], all m in [0, m_max].
WorkerOutcome enumerate_strip(const TermCache& cache_u, const TermCache& cache_g,
                              const mpz_class& x, long n_lo, long n_hi, long m_max, long n0,
                              long m0, bool collect_reps, const mpz_class& rep_limit) {
  WorkerOutcome out;
  mpz_class c;
  for (long n = n_lo; n <= n_hi; ++n) {
    const mpz_class& u = cache_u[n];
    for (long m = 0; m <= m_max; ++m) {
      c = u - cache_g[m];
      if (mpz_cmpabs(c.get_mpz_t(), x.get_mpz_t()) > 0) continue;
      out.s_from0 += 1;
      out.cs_from0.push_back(c);
      if (n >= n0 && m >= m0) {
        out.s += 1;
        out.cs.push_back(c);
        if (collect_reps && mpz_cmpabs(c.get_mpz_t(), rep_limit.get_mpz_t()) <= 0) {
          out.reps[c].emplace_back(n, m);
        }
      }
    }
  }
  return out;
}

unsigned long count_unique(std::vector<mpz_class>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return static_cast<unsigned long>(v.size());
}

struct EnumerationTotals {
  unsigned long s = 0, s_from0 = 0, r = 0, r_from0 = 0;
  std::map<mpz_class, std::vector<std::pair<long, long>>> reps;
};

EnumerationTotals enumerate_window(SequencePair& pair, const mpz_class& x,
                                   const SearchWindow& window, long n0, long m0, int workers,
                                   bool collect_reps, const mpz_class& rep_limit) {
  EnumerationTotals totals;
  if (window.empty) return totals;
  const long n_max = window.n_max, m_max = window.m_max;
  pair.cache_u.ensure(n_max);
  pair.cache_g.ensure(m_max);

  workers = std::max(1, workers);
  const long span = n_max + 1;
  const int used = static_cast<int>(std::min<long>(workers, span));
  std::vector<WorkerOutcome> outcomes(static_cast<size_t>(used));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(used));
  for (int w = 0; w < used; ++w) {
    const long lo = span * w / used;
    const long hi = span * (w + 1) / used - 1;
    threads.emplace_back([&, w, lo, hi]() {
      outcomes[static_cast<size_t>(w)] = enumerate_strip(
          pair.cache_u, pair.cache_g, x, lo, hi, m_max, n0, m0, collect_reps, rep_limit);
    });
  }
  for (auto& t : threads) t.join();

  std::vector<mpz_class> all_c, all_c_from0;
  for (auto& o : outcomes) {
    totals.s += o.s;
    totals.s_from0 += o.s_from0;
    all_c.insert(all_c.end(), o.cs.begin(), o.cs.end());
    all_c_from0.insert(all_c_from0.end(), o.cs_from0.begin(), o.cs_from0.end());
    for (auto& [c, rs] : o.reps) {
      auto& dst = totals.reps[c];
      dst.insert(dst.end(), rs.begin(), rs.end());
    }
  }
  totals.r = count_unique(all_c);
  totals.r_from0 = count_unique(all_c_from0);
  for (auto& [c, rs] : totals.reps) std::sort(rs.begin(), rs.end());
  return totals;
}

}  // namespace

CensusResult census_count(SequencePair& pair, const mpz_class& x, const SearchWindow& window,
                          long n0, long m0, int workers) {
  EnumerationTotals totals = enumerate_window(pair, x, window, n0, m0, workers,
                                              /*collect_reps=*/false, 0);
  CensusResult result;
  result.x = x;
  result.S = totals.s;
  result.R = totals.r;
  result.S_from0 = totals.s_from0;
  result.R_from0 = totals.r_from0;
  result.n_max = window.empty ? -1 : window.n_max;
  result.m_max = window.empty ? -1 : window.m_max;
  result.complete = window.certified_exhaustive;
  return result;
}

CensusResult count_pairs(SequencePair& pair, const mpz_class& x, const SearchWindow& window,
                         long n0, long m0, int workers) {
  return census_count(pair, x, window, n0, m0, workers);
}

CensusResult count_distinct(SequencePair& pair, const mpz_class& x, const SearchWindow& window,
                            long n0, long m0, int workers) {
  return census_count(pair, x, window, n0, m0, workers);
}

MultiRepReport multi_representations(SequencePair& pair, const SearchWindow& window,
                                     const mpz_class& c_limit, long n0, long m0, int workers) {
  MultiRepReport report;
  if (c_limit < 0) throw BadX("negative |c| limit");

  auto collect = [&](const SearchWindow& w) {
    // x filter wide open inside the box; the |c| <= c_limit filter is what matters
    mpz_class huge = c_limit;
    EnumerationTotals totals =
        enumerate_window(pair, huge, w, n0, m0, workers, /*collect_reps=*/true, c_limit);
    std::vector<MultiRepRecord> records;
    for (auto& [c, rs] : totals.reps) {
      if (rs.size() >= 2) records.push_back({c, rs});
    }
    std::sort(records.begin(), records.end(), [](const MultiRepRecord& a, const MultiRepRecord& b) {
      mpz_class aa = abs(a.c), bb = abs(b.c);
      if (aa != bb) return aa < bb;
      return a.c < b.c;
    });
    return records;
  };

  report.records = collect(window);

  // Stability: re-run on a strictly larger window.
  SearchWindow bigger = window;
  if (!bigger.empty) {
    bigger.n_max = window.n_max + window.n_max / 3 + 8;
    bigger.m_max = window.m_max + window.m_max / 3 + 8;
  }
  report.check_n_max = bigger.n_max;
  report.check_m_max = bigger.m_max;
  std::vector<MultiRepRecord> larger = collect(bigger);

  auto key_set = [](const std::vector<MultiRepRecord>& rs) {
    std::vector<mpz_class> keys;
    keys.reserve(rs.size());
    for (const auto& r : rs) keys.push_back(r.c);
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  std::vector<mpz_class> k1 = key_set(report.records), k2 = key_set(larger);
  report.stable = (k1 == k2);
  std::set_symmetric_difference(k1.begin(), k1.end(), k2.begin(), k2.end(),
                                std::back_inserter(report.unstable_c));

  // Degeneracy probe: dependent dominant moduli make c-collisions systematic.
  try {
    PairRoots roots = analyze_roots(pair, 128);
    IndependenceVerdict verdict =
        multiplicative_independence(roots.abs_alpha, roots.abs_beta, 1000, 128);
    report.degenerate_pair = verdict.dependent();
  } catch (const NoDominantRoot&) {
    report.degenerate_pair = true;
  } catch (const PrecisionExhausted&) {
    report.degenerate_pair = true;
  }
  return report;
}

PairRoots analyze_roots(const SequencePair& pair, mpfr_prec_t precision_bits) {
  PairRoots roots{find_roots_auto(characteristic_polynomial(pair.u), precision_bits),
                  find_roots_auto(characteristic_polynomial(pair.g), precision_bits),
                  Interval(), Interval()};
  roots.abs_alpha = dominant_root(roots.profile_u).first.modulus();
  roots.abs_beta = dominant_root(roots.profile_g).first.modulus();
  return roots;
}

void fill_asymptotics(CensusResult& result, const Interval& abs_alpha, const Interval& abs_beta) {
  const mpfr_prec_t prec = std::max(abs_alpha.prec(), abs_beta.prec());
  if (result.x < 3) return;
  Interval log_x = Interval::exact(result.x, prec).log();
  Interval asym = (log_x * log_x) / (abs_alpha.log() * abs_beta.log());
  result.asymptotic = asym.mid();
  result.ratio_S =
      (Interval::exact(static_cast<long>(result.S), prec) / asym).mid();
  result.ratio_R =
      (Interval::exact(static_cast<long>(result.R), prec) / asym).mid();
}

std::vector<ConvergenceRow> convergence_table(SequencePair& pair,
                                              const std::vector<mpz_class>& x_grid, long n0,
                                              long m0, double eta, long envelope_fit_range,
                                              int workers) {
  for (size_t i = 1; i < x_grid.size(); ++i) {
    if (!(x_grid[i - 1] < x_grid[i])) throw BadX("x grid must be strictly ascending");
  }

  PairRoots roots = analyze_roots(pair, 128);
  GrowthEnvelope env_u = fit_envelope(pair.cache_u, roots.profile_u, envelope_fit_range);
  GrowthEnvelope env_g = fit_envelope(pair.cache_g, roots.profile_g, envelope_fit_range);
  LowerTermBound j0_u = fit_lower_term(pair.cache_u, roots.profile_u, envelope_fit_range);
  LowerTermBound j0_g = fit_lower_term(pair.cache_g, roots.profile_g, envelope_fit_range);

  std::vector<ConvergenceRow> rows;
  rows.reserve(x_grid.size());
  for (const auto& x : x_grid) {
    ConvergenceRow row;
    SearchWindow box = safe_window(pair, x);
    row.census = census_count(pair, x, box, n0, m0, workers);
    fill_asymptotics(row.census, roots.abs_alpha, roots.abs_beta);

    EpsilonPolicy policy;  // reciprocal-log
    Interval eps = policy.value_for(x, 128);
    EnvelopeK k = k_epsilon(env_u, env_g, roots.abs_alpha, roots.abs_beta, eps);
    SearchWindow lower = lower_window(x, k, roots.abs_alpha, roots.abs_beta);
    row.lower_bound_count = lower.pair_count(n0, m0);
    if (!lower.empty) {
      row.lower_n_max = lower.n_max;
      row.lower_m_max = lower.m_max;
    }
    SearchWindow upper = upper_window(x, eta, k, j0_u, j0_g, roots.abs_alpha, roots.abs_beta);
    row.upper_window_area = upper.pair_count(n0, m0);
    if (!upper.empty) {
      row.upper_n_max = upper.n_max;
      row.upper_m_max = upper.m_max;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace recdiff
