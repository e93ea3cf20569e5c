#pragma once

#include <optional>
#include <vector>

#include "recdiff/algebraics.hpp"
#include "recdiff/interval.hpp"
#include "recdiff/recurrence.hpp"
#include "recdiff/roots.hpp"

namespace recdiff {

// |U_n| <= L * n^d * |alpha|^n on 1 <= n <= verified_to (plus |U_0| <= L when
// d = 0). L is a power of two >= 1 so every check stays in exact arithmetic.
struct GrowthEnvelope {
  mpq_class L;
  int d = 0;
  long verified_to = 0;
};

// |U_n| >= J0 * |alpha|^n on n1 <= n <= verified_to; J0 a power of two.
struct LowerTermBound {
  mpq_class J0;
  long n1 = 0;
  long verified_to = 0;
};

// Epsilon selection for the envelope constant: the reciprocal-log policy
// (eps = 1/log x) or a fixed override.
struct EpsilonPolicy {
  enum class Kind { ReciprocalLog, Fixed };
  Kind kind = Kind::ReciprocalLog;
  double fixed_value = 0.0;

  Interval value_for(const mpz_class& x, mpfr_prec_t prec) const;
  static EpsilonPolicy reciprocal_log() { return {}; }
  static EpsilonPolicy fixed(double v) { return {Kind::Fixed, v}; }
};

// K_eps = kappa / eps^d with kappa = 2 max{|alpha|^d, |beta|^d} L d^d e^{-d};
// d = 0 degenerates to the exact constant K = 2L.
struct EnvelopeK {
  BigFloat epsilon;
  BigFloat kappa;
  BigFloat k_epsilon;  // kappa / eps^d recomputable bit-for-bit from the fields
  Interval k_certified;
  Interval eps_certified;
  mpq_class L;
  int d = 0;
};

struct SearchWindow {
  enum class Kind { LowerConstruction, UpperBound };
  Kind kind = Kind::LowerConstruction;
  bool empty = false;
  long n_max = 0, m_max = 0;
  mpz_class x;
  double eta = 0.0;                  // UpperBound only
  bool conditioned = false;          // UpperBound: x1(eta) is non-effective, so never asserted
  bool certified_exhaustive = false; // set by the exact exclusion scan only
  std::string epsilon_note;

  // Number of index pairs (n, m) in the window with n >= n0, m >= m0.
  mpz_class pair_count(long n0 = 0, long m0 = 0) const;
};

struct EnvelopeReport {
  bool pass = true;
  long first_violation = -1;
  long checked_from = 0, checked_to = 0;
  long ambiguous = -1;  // index where certification failed both ways, if any
};

// Fit d = (dominant multiplicity - 1) and the least power-of-two L >= 1 making
// the envelope hold on [1, n_max], verified against a rational lower bound on
// |alpha| so the certified inequality implies the true one.
GrowthEnvelope fit_envelope(TermCache& cache, const RootProfile& profile, long n_max);

// kappa and K_eps per the two fitted envelopes; L and d are the maxima of the
// two so a single constant serves both sequences.
EnvelopeK k_epsilon(const GrowthEnvelope& env_u, const GrowthEnvelope& env_g,
                    const Interval& abs_alpha, const Interval& abs_beta, const Interval& eps);

// Exact verification of |U_n| <= K * (|alpha| + eps)^n over [n_lo, n_hi].
EnvelopeReport envelope_check(const EnvelopeK& k, TermCache& cache, const Interval& abs_root,
                              long n_lo, long n_hi);
// Exact verification of the fitted growth envelope itself.
EnvelopeReport envelope_check(const GrowthEnvelope& env, TermCache& cache,
                              const RootProfile& profile, long n_lo, long n_hi);

// Least n1 past the last zero term and the largest power-of-two J0 with
// |U_n| >= J0 * |alpha|^n exactly on [n1, n_max].
LowerTermBound fit_lower_term(TermCache& cache, const RootProfile& profile, long n_max);

// Solution-rich box: every (n, m) with n <= n_max, m <= m_max satisfies
// |U_n - G_m| <= x because both sides stay below x/2.
SearchWindow lower_window(const mpz_class& x, const EnvelopeK& k, const Interval& abs_alpha,
                          const Interval& abs_beta);

// Candidate exclusion box from the asymptotic bounds; conditioned on a
// non-effective threshold x1(eta), so callers must pair it with an exact scan.
SearchWindow upper_window(const mpz_class& x, double eta, const EnvelopeK& k,
                          const LowerTermBound& j0_u, const LowerTermBound& j0_g,
                          const Interval& abs_alpha, const Interval& abs_beta);

struct MatveevInput {
  int t = 0;          // number of logarithms
  long D = 1;         // number field degree (majorant is sound)
  mpz_class B;        // max |b_i|
  std::vector<BigFloat> A;  // per-number height majorants, each >= 0.16
};

// Right side of the explicit lower bound for log|Lambda| (valid when
// Lambda != 0): -3 * 30^{t+4} * (t+1)^{5.5} * D^2 (1+log D)(1+log tB) A_1...A_t.
BigFloat matveev_lower_bound(const MatveevInput& input, mpfr_prec_t precision_bits = 128);
Interval matveev_lower_bound_interval(const MatveevInput& input, mpfr_prec_t precision_bits);

struct MatveevSample {
  long n = 0, m = 0;
  enum class Status { Pass, Fail, ExcludedLambdaZero };
  Status status = Status::Pass;
  BigFloat lambda;          // midpoint of the certified enclosure
  BigFloat log_abs_lambda;  // certified lower bound
  BigFloat bound;           // certified upper bound of the theorem's right side
  BigFloat margin;          // log|Lambda| - bound (certified positive on Pass)
};

// Parameters shared by every sample check for one sequence pair.
struct MatveevContext {
  Interval alpha, beta;       // dominant moduli
  Interval a1, b1;            // dominant coefficients (real enclosures)
  BigFloat h_alpha, h_beta;   // heights of the dominant roots
  long D = 1;                 // field degree majorant
  double c_prime = 2.0;       // A1 = C' log max(n, m) policy
  mpfr_prec_t precision_bits = 128;
};

std::vector<MatveevSample> matveev_check(const MatveevContext& ctx,
                                         const std::vector<std::pair<long, long>>& samples);

}  // namespace recdiff
