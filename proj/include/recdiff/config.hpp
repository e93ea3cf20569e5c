#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recdiff/bounds.hpp"
#include "recdiff/realpower.hpp"
#include "recdiff/recurrence.hpp"

namespace recdiff {

enum class RunMode { Analyze, Census, Bounds, MultiRep, Conjecture };

std::string mode_name(RunMode mode);
std::optional<RunMode> mode_from_name(const std::string& name);

struct SequenceConfig {
  std::string label;
  std::vector<mpz_class> coeffs;
  std::vector<mpz_class> init;
  std::optional<long> start;                      // monotone start; auto when absent
  std::optional<std::vector<mpz_class>> min_poly; // minimal poly of the dominant root

  RecurrenceSpec to_spec() const;
};

struct ExperimentConfig {
  RunMode mode = RunMode::Analyze;
  SequenceConfig seq_u, seq_g;
  std::vector<mpz_class> x_grid;
  double eta = 0.5;
  EpsilonPolicy epsilon;
  mpfr_prec_t precision_bits = 128;
  int workers = 1;
  long envelope_fit_range = 500;
  long envelope_check_range = 500;
  mpz_class multirep_c_limit{1000000};
  long matveev_samples = 100;
  long matveev_lo = 5, matveev_hi = 60;
  double matveev_c_prime = 2.0;
  unsigned long seed = 12345;
  unsigned long independence_denominator_bound = 1000000;
  std::string conjecture_alpha = "pi", conjecture_beta = "e";
  std::string out_dir = ".";

  std::string config_hash;  // FNV-1a of the raw config bytes
};

struct SchemaIssue {
  int line;  // 0 when the issue is file-level
  std::string message;
};

struct ParseOutcome {
  std::optional<ExperimentConfig> config;
  std::vector<SchemaIssue> issues;

  bool ok() const { return config.has_value() && issues.empty(); }
};

// Parse and schema-check a line-oriented key/value config file.
// Throws ParseError when the file cannot be read at all; schema problems are
// returned as line-referenced issues.
ParseOutcome parse_config(const std::string& path);
ParseOutcome parse_config_text(const std::string& text);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace recdiff
