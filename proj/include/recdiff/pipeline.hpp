#pragma once

#include <optional>
#include <string>

#include "recdiff/algebraics.hpp"
#include "recdiff/census.hpp"
#include "recdiff/config.hpp"
#include "recdiff/report.hpp"

namespace recdiff {

// Fully analyzed sequence pair: roots, dominance, independence, heights,
// closed-form coefficients where they exist.
struct PairSetup {
  SequencePair pair;
  PairRoots roots;
  bool mutually_dom = false;
  IndependenceVerdict independence;
  std::optional<IntPolynomial> minpoly_u, minpoly_g;
  std::optional<BigFloat> h_alpha, h_beta;
  std::optional<BinetCoefficients> binet_u, binet_g;
  std::string binet_u_note, binet_g_note;

  PairSetup(RecurrenceSpec u, RecurrenceSpec g) : pair(std::move(u), std::move(g)) {}
};

PairSetup setup_pair(const ExperimentConfig& config);

// Throws HypothesisFailure when the pair misses a precondition of the
// counting theory (mutual dominance, moduli > 1, independence).
void require_hypotheses(const PairSetup& setup);

json run_analyze(const ExperimentConfig& config);
// census returns the CSV (exact column contract) plus the JSON mirror.
struct CensusArtifacts {
  std::string csv;
  json report;
};
CensusArtifacts run_census(const ExperimentConfig& config);
json run_bounds(const ExperimentConfig& config);
json run_multirep(const ExperimentConfig& config);
json run_conjecture(const ExperimentConfig& config);

// Full CLI entry: runs the configured mode, writes artifacts under
// config.out_dir, returns the process exit code (0 ok, 2 schema,
// 3 hypothesis failure, 4 precision exhausted, 1 other errors).
// Failures also emit machine-readable JSON on `error_stream`.
int run(const ExperimentConfig& config, std::ostream& error_stream);

int exit_code_for(const std::exception& err);

}  // namespace recdiff
