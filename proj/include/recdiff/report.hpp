#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "recdiff/census.hpp"
#include "recdiff/config.hpp"

namespace recdiff {

using json = nlohmann::ordered_json;

// Deterministic scalar formatting shared by CSV and JSON.
std::string format_float(const BigFloat& v, int digits = 15);

// CSV with exactly the census columns:
// x,S,R,n_max,m_max,complete,asymptotic,ratio_S,ratio_R,lower_bound_count
std::string census_csv(const std::vector<ConvergenceRow>& rows);

json census_json(const std::vector<ConvergenceRow>& rows);
json window_json(const SearchWindow& w);
json envelope_json(const GrowthEnvelope& env);
json lower_term_json(const LowerTermBound& j0);
json matveev_sample_json(const MatveevSample& sample);
json multirep_json(const MultiRepReport& report);
json real_census_json(const RealCensusResult& result);

// Wrap a payload with the reproducibility header (config hash, precision,
// version) every report embeds.
json report_envelope(const ExperimentConfig& config, const std::string& kind, json payload);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace recdiff
