#include "recdiff/report.hpp"

#include <fstream>
#include <sstream>

#include "recdiff/errors.hpp"
#include "recdiff/version.hpp"

namespace recdiff {

std::string format_float(const BigFloat& v, int digits) { return v.str(digits); }

std::string census_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "x,S,R,n_max,m_max,complete,asymptotic,ratio_S,ratio_R,lower_bound_count\n";
  for (const auto& row : rows) {
    const CensusResult& c = row.census;
    os << c.x.get_str() << ',' << c.S << ',' << c.R << ',' << c.n_max << ',' << c.m_max << ','
       << (c.complete ? "true" : "false") << ',' << format_float(c.asymptotic, 12) << ','
       << format_float(c.ratio_S, 12) << ',' << format_float(c.ratio_R, 12) << ','
       << row.lower_bound_count.get_str() << '\n';
  }
  return os.str();
}

json window_json(const SearchWindow& w) {
  json j;
  j["kind"] = w.kind == SearchWindow::Kind::LowerConstruction ? "lower_construction" : "upper_bound";
  j["empty"] = w.empty;
  j["n_max"] = w.empty ? -1 : w.n_max;
  j["m_max"] = w.empty ? -1 : w.m_max;
  j["x"] = w.x.get_str();
  if (w.kind == SearchWindow::Kind::UpperBound) {
    j["eta"] = w.eta;
    j["conditioned"] = w.conditioned;
  }
  j["certified_exhaustive"] = w.certified_exhaustive;
  j["epsilon"] = w.epsilon_note;
  return j;
}

json envelope_json(const GrowthEnvelope& env) {
  json j;
  j["L"] = env.L.get_str();
  j["d"] = env.d;
  j["verified_to"] = env.verified_to;
  return j;
}

json lower_term_json(const LowerTermBound& j0) {
  json j;
  j["J0"] = j0.J0.get_str();
  j["n1"] = j0.n1;
  j["verified_to"] = j0.verified_to;
  return j;
}

json matveev_sample_json(const MatveevSample& sample) {
  json j;
  j["n"] = sample.n;
  j["m"] = sample.m;
  switch (sample.status) {
    case MatveevSample::Status::Pass: j["status"] = "pass"; break;
    case MatveevSample::Status::Fail: j["status"] = "fail"; break;
    case MatveevSample::Status::ExcludedLambdaZero: j["status"] = "lambda_zero"; break;
  }
  if (sample.status != MatveevSample::Status::ExcludedLambdaZero) {
    j["lambda"] = format_float(sample.lambda);
    j["log_abs_lambda"] = format_float(sample.log_abs_lambda);
    j["bound"] = format_float(sample.bound);
    j["margin"] = format_float(sample.margin);
  }
  return j;
}

json census_row_json(const ConvergenceRow& row) {
  const CensusResult& c = row.census;
  json j;
  j["x"] = c.x.get_str();
  j["S"] = c.S;
  j["R"] = c.R;
  j["S_from0"] = c.S_from0;
  j["R_from0"] = c.R_from0;
  j["n_max"] = c.n_max;
  j["m_max"] = c.m_max;
  j["complete"] = c.complete;
  j["asymptotic"] = format_float(c.asymptotic, 12);
  j["ratio_S"] = format_float(c.ratio_S, 12);
  j["ratio_R"] = format_float(c.ratio_R, 12);
  j["lower_bound_count"] = row.lower_bound_count.get_str();
  j["upper_window_area"] = row.upper_window_area.get_str();
  j["lower_window"] = {{"n_max", row.lower_n_max}, {"m_max", row.lower_m_max}};
  j["upper_window"] = {{"n_max", row.upper_n_max}, {"m_max", row.upper_m_max}};
  return j;
}

json census_json(const std::vector<ConvergenceRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) arr.push_back(census_row_json(row));
  return arr;
}

json multirep_json(const MultiRepReport& report) {
  json j;
  json records = json::array();
  for (const auto& rec : report.records) {
    json r;
    r["c"] = rec.c.get_str();
    json reps = json::array();
    for (auto [n, m] : rec.representations) reps.push_back({{"n", n}, {"m", m}});
    r["representations"] = reps;
    records.push_back(r);
  }
  j["records"] = records;
  j["stable"] = report.stable;
  j["degenerate_pair"] = report.degenerate_pair;
  j["stability_window"] = {{"n_max", report.check_n_max}, {"m_max", report.check_m_max}};
  json unstable = json::array();
  for (const auto& c : report.unstable_c) unstable.push_back(c.get_str());
  j["unstable_c"] = unstable;
  return j;
}

json real_census_json(const RealCensusResult& result) {
  json j;
  j["x"] = result.x.get_str();
  j["S"] = result.S;
  j["n_max"] = result.n_max;
  j["m_max"] = result.m_max;
  j["asymptotic"] = format_float(result.asymptotic, 12);
  j["ratio_S"] = format_float(result.ratio_S, 12);
  j["max_precision_used"] = static_cast<long>(result.max_precision_used);
  json amb = json::array();
  for (auto [n, m] : result.ambiguous) amb.push_back({{"n", n}, {"m", m}});
  j["ambiguous_pairs"] = amb;
  return j;
}

json report_envelope(const ExperimentConfig& config, const std::string& kind, json payload) {
  json j;
  j["report"] = kind;
  j["version"] = kVersion;
  j["config_hash"] = config.config_hash;
  j["precision_bits"] = static_cast<long>(config.precision_bits);
  j["data"] = std::move(payload);
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write output file: " + path);
  out << contents;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace recdiff
