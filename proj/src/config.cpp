#include "recdiff/config.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "recdiff/errors.hpp"

namespace recdiff {

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Analyze: return "analyze";
    case RunMode::Census: return "census";
    case RunMode::Bounds: return "bounds";
    case RunMode::MultiRep: return "multirep";
    case RunMode::Conjecture: return "conjecture";
  }
  return "?";
}

std::optional<RunMode> mode_from_name(const std::string& name) {
  if (name == "analyze") return RunMode::Analyze;
  if (name == "census") return RunMode::Census;
  if (name == "bounds") return RunMode::Bounds;
  if (name == "multirep") return RunMode::MultiRep;
  if (name == "conjecture") return RunMode::Conjecture;
  return std::nullopt;
}

RecurrenceSpec SequenceConfig::to_spec() const {
  RecurrenceSpec spec = make_recurrence(coeffs, init, label);
  if (start) spec.set_start_index(*start);
  return spec;
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_integer(const std::string& t, mpz_class& out) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (size_t j = i; j < t.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
  }
  out = mpz_class(t);
  return true;
}

bool parse_integer_list(const std::string& value, std::vector<mpz_class>& out) {
  out.clear();
  std::istringstream is(value);
  std::string tok;
  while (is >> tok) {
    mpz_class z;
    if (!parse_integer(tok, z)) return false;
    out.push_back(z);
  }
  return !out.empty();
}

bool parse_double(const std::string& t, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(t, &pos);
    return pos == t.size();
  } catch (...) {
    return false;
  }
}

bool parse_long(const std::string& t, long& out) {
  mpz_class z;
  if (!parse_integer(t, z) || !z.fits_slong_p()) return false;
  out = z.get_si();
  return true;
}

struct Parser {
  ParseOutcome outcome;
  ExperimentConfig config;
  std::string section;
  bool has_u = false, has_g = false;

  void issue(int line, const std::string& message) {
    outcome.issues.push_back({line, message});
  }

  SequenceConfig* sequence_for_section() {
    if (section == "sequence.u") return &config.seq_u;
    if (section == "sequence.g") return &config.seq_g;
    return nullptr;
  }

  void handle(int line, const std::string& key, const std::string& value) {
    if (section == "sequence.u" || section == "sequence.g") {
      SequenceConfig* seq = sequence_for_section();
      (section == "sequence.u" ? has_u : has_g) = true;
      if (key == "label") {
        seq->label = value;
      } else if (key == "coeffs") {
        if (!parse_integer_list(value, seq->coeffs)) issue(line, "coeffs: need decimal integers");
      } else if (key == "init") {
        if (!parse_integer_list(value, seq->init)) issue(line, "init: need decimal integers");
      } else if (key == "start") {
        if (value == "auto") {
          seq->start.reset();
        } else {
          long v;
          if (!parse_long(value, v) || v < 0) {
            issue(line, "start: need a nonnegative integer or 'auto'");
          } else {
            seq->start = v;
          }
        }
      } else if (key == "min_poly") {
        std::vector<mpz_class> p;
        if (!parse_integer_list(value, p) || p.back() == 0) {
          issue(line, "min_poly: need integer coefficients with nonzero leading term");
        } else {
          seq->min_poly = p;
        }
      } else {
        issue(line, "unknown key in [" + section + "]: " + key);
      }
      return;
    }
    if (section == "conjecture") {
      if (key == "alpha") {
        config.conjecture_alpha = value;
      } else if (key == "beta") {
        config.conjecture_beta = value;
      } else {
        issue(line, "unknown key in [conjecture]: " + key);
      }
      return;
    }
    if (!section.empty()) {
      issue(line, "unknown section: [" + section + "]");
      return;
    }

    if (key == "mode") {
      auto m = mode_from_name(value);
      if (!m) {
        issue(line, "mode: expected analyze|census|bounds|multirep|conjecture");
      } else {
        config.mode = *m;
      }
    } else if (key == "x_grid") {
      if (!parse_integer_list(value, config.x_grid)) {
        issue(line, "x_grid: need decimal integers");
      } else {
        for (size_t i = 0; i < config.x_grid.size(); ++i) {
          if (config.x_grid[i] < 3) issue(line, "x_grid: every x must be >= 3");
          if (i > 0 && !(config.x_grid[i - 1] < config.x_grid[i])) {
            issue(line, "x_grid: must be strictly ascending");
          }
        }
      }
    } else if (key == "eta") {
      double v;
      if (!parse_double(value, v) || !(v > 0.0 && v < 1.0)) {
        issue(line, "eta: need a real in (0, 1)");
      } else {
        config.eta = v;
      }
    } else if (key == "epsilon_policy") {
      if (value == "reciprocal-log") {
        config.epsilon = EpsilonPolicy::reciprocal_log();
      } else if (value.rfind("fixed:", 0) == 0) {
        double v;
        if (!parse_double(value.substr(6), v) || v <= 0) {
          issue(line, "epsilon_policy: fixed:<positive real>");
        } else {
          config.epsilon = EpsilonPolicy::fixed(v);
        }
      } else {
        issue(line, "epsilon_policy: reciprocal-log or fixed:<value>");
      }
    } else if (key == "precision_bits") {
      long v;
      if (!parse_long(value, v) || v < 32 || v > 65536) {
        issue(line, "precision_bits: need an integer in [32, 65536]");
      } else {
        config.precision_bits = v;
      }
    } else if (key == "workers") {
      long v;
      if (!parse_long(value, v) || v < 1 || v > 1024) {
        issue(line, "workers: need an integer in [1, 1024]");
      } else {
        config.workers = static_cast<int>(v);
      }
    } else if (key == "envelope_fit_range") {
      long v;
      if (!parse_long(value, v) || v < 10) {
        issue(line, "envelope_fit_range: need an integer >= 10");
      } else {
        config.envelope_fit_range = v;
      }
    } else if (key == "envelope_check_range") {
      long v;
      if (!parse_long(value, v) || v < 1) {
        issue(line, "envelope_check_range: need a positive integer");
      } else {
        config.envelope_check_range = v;
      }
    } else if (key == "multirep_c_limit") {
      mpz_class z;
      if (!parse_integer(value, z) || z < 0) {
        issue(line, "multirep_c_limit: need a nonnegative integer");
      } else {
        config.multirep_c_limit = z;
      }
    } else if (key == "matveev_samples") {
      long v;
      if (!parse_long(value, v) || v < 0) {
        issue(line, "matveev_samples: need a nonnegative integer");
      } else {
        config.matveev_samples = v;
      }
    } else if (key == "matveev_range") {
      std::vector<mpz_class> r;
      if (!parse_integer_list(value, r) || r.size() != 2 || r[0] < 1 || !(r[0] <= r[1]) ||
          !r[1].fits_slong_p()) {
        issue(line, "matveev_range: need 'lo hi' with 1 <= lo <= hi");
      } else {
        config.matveev_lo = r[0].get_si();
        config.matveev_hi = r[1].get_si();
      }
    } else if (key == "matveev_c_prime") {
      double v;
      if (!parse_double(value, v) || v <= 0) {
        issue(line, "matveev_c_prime: need a positive real");
      } else {
        config.matveev_c_prime = v;
      }
    } else if (key == "seed") {
      long v;
      if (!parse_long(value, v) || v < 0) {
        issue(line, "seed: need a nonnegative integer");
      } else {
        config.seed = static_cast<unsigned long>(v);
      }
    } else if (key == "independence_denominator_bound") {
      long v;
      if (!parse_long(value, v) || v < 1) {
        issue(line, "independence_denominator_bound: need a positive integer");
      } else {
        config.independence_denominator_bound = static_cast<unsigned long>(v);
      }
    } else {
      issue(line, "unknown key: " + key);
    }
  }

  void finish() {
    auto check_sequence = [&](const SequenceConfig& seq, const std::string& name, bool present) {
      if (!present) {
        issue(0, "missing [sequence." + name + "] section");
        return;
      }
      if (seq.coeffs.empty()) issue(0, "[sequence." + name + "] coeffs: missing or empty (order k must be >= 1)");
      if (seq.init.empty()) issue(0, "[sequence." + name + "] init: missing or empty");
      if (!seq.coeffs.empty() && !seq.init.empty() && seq.coeffs.size() != seq.init.size()) {
        issue(0, "[sequence." + name + "] coeffs and init must have equal length");
      }
      bool all_zero = !seq.init.empty();
      for (const auto& z : seq.init) {
        if (z != 0) all_zero = false;
      }
      if (all_zero) issue(0, "[sequence." + name + "] init: all-zero initial terms are degenerate");
    };
    if (config.mode != RunMode::Conjecture) {
      check_sequence(config.seq_u, "u", has_u);
      check_sequence(config.seq_g, "g", has_g);
    }
    if (config.mode == RunMode::Conjecture) {
      try {
        parse_real_base(config.conjecture_alpha);
        parse_real_base(config.conjecture_beta);
      } catch (const BadInput& err) {
        issue(0, std::string("conjecture bases: ") + err.what());
      }
    }
    if (config.x_grid.empty() &&
        (config.mode == RunMode::Census || config.mode == RunMode::Bounds ||
         config.mode == RunMode::Conjecture)) {
      issue(0, "x_grid: required for census/bounds/conjecture modes");
    }
    if (outcome.issues.empty()) outcome.config = config;
  }
};

}  // namespace

ParseOutcome parse_config_text(const std::string& text) {
  Parser parser;
  parser.config.config_hash = fnv1a_hex(text);

  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        parser.issue(line_no, "unterminated section header");
        continue;
      }
      parser.section = trim(line.substr(1, line.size() - 2));
      if (parser.section != "sequence.u" && parser.section != "sequence.g" &&
          parser.section != "conjecture") {
        parser.issue(line_no, "unknown section: [" + parser.section + "]");
      }
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      parser.issue(line_no, "expected 'key = value'");
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      parser.issue(line_no, "expected 'key = value'");
      continue;
    }
    parser.handle(line_no, key, value);
  }
  parser.finish();
  return parser.outcome;
}

ParseOutcome parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace recdiff
