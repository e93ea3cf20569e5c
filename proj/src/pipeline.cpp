#include "recdiff/pipeline.hpp"

#include <filesystem>
#include <ostream>
#include <random>

#include "recdiff/errors.hpp"

namespace recdiff {

namespace {

long factorial_capped(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) {
    f *= i;
    if (f > (1L << 40)) return 1L << 40;
  }
  return f;
}

// Minimal polynomial of the dominant root: config value when present
// (validated against the certified root), otherwise derived exactly.
std::optional<IntPolynomial> resolve_min_poly(const SequenceConfig& seq_cfg,
                                              const IntPolynomial& char_poly,
                                              const RootProfile& profile) {
  if (seq_cfg.min_poly) {
    IntPolynomial p(*seq_cfg.min_poly);
    if (!p.is_primitive()) {
      throw SchemaError("min_poly for '" + seq_cfg.label + "' must be primitive (content 1)");
    }
    ComplexInterval at_root =
        p.eval(dominant_root(profile).first.enclosure(), profile.precision_bits);
    if (!at_root.contains_zero()) {
      throw SchemaError("min_poly for '" + seq_cfg.label +
                        "' does not vanish at the dominant root");
    }
    return p;
  }
  return minimal_polynomial_of_dominant(char_poly, profile);
}

}  // namespace

PairSetup setup_pair(const ExperimentConfig& config) {
  PairSetup setup(config.seq_u.to_spec(), config.seq_g.to_spec());

  // counting start indices: explicit config wins, otherwise monotone scan
  if (config.seq_u.start && config.seq_g.start) {
    setup.pair.n0 = *config.seq_u.start;
    setup.pair.m0 = *config.seq_g.start;
  } else {
    setup.pair.resolve_start_indices();
    if (config.seq_u.start) setup.pair.n0 = *config.seq_u.start;
    if (config.seq_g.start) setup.pair.m0 = *config.seq_g.start;
  }

  setup.roots = analyze_roots(setup.pair, config.precision_bits);
  setup.mutually_dom = mutually_dominant(setup.roots.profile_u, setup.roots.profile_g);
  setup.independence =
      multiplicative_independence(setup.roots.abs_alpha, setup.roots.abs_beta,
                                  config.independence_denominator_bound, config.precision_bits);

  IntPolynomial char_u = characteristic_polynomial(setup.pair.u);
  IntPolynomial char_g = characteristic_polynomial(setup.pair.g);
  setup.minpoly_u = resolve_min_poly(config.seq_u, char_u, setup.roots.profile_u);
  setup.minpoly_g = resolve_min_poly(config.seq_g, char_g, setup.roots.profile_g);
  if (setup.minpoly_u) setup.h_alpha = height(*setup.minpoly_u, config.precision_bits);
  if (setup.minpoly_g) setup.h_beta = height(*setup.minpoly_g, config.precision_bits);

  try {
    setup.binet_u = binet_coefficients(setup.pair.u, setup.roots.profile_u);
  } catch (const Error& err) {
    setup.binet_u_note = err.what();
  }
  try {
    setup.binet_g = binet_coefficients(setup.pair.g, setup.roots.profile_g);
  } catch (const Error& err) {
    setup.binet_g_note = err.what();
  }
  return setup;
}

void require_hypotheses(const PairSetup& setup) {
  if (!(setup.roots.abs_alpha.lo().cmp(1L) > 0) || !(setup.roots.abs_beta.lo().cmp(1L) > 0)) {
    throw HypothesisFailure("dominant moduli must certifiedly exceed 1");
  }
  if (!setup.mutually_dom) {
    throw HypothesisFailure("sequences are not dominant to each other");
  }
  if (setup.independence.dependent()) {
    throw HypothesisFailure("dominant moduli are multiplicatively dependent: |alpha|^" +
                            std::to_string(setup.independence.q) + " = |beta|^" +
                            std::to_string(setup.independence.p));
  }
}

namespace {

json root_json(const CertifiedRoot& root) {
  json j;
  j["re"] = root.value.re.str();
  j["im"] = root.value.im.str();
  j["radius"] = root.radius.str(6);
  j["multiplicity"] = root.multiplicity;
  return j;
}

json profile_json(const RootProfile& profile) {
  json j;
  json roots = json::array();
  for (const auto& r : profile.roots) roots.push_back(root_json(r));
  j["roots"] = roots;
  j["precision_bits"] = static_cast<long>(profile.precision_bits);
  if (profile.dominant_index) {
    j["dominant"] = {{"index", *profile.dominant_index},
                     {"abs", profile.dominant_modulus().mid().str()},
                     {"multiplicity", profile.dominant_multiplicity()}};
  }
  return j;
}

json independence_json(const IndependenceVerdict& v) {
  json j;
  if (v.dependent()) {
    j["kind"] = "dependent";
    j["p"] = v.p;
    j["q"] = v.q;
  } else {
    j["kind"] = "probably_independent";
    j["denominator_bound"] = static_cast<long>(v.denominator_bound);
    j["certified_precision_bits"] = static_cast<long>(v.certified_precision_bits);
  }
  j["exact"] = v.exact;
  return j;
}

json binet_json(const std::optional<BinetCoefficients>& binet, const std::string& note) {
  json j;
  if (!binet) {
    j["available"] = false;
    j["note"] = note;
    return j;
  }
  j["available"] = true;
  json coeffs = json::array();
  for (const auto& c : binet->coefficients) {
    coeffs.push_back({{"re", c.re.mid().str()}, {"im", c.im.mid().str()}});
  }
  j["coefficients"] = coeffs;
  j["dominant_pos"] = binet->dominant_pos;
  j["residual_bound"] = binet->residual_bound.str(6);
  j["calibrated_to"] = binet->calibrated_to;
  return j;
}

struct BoundsToolkit {
  GrowthEnvelope env_u, env_g;
  LowerTermBound j0_u, j0_g;
};

BoundsToolkit fit_bounds(PairSetup& setup, const ExperimentConfig& config) {
  BoundsToolkit kit;
  kit.env_u = fit_envelope(setup.pair.cache_u, setup.roots.profile_u, config.envelope_fit_range);
  kit.env_g = fit_envelope(setup.pair.cache_g, setup.roots.profile_g, config.envelope_fit_range);
  kit.j0_u = fit_lower_term(setup.pair.cache_u, setup.roots.profile_u, config.envelope_fit_range);
  kit.j0_g = fit_lower_term(setup.pair.cache_g, setup.roots.profile_g, config.envelope_fit_range);
  return kit;
}

}  // namespace

json run_analyze(const ExperimentConfig& config) {
  PairSetup setup = setup_pair(config);

  json j;
  j["sequence_u"] = {{"label", setup.pair.u.label()},
                     {"characteristic_polynomial", characteristic_polynomial(setup.pair.u).str()},
                     {"monotone_start", setup.pair.n0},
                     {"profile", profile_json(setup.roots.profile_u)}};
  j["sequence_g"] = {{"label", setup.pair.g.label()},
                     {"characteristic_polynomial", characteristic_polynomial(setup.pair.g).str()},
                     {"monotone_start", setup.pair.m0},
                     {"profile", profile_json(setup.roots.profile_g)}};
  j["mutually_dominant"] = setup.mutually_dom;
  j["independence"] = independence_json(setup.independence);
  if (setup.minpoly_u) {
    j["sequence_u"]["min_poly_dominant"] = setup.minpoly_u->str("z");
    j["sequence_u"]["height_dominant"] = setup.h_alpha->str();
  }
  if (setup.minpoly_g) {
    j["sequence_g"]["min_poly_dominant"] = setup.minpoly_g->str("z");
    j["sequence_g"]["height_dominant"] = setup.h_beta->str();
  }
  j["binet_u"] = binet_json(setup.binet_u, setup.binet_u_note);
  j["binet_g"] = binet_json(setup.binet_g, setup.binet_g_note);
  return report_envelope(config, "analyze", std::move(j));
}

CensusArtifacts run_census(const ExperimentConfig& config) {
  PairSetup setup = setup_pair(config);
  require_hypotheses(setup);

  std::vector<ConvergenceRow> rows =
      convergence_table(setup.pair, config.x_grid, setup.pair.n0, setup.pair.m0, config.eta,
                        config.envelope_fit_range, config.workers);

  CensusArtifacts artifacts;
  artifacts.csv = census_csv(rows);
  json payload;
  payload["label_u"] = setup.pair.u.label();
  payload["label_g"] = setup.pair.g.label();
  payload["n0"] = setup.pair.n0;
  payload["m0"] = setup.pair.m0;
  payload["rows"] = census_json(rows);
  artifacts.report = report_envelope(config, "census", std::move(payload));
  return artifacts;
}

json run_bounds(const ExperimentConfig& config) {
  PairSetup setup = setup_pair(config);
  require_hypotheses(setup);
  BoundsToolkit kit = fit_bounds(setup, config);

  json payload;
  payload["envelope_u"] = envelope_json(kit.env_u);
  payload["envelope_g"] = envelope_json(kit.env_g);
  payload["lower_term_u"] = lower_term_json(kit.j0_u);
  payload["lower_term_g"] = lower_term_json(kit.j0_g);

  json per_x = json::array();
  for (const auto& x : config.x_grid) {
    Interval eps = config.epsilon.value_for(x, config.precision_bits);
    EnvelopeK k = k_epsilon(kit.env_u, kit.env_g, setup.roots.abs_alpha, setup.roots.abs_beta, eps);
    json jx;
    jx["x"] = x.get_str();
    jx["epsilon"] = k.epsilon.str();
    jx["kappa"] = k.kappa.str();
    jx["K"] = k.k_epsilon.str();
    jx["lower_window"] =
        window_json(lower_window(x, k, setup.roots.abs_alpha, setup.roots.abs_beta));
    jx["upper_window"] = window_json(upper_window(x, config.eta, k, kit.j0_u, kit.j0_g,
                                                  setup.roots.abs_alpha, setup.roots.abs_beta));

    EnvelopeReport check_u = envelope_check(k, setup.pair.cache_u, setup.roots.abs_alpha, 0,
                                            config.envelope_check_range);
    EnvelopeReport check_g = envelope_check(k, setup.pair.cache_g, setup.roots.abs_beta, 0,
                                            config.envelope_check_range);
    jx["envelope_check_u"] = {{"pass", check_u.pass}, {"first_violation", check_u.first_violation}};
    jx["envelope_check_g"] = {{"pass", check_g.pass}, {"first_violation", check_g.first_violation}};
    per_x.push_back(std::move(jx));
  }
  payload["per_x"] = per_x;

  // Linear-form samples need the closed-form dominant coefficients.
  if (setup.binet_u && setup.binet_g && setup.h_alpha && setup.h_beta) {
    MatveevContext ctx;
    ctx.alpha = setup.roots.abs_alpha;
    ctx.beta = setup.roots.abs_beta;
    ctx.a1 = setup.binet_u->dominant_real();
    ctx.b1 = setup.binet_g->dominant_real();
    ctx.h_alpha = *setup.h_alpha;
    ctx.h_beta = *setup.h_beta;
    ctx.D = factorial_capped(setup.pair.u.order()) * factorial_capped(setup.pair.g.order());
    ctx.c_prime = config.matveev_c_prime;
    ctx.precision_bits = config.precision_bits;

    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<long> dist(config.matveev_lo, config.matveev_hi);
    std::vector<std::pair<long, long>> samples;
    samples.reserve(static_cast<size_t>(config.matveev_samples));
    for (long i = 0; i < config.matveev_samples; ++i) {
      samples.emplace_back(dist(rng), dist(rng));
    }
    json sample_json = json::array();
    long pass = 0, fail = 0, excluded = 0;
    for (const auto& sample : matveev_check(ctx, samples)) {
      sample_json.push_back(matveev_sample_json(sample));
      switch (sample.status) {
        case MatveevSample::Status::Pass: ++pass; break;
        case MatveevSample::Status::Fail: ++fail; break;
        case MatveevSample::Status::ExcludedLambdaZero: ++excluded; break;
      }
    }
    payload["matveev"] = {{"field_degree_majorant", ctx.D},
                          {"c_prime", ctx.c_prime},
                          {"pass", pass},
                          {"fail", fail},
                          {"lambda_zero", excluded},
                          {"samples", std::move(sample_json)}};
  } else {
    payload["matveev"] = {{"skipped", true},
                          {"note", "dominant coefficients unavailable (multiple roots?)"}};
  }
  return report_envelope(config, "bounds", std::move(payload));
}

json run_multirep(const ExperimentConfig& config) {
  PairSetup setup = setup_pair(config);
  require_hypotheses(setup);

  SearchWindow window = safe_window(setup.pair, config.multirep_c_limit);
  MultiRepReport report = multi_representations(setup.pair, window, config.multirep_c_limit,
                                                setup.pair.n0, setup.pair.m0, config.workers);
  json payload = multirep_json(report);
  payload["window"] = window_json(window);
  payload["c_limit"] = config.multirep_c_limit.get_str();
  return report_envelope(config, "multirep", std::move(payload));
}

json run_conjecture(const ExperimentConfig& config) {
  RealBase alpha = parse_real_base(config.conjecture_alpha);
  RealBase beta = parse_real_base(config.conjecture_beta);

  json rows = json::array();
  for (const auto& x : config.x_grid) {
    RealCensusResult result = real_power_census(alpha, beta, x, config.precision_bits);
    rows.push_back(real_census_json(result));
  }
  json payload;
  payload["alpha"] = alpha.str();
  payload["beta"] = beta.str();
  payload["rows"] = std::move(rows);
  return report_envelope(config, "conjecture", std::move(payload));
}

int exit_code_for(const std::exception& err) {
  if (dynamic_cast<const SchemaError*>(&err) || dynamic_cast<const ParseError*>(&err)) return 2;
  if (dynamic_cast<const NoDominantRoot*>(&err) || dynamic_cast<const HypothesisFailure*>(&err) ||
      dynamic_cast<const CertificateExhausted*>(&err)) {
    return 3;
  }
  if (dynamic_cast<const PrecisionExhausted*>(&err)) return 4;
  return 1;
}

int run(const ExperimentConfig& config, std::ostream& error_stream) {
  namespace fs = std::filesystem;
  try {
    fs::create_directories(config.out_dir);
    const std::string base = config.out_dir + "/";
    switch (config.mode) {
      case RunMode::Analyze:
        write_text_file(base + "analyze.json", run_analyze(config).dump(2) + "\n");
        break;
      case RunMode::Census: {
        CensusArtifacts artifacts = run_census(config);
        write_text_file(base + "census.csv", artifacts.csv);
        write_text_file(base + "census.json", artifacts.report.dump(2) + "\n");
        break;
      }
      case RunMode::Bounds:
        write_text_file(base + "bounds.json", run_bounds(config).dump(2) + "\n");
        break;
      case RunMode::MultiRep:
        write_text_file(base + "multirep.json", run_multirep(config).dump(2) + "\n");
        break;
      case RunMode::Conjecture:
        write_text_file(base + "conjecture.json", run_conjecture(config).dump(2) + "\n");
        break;
    }
    return 0;
  } catch (const std::exception& err) {
    int code = exit_code_for(err);
    json error;
    error["error"] = err.what();
    error["exit_code"] = code;
    error["mode"] = mode_name(config.mode);
    error_stream << error.dump(2) << std::endl;
    return code;
  }
}

}  // namespace recdiff
