// Python bindings for the core operations: recurrence evaluation, root
// analysis, envelope/window machinery, and the exact census engine.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "recdiff/pipeline.hpp"
#include "recdiff/version.hpp"

namespace py = pybind11;
using namespace recdiff;

namespace {

// Exact integers cross the boundary as Python ints via decimal strings.
mpz_class to_mpz(const py::int_& v) {
  py::str s(static_cast<py::handle>(v));
  return mpz_class(s.cast<std::string>());
}

py::int_ from_mpz(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

std::vector<mpz_class> to_mpz_vec(const std::vector<py::int_>& xs) {
  std::vector<mpz_class> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_mpz(x));
  return out;
}

RecurrenceSpec make_spec(const std::vector<py::int_>& coeffs, const std::vector<py::int_>& init,
                         const std::string& label) {
  return make_recurrence(to_mpz_vec(coeffs), to_mpz_vec(init), label);
}

py::dict census_result_dict(const CensusResult& r) {
  py::dict d;
  d["x"] = from_mpz(r.x);
  d["S"] = r.S;
  d["R"] = r.R;
  d["S_from0"] = r.S_from0;
  d["R_from0"] = r.R_from0;
  d["n_max"] = r.n_max;
  d["m_max"] = r.m_max;
  d["complete"] = r.complete;
  d["asymptotic"] = r.asymptotic.to_double();
  d["ratio_S"] = r.ratio_S.to_double();
  d["ratio_R"] = r.ratio_R.to_double();
  return d;
}

struct PyPair {
  SequencePair pair;
  PairRoots roots;
  bool roots_ready = false;

  PyPair(const std::vector<py::int_>& coeffs_u, const std::vector<py::int_>& init_u,
         const std::vector<py::int_>& coeffs_g, const std::vector<py::int_>& init_g,
         const std::string& label_u, const std::string& label_g)
      : pair(make_spec(coeffs_u, init_u, label_u), make_spec(coeffs_g, init_g, label_g)) {}

  void resolve(long search_limit) { pair.resolve_start_indices(search_limit); }

  const PairRoots& get_roots(long prec) {
    if (!roots_ready) {
      roots = analyze_roots(pair, prec);
      roots_ready = true;
    }
    return roots;
  }

  py::dict census(const py::int_& x, long prec, int workers) {
    mpz_class xz = to_mpz(x);
    SearchWindow window = safe_window(pair, xz);
    CensusResult result = census_count(pair, xz, window, pair.n0, pair.m0, workers);
    fill_asymptotics(result, get_roots(prec).abs_alpha, get_roots(prec).abs_beta);
    return census_result_dict(result);
  }

  py::dict census_in_box(const py::int_& x, long n_lo, long n_hi, long m_lo, long m_hi,
                         int workers) {
    SearchWindow window;
    window.n_max = n_hi;
    window.m_max = m_hi;
    window.x = to_mpz(x);
    CensusResult result = census_count(pair, window.x, window, n_lo, m_lo, workers);
    py::dict d;
    d["S"] = result.S;
    d["R"] = result.R;
    return d;
  }

  py::list multirep(const py::int_& c_limit, int workers) {
    mpz_class limit = to_mpz(c_limit);
    SearchWindow window = safe_window(pair, limit);
    MultiRepReport report = multi_representations(pair, window, limit, pair.n0, pair.m0, workers);
    py::list out;
    for (const auto& rec : report.records) {
      py::dict d;
      d["c"] = from_mpz(rec.c);
      py::list reps;
      for (auto [n, m] : rec.representations) reps.append(py::make_tuple(n, m));
      d["representations"] = reps;
      d["stable"] = report.stable;
      out.append(d);
    }
    return out;
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact census of differences of integer linear recurrence sequences";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "RecdiffError");

  m.def(
      "term",
      [](const std::vector<py::int_>& coeffs, const std::vector<py::int_>& init, long n) {
        RecurrenceSpec spec = make_spec(coeffs, init, "seq");
        return from_mpz(term(spec, n));
      },
      py::arg("coeffs"), py::arg("init"), py::arg("n"),
      "exact n-th term of the recurrence");

  m.def(
      "term_range",
      [](const std::vector<py::int_>& coeffs, const std::vector<py::int_>& init, long lo, long hi) {
        RecurrenceSpec spec = make_spec(coeffs, init, "seq");
        py::list out;
        for (const auto& t : term_range(spec, lo, hi)) out.append(from_mpz(t));
        return out;
      },
      py::arg("coeffs"), py::arg("init"), py::arg("n_lo"), py::arg("n_hi"));

  m.def(
      "term_by_matrix_power",
      [](const std::vector<py::int_>& coeffs, const std::vector<py::int_>& init, long n) {
        RecurrenceSpec spec = make_spec(coeffs, init, "seq");
        return from_mpz(term_by_matrix_power(spec, n));
      },
      py::arg("coeffs"), py::arg("init"), py::arg("n"));

  m.def(
      "find_monotone_start",
      [](const std::vector<py::int_>& coeffs, const std::vector<py::int_>& init,
         long limit) -> py::object {
        RecurrenceSpec spec = make_spec(coeffs, init, "seq");
        auto n0 = find_monotone_start(spec, limit);
        if (!n0) return py::none();
        return py::int_(*n0);
      },
      py::arg("coeffs"), py::arg("init"), py::arg("search_limit") = 1000);

  m.def(
      "characteristic_polynomial",
      [](const std::vector<py::int_>& coeffs, const std::vector<py::int_>& init) {
        RecurrenceSpec spec = make_spec(coeffs, init, "seq");
        IntPolynomial p = characteristic_polynomial(spec);
        py::list out;
        for (const auto& c : p.coeffs()) out.append(from_mpz(c));
        return out;
      },
      py::arg("coeffs"), py::arg("init"), "constant-first coefficients of X^k - sum xi_i X^i");

  m.def(
      "find_roots",
      [](const std::vector<py::int_>& poly, long precision_bits) {
        RootProfile profile = find_roots_auto(IntPolynomial(to_mpz_vec(poly)), precision_bits);
        py::list out;
        for (const auto& r : profile.roots) {
          py::dict d;
          d["re"] = r.value.re.to_double();
          d["im"] = r.value.im.to_double();
          d["radius"] = r.radius.to_double();
          d["multiplicity"] = r.multiplicity;
          out.append(d);
        }
        return out;
      },
      py::arg("poly"), py::arg("precision_bits") = 128,
      "certified roots of an integer polynomial (constant-first coefficients)");

  m.def(
      "dominant_root",
      [](const std::vector<py::int_>& poly, long precision_bits) {
        RootProfile profile = find_roots_auto(IntPolynomial(to_mpz_vec(poly)), precision_bits);
        auto [root, mult] = dominant_root(profile);
        return py::make_tuple(root.value.re.to_double(), mult);
      },
      py::arg("poly"), py::arg("precision_bits") = 128);

  m.def(
      "height",
      [](const std::vector<py::int_>& min_poly, long precision_bits) {
        return height(IntPolynomial(to_mpz_vec(min_poly)), precision_bits).to_double();
      },
      py::arg("min_poly"), py::arg("precision_bits") = 128,
      "absolute logarithmic height from a primitive minimal polynomial");

  m.def(
      "multiplicative_independence",
      [](double abs_alpha, double abs_beta, unsigned long bound, long prec) {
        Interval a = Interval::point(BigFloat::of(abs_alpha, prec));
        Interval b = Interval::point(BigFloat::of(abs_beta, prec));
        IndependenceVerdict v = multiplicative_independence(a, b, bound, prec);
        py::dict d;
        d["dependent"] = v.dependent();
        d["p"] = v.p;
        d["q"] = v.q;
        d["exact"] = v.exact;
        return d;
      },
      py::arg("abs_alpha"), py::arg("abs_beta"), py::arg("denominator_bound") = 1000000,
      py::arg("precision_bits") = 128);

  m.def(
      "matveev_lower_bound",
      [](int t, long D, const py::int_& B, const std::vector<double>& A, long prec) {
        MatveevInput input;
        input.t = t;
        input.D = D;
        input.B = to_mpz(B);
        for (double a : A) input.A.push_back(BigFloat::of(a, prec));
        return matveev_lower_bound(input, prec).to_double();
      },
      py::arg("t"), py::arg("D"), py::arg("B"), py::arg("A"), py::arg("precision_bits") = 128);

  m.def(
      "real_power_census",
      [](const std::string& alpha, const std::string& beta, const py::int_& x, long prec) {
        RealCensusResult r =
            real_power_census(parse_real_base(alpha), parse_real_base(beta), to_mpz(x), prec);
        py::dict d;
        d["S"] = r.S;
        d["n_max"] = r.n_max;
        d["m_max"] = r.m_max;
        d["asymptotic"] = r.asymptotic.to_double();
        d["ratio_S"] = r.ratio_S.to_double();
        d["ambiguous"] = r.ambiguous.size();
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("x"), py::arg("precision_bits") = 128);

  m.def(
      "run_config_text",
      [](const std::string& text, const std::string& mode, const std::string& out_dir) {
        ParseOutcome outcome = parse_config_text(text);
        if (!outcome.ok()) {
          std::ostringstream os;
          for (const auto& issue : outcome.issues) {
            os << "line " << issue.line << ": " << issue.message << "\n";
          }
          throw SchemaError(os.str());
        }
        ExperimentConfig config = *outcome.config;
        auto m = mode_from_name(mode);
        if (!m) throw SchemaError("unknown mode: " + mode);
        config.mode = *m;
        config.out_dir = out_dir;
        std::ostringstream err;
        int code = run(config, err);
        return py::make_tuple(code, err.str());
      },
      py::arg("config_text"), py::arg("mode"), py::arg("out_dir"),
      "parse a config, run a mode, write artifacts; returns (exit_code, error_json)");

  py::class_<PyPair>(m, "SequencePairAnalysis",
                     "a configured pair with exact caches and census operations")
      .def(py::init<const std::vector<py::int_>&, const std::vector<py::int_>&,
                    const std::vector<py::int_>&, const std::vector<py::int_>&,
                    const std::string&, const std::string&>(),
           py::arg("coeffs_u"), py::arg("init_u"), py::arg("coeffs_g"), py::arg("init_g"),
           py::arg("label_u") = "U", py::arg("label_g") = "G")
      .def("resolve_start_indices", &PyPair::resolve, py::arg("search_limit") = 2000)
      .def_property_readonly("n0", [](const PyPair& p) { return p.pair.n0; })
      .def_property_readonly("m0", [](const PyPair& p) { return p.pair.m0; })
      .def("census", &PyPair::census, py::arg("x"), py::arg("precision_bits") = 128,
           py::arg("workers") = 1, "exhaustive-window census: S, R, ratios")
      .def("census_in_box", &PyPair::census_in_box, py::arg("x"), py::arg("n_lo"), py::arg("n_hi"),
           py::arg("m_lo"), py::arg("m_hi"), py::arg("workers") = 1,
           "restricted-window census (S, R only)")
      .def("multirep", &PyPair::multirep, py::arg("c_limit"), py::arg("workers") = 1);
}
