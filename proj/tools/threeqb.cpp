// Command-line surface over the three-qubit entanglement toolkit:
// per-state invariant reports, SLOCC classification, Monte-Carlo
// verification suites, figure data and canonical-form maximizations.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "threeqb/threeqb.hpp"

namespace {

using namespace threeqb;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Like fmt17, but JSON-safe for the infinite histogram bin edges.
std::string json_number(double v) {
  if (std::isfinite(v)) return fmt17(v);
  return v > 0 ? "\"inf\"" : "\"-inf\"";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string state_json_inline(const PureState& psi) {
  std::ostringstream os;
  os << "{\"amplitudes\": [";
  for (int i = 0; i < 8; ++i) {
    os << "[" << fmt17(psi.amp[i].real()) << ", " << fmt17(psi.amp[i].imag())
       << "]" << (i < 7 ? ", " : "");
  }
  os << "]}";
  return os.str();
}

std::string matrix_json(const SmallMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.dim(); ++r) {
    os << "[";
    for (int c = 0; c < m.dim(); ++c) {
      os << "[" << fmt17(m(r, c).real()) << ", " << fmt17(m(r, c).imag())
         << "]" << (c + 1 < m.dim() ? ", " : "");
    }
    os << "]" << (r + 1 < m.dim() ? ", " : "");
  }
  os << "]";
  return os.str();
}

std::string protocol_json(const TwoOutcomeProtocol& pr) {
  std::ostringstream os;
  os << "{\"target_qubit\": " << pr.target_qubit
     << ", \"a1\": " << fmt17(pr.a1) << ", \"b1\": " << fmt17(pr.b1)
     << ", \"V\": " << matrix_json(pr.v) << ", \"U1\": " << matrix_json(pr.u1)
     << ", \"U2\": " << matrix_json(pr.u2) << "}";
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StateFileError("cannot write output file: " + path);
  out << text;
  if (!out) throw StateFileError("write failed: " + path);
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const std::string& state_spec, const std::string& format) {
  const StateFile f = resolve_state_spec(state_spec);
  const InvariantReport r = lu_invariants(f.state);
  if (format == "csv") {
    std::ostringstream os;
    os << "n2,I1,I2,I3,I4,I5,tau,omega,c1_23,c2_13,c3_12\n"
       << fmt17(r.n2) << ',' << fmt17(r.I1) << ',' << fmt17(r.I2) << ','
       << fmt17(r.I3) << ',' << fmt17(r.I4) << ',' << fmt17(r.I5) << ','
       << fmt17(r.tau) << ',' << fmt17(r.omega) << ',' << fmt17(r.c1_23) << ','
       << fmt17(r.c2_13) << ',' << fmt17(r.c3_12) << "\n";
    std::cout << os.str();
  } else {
    std::ostringstream os;
    os << "{\n";
    if (!f.label.empty()) os << "  \"label\": " << json_string(f.label) << ",\n";
    os << "  \"n2\": " << fmt17(r.n2) << ",\n"
       << "  \"I1\": " << fmt17(r.I1) << ",\n"
       << "  \"I2\": " << fmt17(r.I2) << ",\n"
       << "  \"I3\": " << fmt17(r.I3) << ",\n"
       << "  \"I4\": " << fmt17(r.I4) << ",\n"
       << "  \"I5\": " << fmt17(r.I5) << ",\n"
       << "  \"tau\": " << fmt17(r.tau) << ",\n"
       << "  \"omega\": " << fmt17(r.omega) << ",\n"
       << "  \"c1_23\": " << fmt17(r.c1_23) << ",\n"
       << "  \"c2_13\": " << fmt17(r.c2_13) << ",\n"
       << "  \"c3_12\": " << fmt17(r.c3_12) << "\n}\n";
    std::cout << os.str();
  }
  return kExitOk;
}

// ---- classify --------------------------------------------------------------

int cmd_classify(const std::string& state_spec, double tol) {
  const StateFile f = resolve_state_spec(state_spec);
  const SloccClass cls = classify(f.state, tol);
  std::cout << to_string(cls.tag) << ", rank " << cls.rank << "\n";
  const ClassWitness& w = cls.witness;
  std::cout << "witness: n4=" << fmt17(w.n4) << " n2c1_23=" << fmt17(w.n2c1_23)
            << " n2c2_13=" << fmt17(w.n2c2_13)
            << " n2c3_12=" << fmt17(w.n2c3_12)
            << " n_omega=" << fmt17(w.n_omega) << " tau=" << fmt17(w.tau)
            << " marginal=" << (w.marginal ? "true" : "false") << "\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& suite, long long trials, std::uint64_t seed) {
  std::ostringstream os;
  bool pass = false;

  if (suite == "ordering") {
    const long long unnormalized = std::max<long long>(1, trials / 100);
    const OrderingStats st = verify_ordering(trials, unnormalized, seed);
    pass = st.violations == 0;
    os << "{\"suite\": \"ordering\", \"trials\": " << st.trials
       << ", \"seed\": " << seed << ", \"violations\": " << st.violations
       << ", \"min_slack_rel\": " << fmt17(st.min_slack)
       << ", \"worst_trial\": " << st.worst_trial
       << ", \"worst_state\": " << state_json_inline(st.worst_state)
       << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else if (suite == "ckw") {
    const CkwStats st = verify_ckw(trials, seed);
    pass = st.violations == 0 && st.stronger_violations == 0;
    os << "{\"suite\": \"ckw\", \"trials\": " << st.trials
       << ", \"seed\": " << seed << ", \"violations\": " << st.violations
       << ", \"stronger_bound_violations\": " << st.stronger_violations
       << ", \"max_abs_deviation\": " << fmt17(st.max_abs_dev)
       << ", \"worst_trial\": " << st.worst_trial
       << ", \"worst_state\": " << state_json_inline(st.worst_state)
       << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else if (suite == "identities") {
    const IdentityStats st = verify_identities(trials, seed);
    pass = st.violations == 0;
    os << "{\"suite\": \"identities\", \"trials\": " << st.trials
       << ", \"seed\": " << seed << ", \"violations\": " << st.violations
       << ", \"max_rel_deviation\": " << fmt17(st.max_rel_dev)
       << ", \"max_kempe_deviation\": " << fmt17(st.max_kempe_dev)
       << ", \"worst_trial\": " << st.worst_trial
       << ", \"worst_state\": " << state_json_inline(st.worst_state)
       << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else if (suite.rfind("monotonicity:", 0) == 0) {
    const std::string name = suite.substr(13);
    MeasureTag tag;
    if (name == "tau") tag = MeasureTag::Tau;
    else if (name == "omega") tag = MeasureTag::Omega;
    else if (name == "c1" || name == "c1_23") tag = MeasureTag::Concurrence1;
    else if (name == "c2" || name == "c2_13") tag = MeasureTag::Concurrence2;
    else if (name == "c3" || name == "c3_12") tag = MeasureTag::Concurrence3;
    else {
      std::cerr << "unknown measure \"" << name
                << "\" (known: tau, omega, c1, c2, c3)\n";
      return kExitUsage;
    }
    const SuiteStats st =
        run_monotonicity_suite(measure_function(tag), trials, seed);
    pass = st.violations == 0;
    const auto edges = margin_bin_edges();
    os << "{\"suite\": \"monotonicity:" << name << "\", \"trials\": "
       << st.trials << ", \"seed\": " << seed
       << ", \"violations\": " << st.violations
       << ", \"min_margin\": " << fmt17(st.min_margin)
       << ", \"histogram\": [";
    for (int b = 0; b < kMarginBins; ++b)
      os << "{\"lo\": " << json_number(edges[b])
         << ", \"hi\": " << json_number(edges[b + 1])
         << ", \"count\": " << st.histogram[b] << "}"
         << (b + 1 < kMarginBins ? ", " : "");
    os << "], \"worst_trial\": " << st.min_margin_trial
       << ", \"worst_state\": " << state_json_inline(st.worst_state)
       << ", \"worst_protocol\": " << protocol_json(st.worst_protocol)
       << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else if (suite.rfind("counterexample:", 0) == 0) {
    const std::string name = suite.substr(15);
    CounterexampleTarget target;
    if (name == "tau_sq") target = CounterexampleTarget::TauSq;
    else if (name == "omega_sq") target = CounterexampleTarget::OmegaSq;
    else if (name == "c_fourth") target = CounterexampleTarget::CFourth;
    else if (name == "n_omega_vs_c_sq") target = CounterexampleTarget::NOmegaVsCSq;
    else {
      std::cerr << "unknown counterexample target \"" << name
                << "\" (known: tau_sq, omega_sq, c_fourth, n_omega_vs_c_sq)\n";
      return kExitUsage;
    }
    const Counterexample ce = find_counterexample(target, trials, seed);
    pass = ce.found;
    os << "{\"suite\": \"counterexample:" << name << "\", \"max_trials\": "
       << trials << ", \"seed\": " << seed
       << ", \"found\": " << (ce.found ? "true" : "false");
    if (ce.found) {
      os << ", \"trial\": " << ce.trial
         << ", \"value\": " << fmt17(ce.value)
         << ", \"witness_state\": " << state_json_inline(ce.state);
      if (ce.protocol)
        os << ", \"witness_protocol\": " << protocol_json(*ce.protocol);
      if (ce.concurrence_index > 0)
        os << ", \"concurrence\": " << ce.concurrence_index;
    }
    os << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else {
    std::cerr << "unknown suite \"" << suite
              << "\" (known: ordering, ckw, identities, monotonicity:<m>, "
                 "counterexample:<t>)\n";
    return kExitUsage;
  }

  std::cout << os.str();
  return pass ? kExitOk : kExitSuiteFailure;
}

// ---- curve -----------------------------------------------------------------

int cmd_curve(const std::string& family, int samples, const std::string& out) {
  CurveFamily fam;
  if (family == "ghz-w") fam = CurveFamily::GhzW;
  else if (family == "w-bisep") fam = CurveFamily::WBisep;
  else {
    std::cerr << "unknown family \"" << family << "\" (known: ghz-w, w-bisep)\n";
    return kExitUsage;
  }
  const std::vector<CurveRow> rows = curve_family(fam, samples);
  std::ostringstream os;
  os << "x,tau,omega,c1_23,c2_13,c3_12\n";
  for (const CurveRow& r : rows)
    os << fmt17(r.x) << ',' << fmt17(r.tau) << ',' << fmt17(r.omega) << ','
       << fmt17(r.c1_23) << ',' << fmt17(r.c2_13) << ',' << fmt17(r.c3_12)
       << "\n";
  if (out.empty())
    std::cout << os.str();
  else
    write_text(out, os.str());
  return kExitOk;
}

// ---- maximize --------------------------------------------------------------

int cmd_maximize(const std::string& objective, int restarts,
                 std::uint64_t seed, const std::string& out) {
  MaxObjective obj;
  if (objective == "omega_on_W_closure") obj = MaxObjective::OmegaOnWClosure;
  else if (objective == "simultaneous_concurrence_on_W_closure")
    obj = MaxObjective::SimultaneousConcurrenceOnWClosure;
  else if (objective == "average_concurrence_on_W_closure")
    obj = MaxObjective::AverageConcurrenceOnWClosure;
  else if (objective == "omega_given_c1_equals_1")
    obj = MaxObjective::OmegaGivenC1Equals1;
  else {
    std::cerr << "unknown objective \"" << objective
              << "\" (known: omega_on_W_closure, "
                 "simultaneous_concurrence_on_W_closure, "
                 "average_concurrence_on_W_closure, omega_given_c1_equals_1)\n";
    return kExitUsage;
  }
  const MaximizeResult res = maximize(obj, restarts, seed);
  std::ostringstream os;
  os << "{\"objective\": \"" << objective << "\", \"restarts\": " << restarts
     << ", \"seed\": " << seed
     << ", \"best_value\": " << fmt17(res.best_value) << ", \"eta\": [";
  for (int i = 0; i < 5; ++i)
    os << fmt17(res.best.eta[i]) << (i < 4 ? ", " : "");
  os << "], \"theta\": " << fmt17(res.best.theta) << ", \"restart_values\": [";
  for (size_t i = 0; i < res.restart_values.size(); ++i)
    os << fmt17(res.restart_values[i])
       << (i + 1 < res.restart_values.size() ? ", " : "");
  os << "]}\n";
  if (out.empty())
    std::cout << os.str();
  else
    write_text(out, os.str());
  return kExitOk;
}

// ---- random ----------------------------------------------------------------

int cmd_random(int count, std::uint64_t seed, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    RngStream rng(RngStream::derive(seed, i));
    const PureState psi = sample_haar_state(rng);
    char name[64];
    std::snprintf(name, sizeof(name), "state_%04d.json", i);
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    char label[64];
    std::snprintf(label, sizeof(label), "haar seed=%" PRIu64 " index=%d", seed, i);
    write_state_file(path, psi, label);
    std::cout << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "threeqb: polynomial entanglement measures, SLOCC classification and "
      "property verification for pure three-qubit states"};
  app.require_subcommand(1);

  std::string state_spec, format = "json", suite, family = "ghz-w";
  std::string objective = "omega_on_W_closure", out;
  double tol = 1e-9;
  long long trials = 10000;
  std::uint64_t seed = 1;
  int samples = 201, restarts = 50, count = 1;

  CLI::App* compute = app.add_subcommand("compute", "invariant report of one state");
  compute->add_option("--state", state_spec, "state file path or builtin:<name>")->required();
  compute->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* cls = app.add_subcommand("classify", "SLOCC class and FTS rank");
  cls->add_option("--state", state_spec, "state file path or builtin:<name>")->required();
  cls->add_option("--tol", tol, "relative zero tolerance on the degree-4 row");

  CLI::App* verify = app.add_subcommand("verify", "statistical property suites");
  verify
      ->add_option("--suite", suite,
                   "ordering | ckw | identities | monotonicity:<measure> | "
                   "counterexample:<target>")
      ->required();
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--seed", seed, "RNG seed");

  CLI::App* curve = app.add_subcommand("curve", "figure data along state families");
  curve->add_option("--family", family, "ghz-w or w-bisep")
      ->check(CLI::IsMember({"ghz-w", "w-bisep"}));
  curve->add_option("--samples", samples, "grid points over [-1, 1]")
      ->check(CLI::Range(2, 1000000));
  curve->add_option("--out", out, "output CSV path (default stdout)");

  CLI::App* maxi = app.add_subcommand("maximize", "canonical-form maximizations");
  maxi->add_option("--objective", objective, "objective name");
  maxi->add_option("--restarts", restarts, "random restarts")
      ->check(CLI::Range(1, 1000000));
  maxi->add_option("--seed", seed, "RNG seed");
  maxi->add_option("--out", out, "output JSON path (default stdout)");

  CLI::App* random = app.add_subcommand("random", "write Haar-random state files");
  random->add_option("--count", count, "number of states")->required();
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(state_spec, format);
    if (cls->parsed()) return cmd_classify(state_spec, tol);
    if (verify->parsed()) return cmd_verify(suite, trials, seed);
    if (curve->parsed()) return cmd_curve(family, samples, out);
    if (maxi->parsed()) return cmd_maximize(objective, restarts, seed, out);
    if (random->parsed()) {
      if (count < 1) {
        std::cerr << "random: --count must be >= 1\n";
        return kExitUsage;
      }
      return cmd_random(count, seed, out);
    }
  } catch (const StateFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClassificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
