// cosmo-entropy: entropy estimates, matched-vacuum sweeps, Q/V diagnostics
// and the verification suites from the command line.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/exactradial.hpp"
#include "cosmo_entropy/freewaves.hpp"
#include "cosmo_entropy/params.hpp"
#include "cosmo_entropy/qdiagnostic.hpp"
#include "cosmo_entropy/report.hpp"
#include "cosmo_entropy/vacuummatch.hpp"
#include "cosmo_entropy/verify.hpp"

namespace fs = std::filesystem;
using namespace cosmo;
using report::format_number;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string profile_path;
  bool no_sanity_gate = false;
};

fs::path executable_dir() {
  std::error_code ec;
  const auto self = fs::read_symlink("/proc/self/exe", ec);
  return ec ? fs::current_path() : self.parent_path();
}

// A profile argument is either a file path or a bare name looked up in the
// profile directory: --profile-path, then $COSMO_ENTROPY_PROFILE_PATH, then
// profiles/ next to the binary.
fs::path resolve_profile(const std::string& name, const Globals& g) {
  const fs::path direct(name);
  if (direct.has_extension() || direct.has_parent_path()) {
    if (fs::exists(direct)) return direct;
    throw UsageError("profile file not found: " + name);
  }
  std::vector<fs::path> dirs;
  if (!g.profile_path.empty()) dirs.emplace_back(g.profile_path);
  if (const char* env = std::getenv("COSMO_ENTROPY_PROFILE_PATH"); env && *env) dirs.emplace_back(env);
  dirs.push_back(executable_dir() / "profiles");
  for (const auto& d : dirs) {
    const auto candidate = d / (name + ".json");
    if (fs::exists(candidate)) return candidate;
  }
  std::string searched;
  for (const auto& d : dirs) searched += "\n  " + d.string();
  throw UsageError("profile '" + name + "' not found; searched:" + searched);
}

CosmoParams load_profile(const std::string& name, const Globals& g) {
  LoadOptions opts;
  opts.cosmology_gate = !g.no_sanity_gate;
  try {
    return load_params_file(resolve_profile(name, g), opts);
  } catch (const ConfigError& e) {
    throw UsageError(std::string("profile '") + name + "': " + e.what());
  }
}

double parse_n_factor(const std::string& text) {
  if (auto preset = freewaves::n_factor_preset(text)) return *preset;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !(v > 0) || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--N must be a positive number, paper-plane or paper-spherical; got '" + text + "'");
  }
}

void emit(const report::RunReport& rep, const Globals& g) {
  if (g.format == "json") {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    rep.write_text(std::cout);
  }
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string profile = "planck2015";
  std::string method;
  std::string N;
  std::optional<double> x0;
};

int cmd_estimate(const EstimateArgs& a, const Globals& g) {
  if (a.method == "nonperturbative" && !a.x0) throw UsageError("--x0 is required for --method nonperturbative");
  if (a.method != "nonperturbative" && a.x0) throw UsageError("--x0 only applies to --method nonperturbative");
  if (a.x0 && (!(*a.x0 > 0) || *a.x0 > 1)) throw UsageError("--x0 must lie in (0, 1]");
  const std::string n_text = !a.N.empty() ? a.N : (a.method == "spherical" ? "paper-spherical" : "paper-plane");
  const double N = parse_n_factor(n_text);
  const CosmoParams p = load_profile(a.profile, g);
  const auto scales = derive_scales(p);

  report::RunReport rep;
  rep.inputs["profile"] = a.profile;
  rep.inputs["params"] = report::to_json(p);
  rep.inputs["method"] = a.method;
  rep.inputs["N_factor"] = N;
  if (a.x0) rep.inputs["x0"] = *a.x0;

  rep.add("sigma0", scales.sigma0_log, "", "sigma0 = m H0 R0^2 / hbar");
  LogFloat S;
  std::string formula;
  if (a.method == "plane") {
    S = freewaves::grav_entropy_plane(p, N);
    formula = "<S_g>/k_B = N m H0 R0^2 / hbar, plane wave in the box [0,R0]^3";
  } else if (a.method == "spherical") {
    S = freewaves::grav_entropy_spherical(p, N);
    formula = "<S_g>/k_B = N m H0 R0^2 / (3 hbar), l=0 spherical wave in the ball r<=R0";
  } else {
    S = vacuum::grav_entropy_nonperturbative(p, *a.x0, N);
    rep.add("x2_closed", vacuum::x2_closed(*a.x0), "", "<x^2> = (x0^2 + 3 x0 + 6)/10, matched vacuum");
    formula = "<S_g>/k_B = N sigma0 <x^2>(x0), matched vacuum";
  }
  rep.add("S_g/k_B", S, "k_B", formula);
  rep.add("log10(S_g/k_B)", S.log10_abs(), "", formula);
  rep.add("S_m/k_B", -3 * std::log(p.R0), "k_B (R0 in m)", "<S_m>/k_B = -3 ln R0, R0-dependent part of 2 <ln A>");
  if (a.method == "spherical") {
    rep.add("S_m/k_B constant", 2 - std::log(4 * std::numbers::pi), "k_B", "R0-independent part 2 - ln 4pi, spherical wave");
  }
  emit(rep, g);
  return kExitOk;
}

// ---------------------------------------------------------------- sweep-x0

struct SweepArgs {
  std::string sigma = "100";
  std::string profile = "planck2015";
  double from = 0.05, to = 1.0;
  int steps = 20;
  std::string N = "paper-plane";
  std::string parity = "sinh";
  std::string mode = "exact";
  int jobs = 1;
};

int cmd_sweep(const SweepArgs& a, const Globals& g) {
  if (a.steps < 1) throw UsageError("--steps must be at least 1");
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (!(a.from > 0) || a.from > 1 || !(a.to > 0) || a.to > 1) throw UsageError("--from/--to must lie in (0, 1]");
  if (a.parity != "sinh" && a.parity != "cosh") throw UsageError("--parity must be sinh or cosh");
  if (a.mode != "exact" && a.mode != "paper") throw UsageError("--mode must be exact or paper");
  const double N = parse_n_factor(a.N);

  LogFloat sigma_log;
  double sigma = 0;
  if (a.sigma == "auto") {
    sigma_log = entropy_scale(load_profile(a.profile, g));
    sigma = sigma_log.to_double();
  } else {
    try {
      std::size_t used = 0;
      sigma = std::stod(a.sigma, &used);
      if (used != a.sigma.size()) throw std::invalid_argument(a.sigma);
    } catch (const std::exception&) {
      throw UsageError("--sigma must be a number or 'auto'");
    }
    if (!(sigma > 0) || !std::isfinite(sigma)) throw UsageError("--sigma must be positive");
    sigma_log = LogFloat(sigma);
  }
  const auto parity = a.parity == "sinh" ? vacuum::Parity::sinh : vacuum::Parity::cosh;
  const auto mode = a.mode == "exact" ? vacuum::MatchMode::exact_numeric : vacuum::MatchMode::paper_leading_order;
  const bool quadrature_possible = std::isfinite(sigma) && sigma <= vacuum::kQuadratureSigmaMax;

  struct Row {
    double x0, closed;
    std::optional<double> quad;
    double entropy_log10;
  };
  std::vector<Row> rows(static_cast<std::size_t>(a.steps));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const double x0 = a.steps == 1 ? a.from : std::lerp(a.from, a.to, static_cast<double>(i) / (a.steps - 1));
      Row r{x0, vacuum::x2_closed(x0), std::nullopt, 0};
      if (quadrature_possible) {
        try {
          r.quad = vacuum::x2_quadrature(vacuum::match(sigma, x0, parity, mode));
        } catch (const std::exception&) {
          r.quad.reset();
        }
      }
      r.entropy_log10 = (LogFloat(N) * sigma_log * LogFloat(r.closed)).log10_abs();
      rows[i] = r;
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < a.jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (g.format == "json") {
    report::json out = report::json::array();
    for (const auto& r : rows) {
      out.push_back({{"x0", r.x0}, {"x2_closed", r.closed},
                     {"x2_quadrature", r.quad ? report::json(*r.quad) : report::json(nullptr)},
                     {"entropy_log10", r.entropy_log10}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "x0,x2_closed,x2_quadrature,entropy_log10\n";
    for (const auto& r : rows) {
      std::cout << format_number(r.x0) << ',' << format_number(r.closed) << ','
                << (r.quad ? format_number(*r.quad) : "") << ',' << format_number(r.entropy_log10) << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- diagnose-q

struct DiagnoseArgs {
  std::string state;
  std::string E = "auto";
  double threshold = qdiag::kDefaultThreshold;
  bool sweep = false;
  double a = 1, lambda_from = -10, lambda_to = 10, rmin = 0, rmax = 3;
  int steps = 21;
};

int cmd_diagnose(const DiagnoseArgs& a, const Globals& g) {
  if (!(a.threshold > 0)) throw UsageError("--threshold must be positive");
  if (a.sweep) {
    if (a.steps < 1) throw UsageError("--steps must be at least 1");
    std::vector<double> lambdas;
    for (int i = 0; i < a.steps; ++i) {
      lambdas.push_back(a.steps == 1 ? a.lambda_from
                                     : std::lerp(a.lambda_from, a.lambda_to, static_cast<double>(i) / (a.steps - 1)));
    }
    const auto pts = qdiag::lambda_sweep(a.a, lambdas, a.rmin, a.rmax);
    std::cout << "lambda,E,V_expect,Q_expect,ratio,assessment\n";
    for (const auto& p : pts) {
      std::cout << format_number(p.lambda) << ',' << format_number(p.report.E) << ','
                << format_number(p.report.V_expect) << ',' << format_number(p.report.Q_expect) << ','
                << format_number(p.report.ratio) << ',' << qdiag::to_string(qdiag::violation_assessment(p.report, a.threshold))
                << '\n';
    }
    return kExitOk;
  }
  if (a.state.empty()) throw UsageError("--state is required (or use --sweep-lambda)");
  qdiag::DiagnosticProblem pb;
  try {
    pb = qdiag::parse_state(a.state);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  double E = pb.E_auto;
  if (a.E != "auto") {
    try {
      std::size_t used = 0;
      E = std::stod(a.E, &used);
      if (used != a.E.size()) throw std::invalid_argument(a.E);
    } catch (const std::exception&) {
      throw UsageError("--E must be a number or 'auto'");
    }
  }
  const auto rep = qdiag::diagnose(pb, E);
  report::json out;
  out["state"] = pb.description;
  out["units"] = "desk units: m = hbar = 1";
  out["report"] = report::to_json(rep);
  out["threshold"] = a.threshold;
  out["threshold_note"] = "0.1 is a default chosen by this tool, not a derived bound";
  out["assessment"] = std::string(qdiag::to_string(qdiag::violation_assessment(rep, a.threshold)));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- wavefunction

struct WavefunctionArgs {
  bool exact = false;
  int branch = 1;
  double lambda = 0, a = 1, rmin = 0.1, rmax = 2;
  int samples = 100;
};

int cmd_wavefunction(const WavefunctionArgs& w, const Globals&) {
  if (!w.exact) throw UsageError("only --exact wavefunctions are available");
  if (w.branch != 1 && w.branch != 2) throw UsageError("--branch must be 1 or 2");
  if (w.samples < 1) throw UsageError("--samples must be at least 1");
  if (!(w.rmax >= w.rmin) || w.rmin < 0) throw UsageError("need 0 <= rmin <= rmax");
  if (!(w.a > 0)) throw UsageError("--a must be positive");
  const exactradial::ExactRadialState st{w.branch == 1 ? exactradial::Branch::regular : exactradial::Branch::singular,
                                         w.lambda, w.a};
  std::ostringstream csv;
  csv << "r,Re,Im,abs2\n";
  try {
    for (int i = 0; i < w.samples; ++i) {
      const double r = w.samples == 1 ? w.rmin : std::lerp(w.rmin, w.rmax, static_cast<double>(i) / (w.samples - 1));
      const auto v = exactradial::exact_radial(st, r);
      csv << format_number(r) << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << ','
          << format_number(std::norm(v)) << '\n';
    }
  } catch (const OutOfValidityRange& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "The series form is only usable at desk scale. For the astronomical vacuum use the\n"
              << "matched inner/outer solution instead, e.g. `cosmo-entropy sweep-x0 --sigma auto`\n"
              << "or `cosmo-entropy estimate --method nonperturbative --x0 1`.\n";
    return kExitFailure;
  }
  std::cout << csv.str();
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  double sigma = 100;
  std::string profile = "planck2015";
};

int cmd_verify(const VerifyArgs& v, const Globals& g) {
  const auto& names = verify::suite_names();
  if (v.suite != "all" && std::find(names.begin(), names.end(), v.suite) == names.end()) {
    throw UsageError("unknown suite '" + v.suite + "'");
  }
  if (!(v.sigma > 0)) throw UsageError("--sigma must be positive");
  verify::VerifyOptions opts;
  opts.sigma = v.sigma;
  std::string profile_note;
  try {
    opts.cosmology = load_profile(v.profile, g);
  } catch (const UsageError& e) {
    if (v.profile != "planck2015") throw;
    profile_note = std::string("profile checks skipped: ") + e.what();
  }
  const auto results = verify::run(v.suite, opts);
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed;

  if (g.format == "json") {
    report::json out;
    out["suite"] = v.suite;
    out["sigma"] = v.sigma;
    report::json checks = report::json::array();
    for (const auto& r : results) {
      checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"measured", r.measured},
                        {"tolerance", r.tolerance}, {"detail", r.detail}});
    }
    out["checks"] = std::move(checks);
    out["failed"] = failed;
    if (!profile_note.empty()) out["note"] = profile_note;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << format_number(r.measured)
                << " vs " << format_number(r.tolerance) << ")";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << '\n';
    }
    if (!profile_note.empty()) std::cout << profile_note << '\n';
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy estimates for a Newtonian quantum universe"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--profile-path", g.profile_path, "Directory holding <name>.json profiles");
  app.add_flag("--no-sanity-gate", g.no_sanity_gate, "Accept H0 outside [1e-19, 1e-17] 1/s for cosmology profiles");

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "Gravitational and matter entropy estimates");
  c_est->add_option("--profile", est.profile, "Profile name or JSON file")->capture_default_str();
  c_est->add_option("--method", est.method, "plane, spherical or nonperturbative")
      ->required()
      ->check(CLI::IsMember({"plane", "spherical", "nonperturbative"}));
  c_est->add_option("--N", est.N, "N factor: a number, paper-plane or paper-spherical");
  c_est->add_option("--x0", est.x0, "Matching point (nonperturbative only)");

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("sweep-x0", "Tabulate <x^2> and the entropy against the matching point");
  c_sw->add_option("--sigma", sw.sigma, "Dimensionless sigma, or 'auto' for the profile's sigma0")->capture_default_str();
  c_sw->add_option("--profile", sw.profile, "Profile used by --sigma auto")->capture_default_str();
  c_sw->add_option("--from", sw.from)->capture_default_str();
  c_sw->add_option("--to", sw.to)->capture_default_str();
  c_sw->add_option("--steps", sw.steps, "Number of rows")->capture_default_str();
  c_sw->add_option("--N", sw.N)->capture_default_str();
  c_sw->add_option("--parity", sw.parity)->capture_default_str();
  c_sw->add_option("--mode", sw.mode, "exact or paper matching")->capture_default_str();
  c_sw->add_option("--jobs", sw.jobs, "Worker threads")->capture_default_str();

  DiagnoseArgs dq;
  auto* c_dq = app.add_subcommand("diagnose-q", "<Q>/<V> for a named state");
  c_dq->add_option("--state", dq.state,
                   "e.g. matched:sigma=100,x0=0.5,parity=sinh | exact:branch=1,lambda=3,a=1 | "
                   "spherical:kappa=3,R0=1 | plane:kx=1,ky=0,kz=0,R0=1");
  c_dq->add_option("--E", dq.E, "Energy, or 'auto' for the state's own")->capture_default_str();
  c_dq->add_option("--threshold", dq.threshold)->capture_default_str();
  c_dq->add_flag("--sweep-lambda", dq.sweep, "Scan regular exact states over lambda instead");
  c_dq->add_option("--a", dq.a)->capture_default_str();
  c_dq->add_option("--lambda-from", dq.lambda_from)->capture_default_str();
  c_dq->add_option("--lambda-to", dq.lambda_to)->capture_default_str();
  c_dq->add_option("--steps", dq.steps)->capture_default_str();
  c_dq->add_option("--rmin", dq.rmin)->capture_default_str();
  c_dq->add_option("--rmax", dq.rmax)->capture_default_str();

  WavefunctionArgs wf;
  auto* c_wf = app.add_subcommand("wavefunction", "Sample an exact radial solution as CSV");
  c_wf->add_flag("--exact", wf.exact, "Use the confluent hypergeometric solution");
  c_wf->add_option("--branch", wf.branch)->capture_default_str();
  c_wf->add_option("--lambda", wf.lambda)->capture_default_str();
  c_wf->add_option("--a", wf.a)->capture_default_str();
  c_wf->add_option("--rmin", wf.rmin)->capture_default_str();
  c_wf->add_option("--rmax", wf.rmax)->capture_default_str();
  c_wf->add_option("--samples", wf.samples)->capture_default_str();

  VerifyArgs vf;
  auto* c_vf = app.add_subcommand("verify", "Run the property and oracle suites");
  std::vector<std::string> suites{"all"};
  for (const auto& s : verify::suite_names()) suites.push_back(s);
  c_vf->add_option("--suite", vf.suite)->check(CLI::IsMember(suites))->capture_default_str();
  c_vf->add_option("--sigma", vf.sigma, "Extra desk-scale sigma")->capture_default_str();
  c_vf->add_option("--profile", vf.profile, "Profile for the astronomical consistency checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_est) return cmd_estimate(est, g);
    if (*c_sw) return cmd_sweep(sw, g);
    if (*c_dq) return cmd_diagnose(dq, g);
    if (*c_wf) return cmd_wavefunction(wf, g);
    if (*c_vf) return cmd_verify(vf, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
