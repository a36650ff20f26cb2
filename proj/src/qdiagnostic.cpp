#include "cosmo_entropy/qdiagnostic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/exactradial.hpp"
#include "cosmo_entropy/finite_diff.hpp"
#include "cosmo_entropy/vacuummatch.hpp"

namespace cosmo::qdiag {

namespace {

constexpr double kFourPi = 4 * std::numbers::pi;
constexpr int kScanPoints = 2000;

void check_domain(const RadialWavefunction& wf) {
  if (!wf.psi) throw std::invalid_argument("wavefunction callable is empty");
  if (!(wf.r_min >= 0) || !(wf.r_max > wf.r_min)) {
    throw std::invalid_argument("wavefunction domain must satisfy 0 <= r_min < r_max");
  }
}

cplx integrate_complex(const std::function<cplx(double)>& f, double a, double b,
                       const QuadratureSpec& spec) {
  // Error is judged against |integral|: rounding noise in a nearly zero
  // imaginary part must not demand its own relative accuracy, and vice versa.
  const double re = integrate([&](double x) { return f(x).real(); }, a, b, spec);
  QuadratureSpec im_spec = spec;
  im_spec.abs_tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(re));
  const double im = integrate([&](double x) { return f(x).imag(); }, a, b, im_spec);
  return {re, im};
}

std::function<cplx(double)> derivative_of(const RadialWavefunction& wf) {
  if (wf.dpsi) return wf.dpsi;
  const double width = wf.r_max - wf.r_min;
  return [psi = wf.psi, lo = wf.r_min, hi = wf.r_max, width](double r) {
    // Keep the five-point stencil inside the domain.
    double h = 1e-4 * width;
    h = std::min({h, (r - lo) / 2.5, (hi - r) / 2.5});
    h = std::max(h, 1e-9 * width);
    return finite_diff(psi, r, h);
  };
}

// Largest |psi| on a midpoint scan. Endpoints are avoided since some states
// are singular there.
double scan_max(const RadialWavefunction& wf) {
  const double step = (wf.r_max - wf.r_min) / kScanPoints;
  double best = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    best = std::max(best, std::abs(wf.psi(wf.r_min + (i + 0.5) * step)));
  }
  return best;
}

double scan_excluded_fraction(const RadialWavefunction& wf, double cutoff) {
  const double step = (wf.r_max - wf.r_min) / kScanPoints;
  double dropped = 0;
  double total = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double r = wf.r_min + (i + 0.5) * step;
    total += r * r;
    if (std::abs(wf.psi(r)) < cutoff) dropped += r * r;
  }
  return total > 0 ? dropped / total : 0.0;
}

double checked_norm(const RadialWavefunction& wf, const QOptions& opts) {
  const double norm = norm_integral(wf, opts.quad);
  if (!(norm > 0) || !std::isfinite(norm)) throw NotNormalized(norm);
  if (opts.normalization == NormalizationPolicy::require &&
      std::fabs(norm - 1) > opts.normalization_tolerance) {
    throw NotNormalized(norm);
  }
  return opts.normalization == NormalizationPolicy::apply ? norm : 1.0;
}

std::optional<cplx> try_integrate(const std::function<cplx(double)>& f, double a, double b,
                                  const QuadratureSpec& spec) {
  try {
    return integrate_complex(f, a, b, spec);
  } catch (const NonConvergence&) {
    return std::nullopt;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

std::optional<cplx> scaled(const std::optional<cplx>& v, double factor) {
  if (!v) return std::nullopt;
  return *v * factor;
}

void finish(QVReport& rep, double m, double hbar) {
  if (rep.V_expect == 0) throw ZeroPotentialExpectation();
  rep.Q_expect = rep.E - rep.V_expect + hbar * hbar / (8 * m) * rep.bracket.total.real();
  rep.ratio = rep.Q_expect / rep.V_expect;
}

// key=value list after the "kind:" prefix.
std::map<std::string, std::string> parse_pairs(std::string_view body) {
  std::map<std::string, std::string> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("state spec: expected key=value, got '" + std::string(item) + "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
  }
  return out;
}

class Pairs {
 public:
  Pairs(std::string kind, std::map<std::string, std::string> kv)
      : kind_(std::move(kind)), kv_(std::move(kv)) {}

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = kv_.find(key);
    if (it == kv_.end()) {
      if (fallback) return *fallback;
      throw std::invalid_argument(kind_ + " state: missing '" + key + "'");
    }
    const std::string text = it->second;
    kv_.erase(it);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
      throw std::invalid_argument(kind_ + " state: '" + key + "' is not a number: " + text);
    }
    return v;
  }

  std::string word(const std::string& key, const std::string& fallback) {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    std::string v = it->second;
    kv_.erase(it);
    return v;
  }

  void finish() const {
    if (!kv_.empty()) {
      throw std::invalid_argument(kind_ + " state: unknown key '" + kv_.begin()->first + "'");
    }
  }

 private:
  std::string kind_;
  std::map<std::string, std::string> kv_;
};

std::function<double(double)> hubble_potential(double m, double H0) {
  return [k = m * H0 * H0](double r) { return -0.5 * k * r * r; };
}

DiagnosticProblem matched_problem(Pairs& kv) {
  const double sigma = kv.number("sigma");
  const double x0 = kv.number("x0", 1.0);
  const std::string parity = kv.word("parity", "sinh");
  const std::string mode = kv.word("mode", "exact");
  kv.finish();
  if (parity != "sinh" && parity != "cosh") throw std::invalid_argument("parity must be sinh or cosh");
  if (mode != "exact" && mode != "paper") throw std::invalid_argument("mode must be exact or paper");
  if (sigma > vacuum::kQuadratureSigmaMax) {
    throw OutOfValidityRange(sigma, "matched state diagnostics need sigma <= 1e9");
  }
  const auto state = vacuum::match(
      sigma, x0, parity == "sinh" ? vacuum::Parity::sinh : vacuum::Parity::cosh,
      mode == "exact" ? vacuum::MatchMode::exact_numeric : vacuum::MatchMode::paper_leading_order);
  const LogFloat scale = state.norm / LogFloat(std::sqrt(kFourPi));

  DiagnosticProblem pb;
  pb.kind = "matched";
  std::ostringstream os;
  os << "matched vacuum sigma=" << sigma << " x0=" << x0 << " parity=" << parity << " mode=" << mode;
  pb.description = os.str();
  pb.H0 = sigma;
  pb.wf.r_min = 0;
  pb.wf.r_max = 1;
  pb.wf.psi = [state, scale](double x) { return cplx((scale * vacuum::evaluate(state, x)).to_double(), 0); };
  pb.wf.dpsi = [state, scale](double x) {
    return cplx((scale * vacuum::evaluate_derivative(state, x)).to_double(), 0);
  };
  pb.V = hubble_potential(1.0, sigma);
  pb.E_auto = -0.5 * sigma * sigma;
  return pb;
}

DiagnosticProblem exact_problem(Pairs& kv) {
  const double branch = kv.number("branch", 1.0);
  const double lambda = kv.number("lambda");
  const double a = kv.number("a", 1.0);
  if (branch != 1 && branch != 2) throw std::invalid_argument("branch must be 1 or 2");
  const double rmin = kv.number("rmin", branch == 1 ? 0.0 : 0.05 / a);
  const double rmax = kv.number("rmax", 3.0 / a);
  kv.finish();
  if (branch == 2 && !(rmin > 0)) throw std::invalid_argument("branch 2 needs rmin > 0");
  const exactradial::ExactRadialState st{
      branch == 1 ? exactradial::Branch::regular : exactradial::Branch::singular, lambda, a};
  // Probe once so validity errors surface while parsing.
  (void)exactradial::exact_radial(st, rmax);

  DiagnosticProblem pb;
  pb.kind = "exact";
  std::ostringstream os;
  os << "exact branch=" << branch << " lambda=" << lambda << " a=" << a << " r in [" << rmin
     << ", " << rmax << "]";
  pb.description = os.str();
  pb.H0 = a * a;
  pb.wf.r_min = rmin;
  pb.wf.r_max = rmax;
  pb.wf.psi = [st](double r) { return exactradial::exact_radial(st, r); };
  pb.wf.dpsi = [st](double r) { return exactradial::exact_radial_derivative(st, r); };
  pb.V = hubble_potential(1.0, pb.H0);
  pb.E_auto = lambda * pb.H0 / 2;
  return pb;
}

DiagnosticProblem spherical_problem(Pairs& kv) {
  freewaves::SphericalWaveState st;
  st.kappa = kv.number("kappa");
  st.R0 = kv.number("R0", 1.0);
  st.sign = kv.number("sign", 1.0) < 0 ? -1 : 1;
  const double H0 = kv.number("H0", 1.0);
  kv.finish();

  DiagnosticProblem pb;
  pb.kind = "spherical";
  std::ostringstream os;
  os << "spherical wave kappa=" << st.kappa << " R0=" << st.R0 << " sign=" << st.sign;
  pb.description = os.str();
  pb.H0 = H0;
  pb.wf.r_min = 0;
  pb.wf.r_max = st.R0;
  pb.wf.psi = [st](double r) { return freewaves::spherical_wave_eval(st, r); };
  pb.wf.dpsi = [st](double r) {
    return freewaves::spherical_wave_eval(st, r) * cplx(-1.0 / r, st.sign * st.kappa);
  };
  pb.V = hubble_potential(1.0, H0);
  pb.E_auto = 0.5 * st.kappa * st.kappa;
  return pb;
}

DiagnosticProblem plane_problem(Pairs& kv) {
  freewaves::PlaneWaveState st;
  st.k = {kv.number("kx", 0.0), kv.number("ky", 0.0), kv.number("kz", 0.0)};
  st.R0 = kv.number("R0", 1.0);
  const double H0 = kv.number("H0", 1.0);
  kv.finish();

  DiagnosticProblem pb;
  pb.kind = "plane";
  std::ostringstream os;
  os << "plane wave k=(" << st.k[0] << ", " << st.k[1] << ", " << st.k[2] << ") box [0, " << st.R0
     << "]^3";
  pb.description = os.str();
  pb.H0 = H0;
  pb.plane = st;
  pb.E_auto = 0.5 * (st.k[0] * st.k[0] + st.k[1] * st.k[1] + st.k[2] * st.k[2]);
  return pb;
}

}  // namespace

double norm_integral(const RadialWavefunction& wf, const QuadratureSpec& spec) {
  check_domain(wf);
  return kFourPi *
         integrate([&](double r) { return std::norm(wf.psi(r)) * r * r; }, wf.r_min, wf.r_max, spec);
}

double potential_expectation(const RadialWavefunction& wf, const std::function<double(double)>& V,
                             const QOptions& opts) {
  check_domain(wf);
  const double norm = checked_norm(wf, opts);
  const double raw = kFourPi * integrate([&](double r) { return std::norm(wf.psi(r)) * V(r) * r * r; },
                                         wf.r_min, wf.r_max, opts.quad);
  return raw / norm;
}

QVReport qv_ratio(const RadialWavefunction& wf, double E, const std::function<double(double)>& V,
                  double m, double hbar, const QOptions& opts) {
  check_domain(wf);
  if (!(m > 0) || !(hbar > 0)) throw std::invalid_argument("qv_ratio: m and hbar must be positive");
  QVReport rep;
  rep.E = E;
  rep.norm = norm_integral(wf, opts.quad);
  const double norm = checked_norm(wf, opts);
  rep.V_expect = potential_expectation(wf, V, opts);

  const auto dpsi = derivative_of(wf);
  const double cutoff = opts.node_cutoff * scan_max(wf);
  rep.excluded_fraction = scan_excluded_fraction(wf, cutoff);

  // Each term with its measure; zero where psi is numerically a node.
  auto term = [&](int which) {
    return [&, which](double r) -> cplx {
      const cplx p = wf.psi(r);
      if (std::abs(p) < cutoff) return 0.0;
      const cplx d = dpsi(r);
      const double w = kFourPi * r * r;
      switch (which) {
        case 0: return w * std::conj(p) / p * d * d;
        case 1: return w * p / std::conj(p) * std::conj(d) * std::conj(d);
        case 2: return w * -2.0 * std::norm(d);
        default: {
          // Summed pointwise so a real psi cancels exactly rather than after
          // three separately rounded integrals.
          const cplx t1 = std::conj(p) / p * d * d;
          return w * (t1 + std::conj(t1) - 2.0 * std::norm(d));
        }
      }
    };
  };

  rep.bracket.conj_over_psi = scaled(try_integrate(term(0), wf.r_min, wf.r_max, opts.quad), 1 / norm);
  rep.bracket.psi_over_conj = scaled(try_integrate(term(1), wf.r_min, wf.r_max, opts.quad), 1 / norm);
  rep.bracket.cross = scaled(try_integrate(term(2), wf.r_min, wf.r_max, opts.quad), 1 / norm);
  rep.bracket.total = integrate_complex(term(3), wf.r_min, wf.r_max, opts.quad) / norm;
  finish(rep, m, hbar);
  return rep;
}

QVReport qv_ratio_plane(const freewaves::PlaneWaveState& s, double E, double m, double hbar,
                        double H0, const QOptions& opts) {
  if (!(s.R0 > 0)) throw std::invalid_argument("plane wave box size must be positive");
  if (!(m > 0) || !(hbar > 0)) throw std::invalid_argument("qv_ratio_plane: m and hbar must be positive");
  const double L = s.R0;
  const double amp = 1 / std::sqrt(L);

  struct Axis {
    double norm, x2;
    cplx t1, t2, t3, total;
  };
  auto axis = [&](double k) {
    auto phi = [=](double x) { return std::polar(amp, k * x); };
    auto dphi = [=](double x) { return cplx(0, k) * std::polar(amp, k * x); };
    Axis a;
    a.norm = integrate([&](double x) { return std::norm(phi(x)); }, 0, L, opts.quad);
    a.x2 = integrate([&](double x) { return std::norm(phi(x)) * x * x; }, 0, L, opts.quad);
    a.t1 = integrate_complex([&](double x) { return std::conj(phi(x)) / phi(x) * dphi(x) * dphi(x); },
                             0, L, opts.quad);
    a.t2 = integrate_complex(
        [&](double x) { return phi(x) / std::conj(phi(x)) * std::conj(dphi(x)) * std::conj(dphi(x)); },
        0, L, opts.quad);
    a.t3 = integrate_complex([&](double x) { return cplx(-2.0 * std::norm(dphi(x))); }, 0, L, opts.quad);
    a.total = integrate_complex(
        [&](double x) {
          const cplx t = std::conj(phi(x)) / phi(x) * dphi(x) * dphi(x);
          return t + std::conj(t) - 2.0 * std::norm(dphi(x));
        },
        0, L, opts.quad);
    return a;
  };
  const Axis ax[3] = {axis(s.k[0]), axis(s.k[1]), axis(s.k[2])};
  const double norm = ax[0].norm * ax[1].norm * ax[2].norm;
  if (opts.normalization == NormalizationPolicy::require &&
      std::fabs(norm - 1) > opts.normalization_tolerance) {
    throw NotNormalized(norm);
  }

  // Separable sums: each gradient term acts on one axis, the others contribute their norms.
  cplx t1 = 0, t2 = 0, t3 = 0, total = 0;
  double r2 = 0;
  for (int i = 0; i < 3; ++i) {
    const double others = norm / ax[i].norm;
    t1 += ax[i].t1 * others;
    t2 += ax[i].t2 * others;
    t3 += ax[i].t3 * others;
    total += ax[i].total * others;
    r2 += ax[i].x2 * others;
  }
  QVReport rep;
  rep.E = E;
  rep.norm = norm;
  rep.V_expect = -0.5 * m * H0 * H0 * r2 / norm;
  rep.bracket = {t1 / norm, t2 / norm, t3 / norm, total / norm};
  finish(rep, m, hbar);
  return rep;
}

Compliance violation_assessment(double ratio, double threshold) {
  if (!std::isfinite(ratio)) throw std::domain_error("violation_assessment: ratio is not finite");
  if (!(threshold > 0)) throw std::invalid_argument("violation_assessment: threshold must be positive");
  const double mag = std::fabs(ratio);
  if (mag <= threshold) return Compliance::compliant;
  if (mag <= 10 * threshold) return Compliance::marginal;
  return Compliance::violated;
}

Compliance violation_assessment(const QVReport& report, double threshold) {
  return violation_assessment(report.ratio, threshold);
}

std::string_view to_string(Compliance c) {
  switch (c) {
    case Compliance::compliant: return "compliant";
    case Compliance::marginal: return "marginal";
    case Compliance::violated: return "violated";
  }
  return "unknown";
}

DiagnosticProblem parse_state(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string kind(spec.substr(0, colon));
  Pairs kv(kind, parse_pairs(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1)));
  if (kind == "matched") return matched_problem(kv);
  if (kind == "exact") return exact_problem(kv);
  if (kind == "spherical") return spherical_problem(kv);
  if (kind == "plane") return plane_problem(kv);
  throw std::invalid_argument("unknown state kind '" + kind + "' (matched, exact, spherical, plane)");
}

QVReport diagnose(const DiagnosticProblem& problem, double E, const QOptions& opts) {
  if (problem.plane) return qv_ratio_plane(*problem.plane, E, problem.m, problem.hbar, problem.H0, opts);
  return qv_ratio(problem.wf, E, problem.V, problem.m, problem.hbar, opts);
}

std::vector<LambdaSweepPoint> lambda_sweep(double a, const std::vector<double>& lambdas,
                                           double r_min, double r_max, const QOptions& opts) {
  std::vector<LambdaSweepPoint> out;
  out.reserve(lambdas.size());
  const double H0 = a * a;
  for (double lambda : lambdas) {
    const exactradial::ExactRadialState st{exactradial::Branch::regular, lambda, a};
    RadialWavefunction wf;
    wf.r_min = r_min;
    wf.r_max = r_max;
    wf.psi = [st](double r) { return exactradial::exact_radial(st, r); };
    wf.dpsi = [st](double r) { return exactradial::exact_radial_derivative(st, r); };
    out.push_back({lambda, qv_ratio(wf, lambda * H0 / 2, hubble_potential(1.0, H0), 1.0, 1.0, opts)});
  }
  return out;
}

}  // namespace cosmo::qdiag
