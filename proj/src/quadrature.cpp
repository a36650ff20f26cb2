#include "cosmo_entropy/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace cosmo {

namespace {

// Kronrod 21-point abscissae on [0,1]; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.0,
    0.14887433898163121088,
    0.29439286270146019813,
    0.43339539412924719080,
    0.56275713466860468334,
    0.67940956829902440623,
    0.78081772658641689706,
    0.86506336668898451073,
    0.93015749135570822600,
    0.97390652851717172008,
    0.99565716302580808074,
};
constexpr std::array<double, 11> kKronrodWeights = {
    0.14944555400291690566,
    0.14773910490133849137,
    0.14277593857706008080,
    0.13470921731147332593,
    0.12349197626206585108,
    0.10938715880229764190,
    0.09312545458369760554,
    0.07503967481091995277,
    0.05475589657435199603,
    0.03255816230796472748,
    0.01169463886737187428,
};
constexpr std::array<double, 5> kGaussWeights = {
    0.29552422471475287017,
    0.26926671930999635509,
    0.21908636251598204400,
    0.14945134915058059315,
    0.06667134430868813759,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Sample positions for the 21-point rule on [a,b]: index 0 is the centre,
// then (left, right) pairs for each positive node.
std::array<double, 21> rule_points(double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 21> x{};
  x[0] = c;
  for (int j = 1; j <= 10; ++j) {
    x[2 * j - 1] = c - h * kKronrodNodes[j];
    x[2 * j] = c + h * kKronrodNodes[j];
  }
  return x;
}

struct RuleEstimate {
  double value;
  double error;
};

// Kronrod estimate with the QUADPACK error heuristic, from the 21 samples.
RuleEstimate apply_rule(const std::array<double, 21>& fv, double half_width) {
  const double fc = fv[0];
  double resk = kKronrodWeights[0] * fc;
  double resg = 0;
  double resabs = kKronrodWeights[0] * std::fabs(fc);
  for (int j = 1; j <= 10; ++j) {
    const double f1 = fv[2 * j - 1];
    const double f2 = fv[2 * j];
    resk += kKronrodWeights[j] * (f1 + f2);
    resabs += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += kGaussWeights[(j - 1) / 2] * (f1 + f2);
  }
  const double mean = 0.5 * resk;
  double resasc = kKronrodWeights[0] * std::fabs(fc - mean);
  for (int j = 1; j <= 10; ++j) {
    resasc += kKronrodWeights[j] * (std::fabs(fv[2 * j - 1] - mean) + std::fabs(fv[2 * j] - mean));
  }
  const double h = std::fabs(half_width);
  resabs *= h;
  resasc *= h;
  double err = std::fabs((resk - resg) * half_width);
  if (resasc != 0 && err != 0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
  if (resabs > kTiny / (50 * kEps)) err = std::max(50 * kEps * resabs, err);
  return {resk * half_width, err};
}

void check_finite(double v, double x) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at x = " << x;
    throw std::domain_error(os.str());
  }
}

struct DoubleRule {
  const std::function<double(double)>& f;
  // Value/error pair in the accumulation type.
  struct Out {
    double value;
    double error;
  };
  Out operator()(double a, double b) const {
    const auto x = rule_points(a, b);
    std::array<double, 21> fv{};
    for (int i = 0; i < 21; ++i) {
      fv[i] = f(x[i]);
      check_finite(fv[i], x[i]);
    }
    const auto est = apply_rule(fv, 0.5 * (b - a));
    return {est.value, est.error};
  }
};

struct LogRule {
  const std::function<LogFloat(double)>& f;
  struct Out {
    LogFloat value;
    LogFloat error;
  };
  Out operator()(double a, double b) const {
    const auto x = rule_points(a, b);
    std::array<LogFloat, 21> lv{};
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 21; ++i) {
      lv[i] = f(x[i]);
      if (!lv[i].is_zero()) peak = std::max(peak, lv[i].ln_mag());
    }
    if (!std::isfinite(peak)) return {LogFloat(), LogFloat()};
    std::array<double, 21> fv{};
    for (int i = 0; i < 21; ++i) {
      fv[i] = lv[i].is_zero() ? 0.0 : lv[i].sign() * std::exp(lv[i].ln_mag() - peak);
    }
    const auto est = apply_rule(fv, 0.5 * (b - a));
    const LogFloat scale = LogFloat::from_ln(peak);
    return {LogFloat(est.value) * scale, LogFloat(est.error) * scale};
  }
};

double magnitude(double v) { return std::fabs(v); }
LogFloat magnitude(const LogFloat& v) { return v.abs(); }
double report(double v) { return v; }
double report(const LogFloat& v) { return v.ln_mag(); }

template <class Rule>
auto adaptive(const Rule& rule, double a, double b, const QuadratureSpec& spec) {
  using Out = decltype(rule(a, b));
  using Value = decltype(Out{}.value);
  spec.validate();
  if (!(a < b)) throw std::invalid_argument("integrate: require a < b");

  struct Panel {
    double lo, hi;
    Out est;
  };
  auto by_error = [](const Panel& p, const Panel& q) { return p.est.error < q.est.error; };

  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 1);
  heap.push_back({a, b, rule(a, b)});

  const Value abs_tol(spec.abs_tol);
  const Value rel_tol(spec.rel_tol);
  while (true) {
    Value total{};
    Value total_err{};
    for (const auto& p : heap) {
      total += p.est.value;
      total_err += p.est.error;
    }
    const Value scaled = rel_tol * magnitude(total);
    const Value tol = scaled > abs_tol ? scaled : abs_tol;
    if (total_err <= tol) return total;

    if (static_cast<int>(heap.size()) >= spec.max_subdivisions) {
      throw NonConvergence(static_cast<int>(heap.size()), report(total), report(total_err));
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw NonConvergence(static_cast<int>(heap.size()) + 1, report(total), report(total_err));
    }
    heap.push_back({worst.lo, mid, rule(worst.lo, mid)});
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back({mid, worst.hi, rule(mid, worst.hi)});
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw std::invalid_argument("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be at least 1");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  return adaptive(DoubleRule{f}, a, b, spec);
}

LogFloat integrate_log(const std::function<LogFloat(double)>& f_ln, double a, double b,
                       const QuadratureSpec& spec) {
  return adaptive(LogRule{f_ln}, a, b, spec);
}

}  // namespace cosmo
