#include "cosmo_entropy/vacuummatch.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cosmo_entropy/errors.hpp"

namespace cosmo::vacuum {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_sigma(double sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma)) throw std::domain_error("sigma must be positive and finite");
}

void check_x0(double x0) {
  if (!(x0 > 0) || x0 > 1) throw std::domain_error("matching point x0 must lie in (0, 1]");
}

// ln g(t) for t > 0, with g = sinh or cosh.
double ln_hyperbolic(double t, bool is_sinh) {
  if (t > 30) return t - kLn2;
  const double e = std::exp(-2 * t);
  return t - kLn2 + (is_sinh ? std::log(-std::expm1(-2 * t)) : std::log1p(e));
}

LogFloat hyperbolic(double t, bool is_sinh) { return LogFloat::from_ln(ln_hyperbolic(t, is_sinh)); }

bool is_sinh(Parity p) { return p == Parity::sinh; }

void check_quadrature_sigma(double sigma) {
  if (sigma > kQuadratureSigmaMax) {
    std::ostringstream os;
    os << "sigma = " << sigma << " exceeds the log-domain quadrature limit " << kQuadratureSigmaMax
       << "; use the closed forms";
    throw OutOfValidityRange(sigma, os.str());
  }
}

// int_0^x0 g(sigma x)^2 dx = sinh(2 t)/(4 sigma) -+ x0/2.
LogFloat inner_integral(double sigma, double x0, Parity parity) {
  const LogFloat half_term(x0 / 2);
  const LogFloat sinh2t = hyperbolic(2 * sigma * x0, true) / LogFloat(4 * sigma);
  return is_sinh(parity) ? sinh2t - half_term : sinh2t + half_term;
}

// int_x0^1 (A + B x)^2 dx = ((A + B)^3 - (A + B x0)^3) / (3 B).
LogFloat outer_integral(const LogFloat& A, const LogFloat& B, double x0) {
  const LogFloat hi = A + B;
  const LogFloat lo = A + B * LogFloat(x0);
  const LogFloat hi3 = hi * hi * hi;
  const LogFloat lo3 = lo * lo * lo;
  return (hi3 - lo3) / (LogFloat(3.0) * B);
}

// Plain-double f for the direct desk-scale quadrature.
double evaluate_direct(const MatchedVacuumState& s, double x, double A, double B) {
  if (x <= s.x0) {
    const double t = s.sigma * x;
    return (is_sinh(s.parity) ? std::sinh(t) : std::cosh(t)) / x;
  }
  return A / x + B;
}

}  // namespace

LogFloat reduce(const CosmoParams& p) { return entropy_scale(p); }

LogFloat inner_solution(double x, double sigma, Parity parity) {
  if (!(x > 0)) throw std::domain_error("inner_solution: require x > 0");
  check_sigma(sigma);
  return hyperbolic(sigma * x, is_sinh(parity)) / LogFloat(x);
}

LogFloat inner_derivative(double x, double sigma, Parity parity) {
  if (!(x > 0)) throw std::domain_error("inner_derivative: require x > 0");
  check_sigma(sigma);
  const double t = sigma * x;
  const LogFloat g = hyperbolic(t, is_sinh(parity));
  const LogFloat gp = hyperbolic(t, !is_sinh(parity));
  return (LogFloat(t) * gp - g) / LogFloat(x * x);
}

InnerOdeCheck verify_inner_ode(double x, double sigma, Parity parity) {
  if (!(x > 0) || !(x < 1)) throw std::domain_error("verify_inner_ode: require 0 < x < 1");
  check_sigma(sigma);
  // Work with g scaled by 2 e^(-t) so nothing overflows.
  const double t = sigma * x;
  const double e = std::exp(-2 * t);
  const double g = is_sinh(parity) ? 1 - e : 1 + e;
  const double gp = is_sinh(parity) ? 1 + e : 1 - e;
  const double f = g / x;
  const double f1 = (sigma * gp * x - g) / (x * x);
  const double f2 = (sigma * sigma * g * x * x - 2 * sigma * gp * x + 2 * g) / (x * x * x);
  const double radial = f2 + 2 * f1 / x;
  const double approx = radial - sigma * sigma * f;
  const double full = radial + sigma * sigma * (x * x - 1) * f;
  const double ref = sigma * sigma * std::fabs(f);
  return {std::fabs(approx) / ref, std::fabs(full) / ref};
}

LogFloat outer_solution(double x, const LogFloat& A, const LogFloat& B) {
  if (!(x > 0)) throw std::domain_error("outer_solution: require x > 0");
  if (B.is_zero()) return A / LogFloat(x);
  // B (1 + (A/B)/x): the ratio is O(1) for matched states, so this keeps
  // double precision in ln f where a log-sum-exp of e^(sigma x0)-sized terms
  // would lose about sigma x0 ulps.
  const double q = (A / B).to_double();
  if (std::isfinite(q) && q != 0) {
    const double u = q / x + 1.0;
    if (std::fabs(u) > LogFloat::kCancellationThreshold * (std::fabs(q / x) + 1.0)) return B * LogFloat(u);
  }
  return A / LogFloat(x) + B;
}

MatchedVacuumState match(double sigma, double x0, Parity parity, MatchMode mode) {
  check_sigma(sigma);
  check_x0(x0);
  MatchedVacuumState s;
  s.sigma = sigma;
  s.x0 = x0;
  s.parity = parity;
  s.mode = mode;

  if (s.pure_inner()) {
    s.norm = inner_integral(sigma, 1.0, parity).pow(-0.5);
    return s;
  }

  const double t = sigma * x0;
  if (mode == MatchMode::paper_leading_order) {
    s.A_coef = LogFloat::from_ln(std::log(x0 * sigma / 2) + t, -1);
    s.B_coef = LogFloat::from_ln(std::log(sigma / 2) + t, 1);
    s.norm = normalization_closed_form(sigma, x0);
    return s;
  }

  // Continuity of f and f' at x0, solved in closed form:
  //   A = g(t) - t g'(t),  B = sigma g'(t).
  const LogFloat g = hyperbolic(t, is_sinh(parity));
  const LogFloat gp = hyperbolic(t, !is_sinh(parity));
  s.A_coef = g - LogFloat(t) * gp;
  s.B_coef = LogFloat(sigma) * gp;
  const LogFloat total = inner_integral(sigma, x0, parity) + outer_integral(s.A_coef, s.B_coef, x0);
  s.norm = total.pow(-0.5);
  return s;
}

LogFloat evaluate(const MatchedVacuumState& s, double x) {
  if (!(x > 0) || x > 1) throw std::domain_error("evaluate: require 0 < x <= 1");
  if (x <= s.x0) return inner_solution(x, s.sigma, s.parity);
  return outer_solution(x, s.A_coef, s.B_coef);
}

LogFloat evaluate_derivative(const MatchedVacuumState& s, double x) {
  if (!(x > 0) || x > 1) throw std::domain_error("evaluate_derivative: require 0 < x <= 1");
  if (x <= s.x0) return inner_derivative(x, s.sigma, s.parity);
  return -s.A_coef / LogFloat(x * x);
}

Continuity continuity_at_x0(const MatchedVacuumState& s) {
  if (s.pure_inner()) return {0.0, 0.0};
  const LogFloat fin = inner_solution(s.x0, s.sigma, s.parity);
  const LogFloat fout = outer_solution(s.x0, s.A_coef, s.B_coef);
  const LogFloat din = inner_derivative(s.x0, s.sigma, s.parity);
  const LogFloat dout = -s.A_coef / LogFloat(s.x0 * s.x0);
  return {relative_difference(fin, fout), relative_difference(din, dout)};
}

LogFloat normalization_closed_form(double sigma, double x0) {
  check_sigma(sigma);
  if (!(x0 > 0) || !(x0 < 1)) {
    throw std::domain_error("closed-form normalisation is singular at x0 = 1; require 0 < x0 < 1");
  }
  const double ln = 0.5 * std::log(12.0) - std::log(sigma) - sigma * x0 - 1.5 * std::log1p(-x0);
  return LogFloat::from_ln(ln);
}

LogFloat normalization_quadrature(const MatchedVacuumState& s, const QuadratureSpec& spec) {
  check_quadrature_sigma(s.sigma);
  auto density = [&](double x) {
    const LogFloat f = evaluate(s, x);
    return f * f * LogFloat(x * x);
  };
  LogFloat total = integrate_log(density, 0.0, s.x0, spec);
  if (!s.pure_inner()) total += integrate_log(density, s.x0, 1.0, spec);
  return total.pow(-0.5);
}

LogFloat normalization(double sigma, double x0, Parity parity, MatchMode mode) {
  if (mode == MatchMode::paper_leading_order) return normalization_closed_form(sigma, x0);
  return normalization_quadrature(match(sigma, x0, parity, MatchMode::exact_numeric));
}

double x2_closed(double x0) {
  if (!(x0 >= 0) || x0 > 1) throw std::domain_error("x2_closed: require 0 <= x0 <= 1");
  return (x0 * x0 + 3 * x0 + 6) / 10;
}

double x2_quadrature(const MatchedVacuumState& s, const QuadratureSpec& spec) {
  if (s.sigma <= kDirectSigmaMax) {
    const double A = s.A_coef.to_double();
    const double B = s.B_coef.to_double();
    auto moment = [&](int power) {
      auto integrand = [&, power](double x) {
        const double f = evaluate_direct(s, x, A, B);
        return f * f * std::pow(x, power);
      };
      double total = integrate(integrand, 0.0, s.x0, spec);
      if (!s.pure_inner()) total += integrate(integrand, s.x0, 1.0, spec);
      return total;
    };
    return moment(4) / moment(2);
  }
  check_quadrature_sigma(s.sigma);
  auto moment = [&](int power) {
    auto integrand = [&, power](double x) {
      const LogFloat f = evaluate(s, x);
      return f * f * LogFloat(std::pow(x, power));
    };
    LogFloat total = integrate_log(integrand, 0.0, s.x0, spec);
    if (!s.pure_inner()) total += integrate_log(integrand, s.x0, 1.0, spec);
    return total;
  };
  return (moment(4) / moment(2)).to_double();
}

LogFloat grav_entropy_nonperturbative(const CosmoParams& p, double x0, double N_factor) {
  check_x0(x0);
  if (!(N_factor > 0)) throw std::invalid_argument("N factor must be positive");
  return LogFloat(N_factor) * entropy_scale(p) * LogFloat(x2_closed(x0));
}

}  // namespace cosmo::vacuum
