#include "cosmo_entropy/exactradial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/finite_diff.hpp"

namespace cosmo::exactradial {

namespace {

using quad = __float128;

struct QComplex {
  quad re = 0;
  quad im = 0;

  QComplex() = default;
  QComplex(quad r, quad i) : re(r), im(i) {}
  explicit QComplex(cplx z) : re(z.real()), im(z.imag()) {}

  QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
  QComplex operator*(const QComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QComplex operator/(const QComplex& o) const {
    const quad d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  // Magnitude is only needed to steer the summation, so double is enough.
  double abs() const { return std::hypot(static_cast<double>(re), static_cast<double>(im)); }
  cplx to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

constexpr double kStopRatio = 1e-20;
// At most this many of the ~34 quad digits may be lost to cancellation.
constexpr double kMaxDigitLoss = 18.0;
constexpr int kMaxTerms = 20000;

bool is_pole(cplx gamma) {
  if (gamma.imag() != 0.0) return false;
  const double re = gamma.real();
  return re <= 0 && re == std::floor(re);
}

cplx series(cplx alpha, cplx gamma, cplx z) {
  const QComplex a(alpha);
  const QComplex c(gamma);
  const QComplex x(z);
  QComplex term(1, 0);
  QComplex sum(1, 0);
  double largest = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const quad nq = n;
    const QComplex num = (a + QComplex(nq, 0)) * x;
    const QComplex den = (c + QComplex(nq, 0)) * QComplex(nq + 1, 0);
    term = term * num / den;
    sum = sum + term;
    const double t = term.abs();
    largest = std::max(largest, t);
    const double s = sum.abs();
    // Stop only once the terms are decreasing and negligible.
    const double ratio = num.abs() / den.abs();
    if ((t == 0.0 || t <= kStopRatio * s) && ratio < 1.0) {
      if (s == 0.0 || largest / s > std::pow(10.0, kMaxDigitLoss)) {
        std::ostringstream os;
        os << "1F1 series cancellation too severe (max term / |sum| = " << (s == 0 ? INFINITY : largest / s)
           << ") for |z| = " << std::abs(z);
        throw OutOfValidityRange(std::abs(z), os.str());
      }
      return sum.to_complex();
    }
  }
  throw OutOfValidityRange(std::abs(z), "1F1 series did not terminate");
}

}  // namespace

cplx hyp1f1(const Hyp1F1Args& args, const Hyp1F1Options& options) {
  if (is_pole(args.gamma)) throw PoleAtGamma();
  const double mag = std::abs(args.z);
  if (!(mag <= options.z_max)) {
    std::ostringstream os;
    os << "|z| = " << mag << " exceeds the 1F1 validity radius " << options.z_max;
    throw OutOfValidityRange(mag, os.str());
  }
  const double amax = std::max(std::abs(args.alpha), std::abs(args.gamma));
  if (!(amax <= options.alpha_max)) {
    std::ostringstream os;
    os << "1F1 parameter magnitude " << amax << " exceeds " << options.alpha_max;
    throw OutOfValidityRange(amax, os.str());
  }
  if (mag == 0.0) return 1.0;
  if (options.kummer && args.z.real() < 0) {
    return std::exp(args.z) * series(args.gamma - args.alpha, args.gamma, -args.z);
  }
  return series(args.alpha, args.gamma, args.z);
}

double lambda_for_energy(double E, const CosmoParams& p) { return 2 * E / (p.hbar * p.H0); }

double energy_for_lambda(double lambda, const CosmoParams& p) { return lambda * p.hbar * p.H0 / 2; }

ExactRadialState state_for_energy(Branch branch, double E, const CosmoParams& p) {
  return {branch, lambda_for_energy(E, p), derive_scales(p).a};
}

cplx exact_radial(const ExactRadialState& state, double r, const Hyp1F1Options& options) {
  if (!(state.a > 0)) throw std::invalid_argument("exact_radial: a must be positive");
  if (state.branch == Branch::singular && !(r > 0)) {
    throw std::domain_error("exact_radial: singular branch requires r > 0");
  }
  if (r < 0) throw std::domain_error("exact_radial: r must be non-negative");
  const double y = state.a * state.a * r * r;
  const cplx prefactor = std::polar(1.0, y / 2);
  const cplx z(0.0, -y);
  if (state.branch == Branch::regular) {
    const cplx alpha(0.75, -state.lambda / 4);
    return prefactor * hyp1f1({alpha, 1.5, z}, options);
  }
  const cplx alpha(0.25, -state.lambda / 4);
  return prefactor * hyp1f1({alpha, 0.5, z}, options) / r;
}

cplx exact_radial_derivative(const ExactRadialState& state, double r,
                             const Hyp1F1Options& options) {
  if (!(state.a > 0)) throw std::invalid_argument("exact_radial_derivative: a must be positive");
  if (state.branch == Branch::singular && !(r > 0)) {
    throw std::domain_error("exact_radial_derivative: singular branch requires r > 0");
  }
  if (r < 0) throw std::domain_error("exact_radial_derivative: r must be non-negative");
  // d/dz 1F1(alpha; gamma; z) = (alpha/gamma) 1F1(alpha+1; gamma+1; z), with z = -i y.
  const double y = state.a * state.a * r * r;
  const double dy_dr = 2 * state.a * state.a * r;
  const cplx prefactor = std::polar(1.0, y / 2);
  const cplx z(0.0, -y);
  const cplx i(0.0, 1.0);
  const bool regular = state.branch == Branch::regular;
  const cplx alpha(regular ? 0.75 : 0.25, -state.lambda / 4);
  const double gamma = regular ? 1.5 : 0.5;
  const cplx M = hyp1f1({alpha, gamma, z}, options);
  const cplx dM = alpha / gamma * hyp1f1({alpha + 1.0, gamma + 1.0, z}, options);
  const cplx d_inner = dy_dr * prefactor * (0.5 * i * M - i * dM);
  if (regular) return d_inner;
  return d_inner / r - prefactor * M / (r * r);
}

cplx complete_wavefunction(const ExactRadialState& state, double r, double /*theta*/,
                           double /*phi*/, const Hyp1F1Options& options) {
  return exact_radial(state, r, options) / std::sqrt(4 * std::numbers::pi);
}

OdeResidual radial_ode_residual(const std::function<cplx(double)>& R, int l, double E,
                                const CosmoParams& p, double r, double h) {
  if (!(r > 0)) throw std::domain_error("radial_ode_residual: r must be positive");
  if (l < 0) throw std::invalid_argument("radial_ode_residual: l must be non-negative");
  const double k_eff = p.m * p.H0 * p.H0;
  const double coupling = 2 * p.m / (p.hbar * p.hbar) * (E + k_eff * r * r / 2);
  if (!(h > 0)) {
    // Resolve the fastest local scale: the radius itself, and the local wavenumber.
    const double a2 = std::sqrt(p.m * k_eff) / p.hbar;
    const double wavenumber = std::sqrt(std::fabs(coupling)) + std::sqrt(a2) + a2 * r;
    h = 1e-3 * std::min(r, 1.0 / wavenumber);
  }
  const cplx value = R(r);
  const cplx d1 = finite_diff(R, r, h);
  const cplx d2 = finite_diff2(R, r, h);
  const double centrifugal = l * (l + 1) / (r * r);
  const cplx residual = d2 + 2.0 * d1 / r - centrifugal * value + coupling * value;
  const double scale = std::abs(d2) + std::abs(2.0 * d1 / r) + std::abs(centrifugal * value) +
                       std::abs(coupling * value);
  return {residual, scale};
}

}  // namespace cosmo::exactradial
