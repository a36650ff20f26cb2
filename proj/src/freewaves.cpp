#include "cosmo_entropy/freewaves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosmo::freewaves {

namespace {

constexpr double kPi = std::numbers::pi;

void check_box(double R0) {
  if (!(R0 > 0)) throw std::invalid_argument("box size R0 must be positive");
}

void check_n(double N) {
  if (!(N > 0)) throw std::invalid_argument("N factor must be positive");
}

}  // namespace

std::optional<double> n_factor_preset(std::string_view name) {
  if (name == "paper-plane") return kPaperPlaneN;
  if (name == "paper-spherical") return kPaperSphericalN;
  return std::nullopt;
}

std::complex<double> plane_wave_eval(const PlaneWaveState& s, const std::array<double, 3>& r) {
  check_box(s.R0);
  for (double c : r) {
    if (c < 0 || c > s.R0) throw std::domain_error("plane_wave_eval: point outside [0, R0]^3");
  }
  const double phase = s.k[0] * r[0] + s.k[1] * r[1] + s.k[2] * r[2];
  return std::polar(std::pow(s.R0, -1.5), phase);
}

std::complex<double> spherical_wave_eval(const SphericalWaveState& s, double r) {
  check_box(s.R0);
  if (!(r > 0) || r > s.R0) throw std::domain_error("spherical_wave_eval: require 0 < r <= R0");
  return std::polar(1.0 / (std::sqrt(4 * kPi * s.R0) * r), s.sign * s.kappa * r);
}

LogFloat grav_entropy_plane(const CosmoParams& p, double N_factor) {
  check_n(N_factor);
  return LogFloat(N_factor) * entropy_scale(p);
}

LogFloat grav_entropy_spherical(const CosmoParams& p, double N_factor) {
  check_n(N_factor);
  return LogFloat(N_factor) * entropy_scale(p) / LogFloat(3.0);
}

double r2_expectation_plane_quadrature(const PlaneWaveState& s, const QuadratureSpec& spec) {
  check_box(s.R0);
  // |psi|^2 = R0^-3 factorises into R0^-1 per axis.
  const double density = 1.0 / s.R0;
  const double axis_norm = integrate([&](double) { return density; }, 0.0, s.R0, spec);
  const double axis_x2 = integrate([&](double x) { return density * x * x; }, 0.0, s.R0, spec);
  return 3.0 * axis_x2 * axis_norm * axis_norm;
}

double r2_expectation_spherical_quadrature(const SphericalWaveState& s, const QuadratureSpec& spec) {
  check_box(s.R0);
  return integrate(
      [&](double r) {
        const double amp2 = std::norm(spherical_wave_eval(s, r));
        return 4 * kPi * amp2 * r * r * r * r;
      },
      0.0, s.R0, spec);
}

double matter_entropy_operator(const PlaneWaveState& s, const std::array<double, 3>& r) {
  return 2.0 * std::log(std::abs(plane_wave_eval(s, r)));
}

double matter_entropy_operator(const SphericalWaveState& s, double r) {
  check_box(s.R0);
  if (!(r > 0) || r > s.R0) throw std::domain_error("matter_entropy_operator: require 0 < r <= R0");
  return -2.0 * std::log(r) - std::log(4 * kPi * s.R0);
}

MatterEntropy matter_entropy_expectation(const PlaneWaveState& s) {
  check_box(s.R0);
  return {-3.0 * std::log(s.R0), 0.0};
}

double minus_two_ln_r_expectation(const SphericalWaveState& s, const QuadratureSpec& spec) {
  check_box(s.R0);
  return integrate(
      [&](double r) {
        const double weight = 4 * kPi * r * r * std::norm(spherical_wave_eval(s, r));
        return weight * (-2.0 * std::log(r));
      },
      0.0, s.R0, spec);
}

MatterEntropy matter_entropy_expectation(const SphericalWaveState& s, const QuadratureSpec& spec) {
  // The radial density 4 pi r^2 |psi|^2 is 1/R0 on (0, R0].
  const double total = minus_two_ln_r_expectation(s, spec) - std::log(4 * kPi * s.R0);
  const double constant = 2.0 - std::log(4 * kPi);
  return {total - constant, constant};
}

}  // namespace cosmo::freewaves
