#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include "cosmo_entropy/logfloat.hpp"
#include "cosmo_entropy/params.hpp"
#include "cosmo_entropy/quadrature.hpp"

namespace cosmo::freewaves {

/// Plane wave normalised in the cube [0, R0]^3. The box is anchored at the
/// origin: that is the convention under which <X^2 + Y^2 + Z^2> = R0^2.
/// A box centred on the origin would give R0^2 / 4.
struct PlaneWaveState {
  std::array<double, 3> k{};  // 1/m
  double R0 = 1;             // m
};

/// l = 0 free spherical wave normalised in a ball of radius R0.
struct SphericalWaveState {
  double kappa = 0;  // 1/m
  double R0 = 1;     // m
  int sign = 1;      // selects psi_{+kappa} or psi_{-kappa}
};

inline constexpr double kPaperPlaneN = 1.0 / 2.6;
inline constexpr double kPaperSphericalN = 3.0 / 2.6;

/// "paper-plane" -> 1/2.6, "paper-spherical" -> 3/2.6, otherwise nullopt.
std::optional<double> n_factor_preset(std::string_view name);

std::complex<double> plane_wave_eval(const PlaneWaveState& s, const std::array<double, 3>& r);
std::complex<double> spherical_wave_eval(const SphericalWaveState& s, double r);

/// <S_g>/k_B = N m H0 R0^2 / hbar in the cubic-box state.
LogFloat grav_entropy_plane(const CosmoParams& p, double N_factor = 1.0);
/// <S_g>/k_B = N m H0 R0^2 / (3 hbar) in the spherical-box state.
LogFloat grav_entropy_spherical(const CosmoParams& p, double N_factor = 1.0);

/// <X^2 + Y^2 + Z^2> over the box by one-dimensional quadrature per axis.
double r2_expectation_plane_quadrature(const PlaneWaveState& s, const QuadratureSpec& spec = {});
/// 4 pi int_0^R0 |psi|^2 r^4 dr by quadrature.
double r2_expectation_spherical_quadrature(const SphericalWaveState& s,
                                           const QuadratureSpec& spec = {});

/// 2 ln A at position r, in units of k_B.
double matter_entropy_operator(const PlaneWaveState& s, const std::array<double, 3>& r);
double matter_entropy_operator(const SphericalWaveState& s, double r);

/// Matter entropy expectation split into its R0-dependent part and the
/// constant that does not depend on R0 (zero for plane waves).
struct MatterEntropy {
  double r0_dependent;
  double constant;
  double total() const { return r0_dependent + constant; }
};

MatterEntropy matter_entropy_expectation(const PlaneWaveState& s);
/// <-2 ln r> in the spherical state by quadrature; analytically 2 - 2 ln R0.
double minus_two_ln_r_expectation(const SphericalWaveState& s, const QuadratureSpec& spec = {});

/// The spherical case integrates <-2 ln r> by quadrature.
MatterEntropy matter_entropy_expectation(const SphericalWaveState& s,
                                         const QuadratureSpec& spec = {});

}  // namespace cosmo::freewaves
