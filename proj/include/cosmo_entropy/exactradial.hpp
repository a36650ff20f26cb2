#pragma once

#include <complex>
#include <functional>

#include "cosmo_entropy/params.hpp"

namespace cosmo::exactradial {

using cplx = std::complex<double>;

struct Hyp1F1Args {
  cplx alpha;
  cplx gamma;
  cplx z;
};

struct Hyp1F1Options {
  /// Largest |z| accepted.
  double z_max = 50.0;
  /// Largest |alpha| accepted; the series needs O(|alpha z|) terms.
  double alpha_max = 1e3;
  /// Apply 1F1(a;c;z) = e^z 1F1(c-a;c;-z) when Re z < 0.
  bool kummer = true;
};

/// Confluent hypergeometric function 1F1(alpha; gamma; z).
///
/// Sums the Maclaurin series in quad precision and tracks the largest term.
/// If cancellation would leave fewer than ~16 significant digits the call
/// throws OutOfValidityRange rather than returning a degraded value.
/// Throws PoleAtGamma when gamma is a non-positive integer.
cplx hyp1f1(const Hyp1F1Args& args, const Hyp1F1Options& options = {});

enum class Branch { regular = 1, singular = 2 };

/// l = 0 interacting solution with dimensionless energy lambda = 2E/(hbar H0)
/// and scale a (a^4 = m k_eff / hbar^2).
struct ExactRadialState {
  Branch branch = Branch::regular;
  double lambda = 0;
  double a = 1;  // 1/m
};

/// lambda for energy E, and the inverse.
double lambda_for_energy(double E, const CosmoParams& p);
double energy_for_lambda(double lambda, const CosmoParams& p);
/// State with a taken from the parameters.
ExactRadialState state_for_energy(Branch branch, double E, const CosmoParams& p);

/// regular:  exp(i a^2 r^2/2) 1F1(3/4 - i lambda/4; 3/2; -i a^2 r^2)
/// singular: exp(i a^2 r^2/2) 1F1(1/4 - i lambda/4; 1/2; -i a^2 r^2) / r
cplx exact_radial(const ExactRadialState& state, double r, const Hyp1F1Options& options = {});

/// dR/dr from the derivative identity of 1F1.
cplx exact_radial_derivative(const ExactRadialState& state, double r,
                             const Hyp1F1Options& options = {});

/// (4 pi)^(-1/2) R(r); independent of the angles since l = 0.
cplx complete_wavefunction(const ExactRadialState& state, double r, double theta, double phi,
                           const Hyp1F1Options& options = {});

struct OdeResidual {
  cplx residual;
  /// Sum of the magnitudes of the individual terms of the equation.
  double scale;
  double relative() const { return scale > 0 ? std::abs(residual) / scale : std::abs(residual); }
};

/// Residual of (1/r^2)(r^2 R')' - l(l+1)R/r^2 + (2m/hbar^2)(E + k_eff r^2/2) R
/// using fourth-order central differences. h <= 0 picks a step from the local
/// length scales.
OdeResidual radial_ode_residual(const std::function<cplx(double)>& R, int l, double E,
                                const CosmoParams& p, double r, double h = 0);

}  // namespace cosmo::exactradial
