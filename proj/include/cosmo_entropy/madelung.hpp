#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace cosmo::madelung {

/// Which Laplacian the stencils apply: d^2/dx^2, or (1/r^2) d/dr (r^2 d/dr).
enum class LaplacianMode { cartesian, spherical };

/// Samples that need a centred second-derivative stencil. Values are
/// meaningful on [begin, end); points outside are excluded (held at zero).
struct StencilSamples {
  std::vector<double> values;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool valid(std::size_t i) const noexcept { return i >= begin && i < end; }
  std::vector<std::size_t> excluded() const;
};

/// Madelung variables psi = A exp(i I / hbar) = exp(S + i I / hbar) on a grid.
struct MadelungFields {
  std::vector<double> grid;  // m
  std::vector<double> A;     // |psi|
  std::vector<double> I;     // J s, hbar * unwrapped phase
  std::vector<double> rho;   // A^2
  std::vector<double> v;     // m/s, grad I / m
  std::vector<double> S;     // ln A
  LaplacianMode mode = LaplacianMode::cartesian;
};

/// Fluid-side quantities obtained through the Madelung correspondence.
struct FluidFields {
  std::vector<double> rho;
  std::vector<double> v;
  StencilSamples pressure_grad_term;  // (1/rho) grad p  <->  grad Q / m
  std::vector<double> force_per_mass; // F  <->  -grad V / m
};

/// Split sampled psi into amplitude and unwrapped phase. Throws ZeroAmplitude
/// when |psi| = 0 at an interior point.
MadelungFields decompose(std::span<const double> grid, std::span<const std::complex<double>> psi,
                         double m, double hbar, LaplacianMode mode);

/// Q = -(hbar^2 / 2m) lap(A) / A. Evaluated through S = ln A as
/// lap(S) + |grad S|^2, which is the same quantity and stays well conditioned
/// for exponentially growing amplitudes. The two points at each end are excluded.
StencilSamples quantum_potential(std::span<const double> A, std::span<const double> grid,
                                 double m, double hbar, LaplacianMode mode);

/// Same, from S = ln A directly. Use when A itself would overflow.
StencilSamples quantum_potential_log(std::span<const double> S, std::span<const double> grid,
                                     double m, double hbar, LaplacianMode mode);

/// dS/dt + (grad S . grad I)/m + lap(I)/(2m), pointwise.
StencilSamples continuity_residual(const MadelungFields& fields, std::span<const double> dS_dt,
                                   double m);

/// dI/dt + |grad I|^2/(2m) + V + Q, pointwise; excluded where Q is.
StencilSamples hamilton_jacobi_residual(const MadelungFields& fields, std::span<const double> dI_dt,
                                        std::span<const double> V, const StencilSamples& Q,
                                        double m);

FluidFields correspondence_map(const MadelungFields& fields, std::span<const double> V,
                               const StencilSamples& Q, double m);

/// CSV with header r,A,I,rho,v,S,Q and 17 significant digits; Q is left
/// empty at excluded points.
void write_fields_csv(std::ostream& os, const MadelungFields& fields, const StencilSamples& Q);

}  // namespace cosmo::madelung
