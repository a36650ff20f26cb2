#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace cosmo {

/// Fourth-order central difference for f'(x).
template <class F>
auto finite_diff(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

/// Fourth-order central difference for f''(x).
template <class F>
auto finite_diff2(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

/// Finite-difference weights (Fornberg) for derivatives 0..2 at `x0` from
/// arbitrary distinct nodes. Returns weights[order][node].
std::array<std::vector<double>, 3> fornberg_weights(double x0, std::span<const double> nodes);

/// Derivative of sampled values on a strictly increasing, possibly
/// non-uniform grid using five-point stencils. order 1 uses shifted one-sided
/// windows at the edges so every point gets a value; order 2 is evaluated on
/// centred windows only and leaves the two points nearest each edge at zero
/// (callers treat them as excluded).
std::vector<double> grid_derivative(std::span<const double> grid, std::span<const double> values,
                                    int order);

}  // namespace cosmo
