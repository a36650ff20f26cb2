#pragma once

#include <functional>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/logfloat.hpp"

namespace cosmo {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;

  void validate() const;
};

/// Adaptive (globally bisecting) Gauss-Kronrod 10/21 quadrature.
///
/// The rule never evaluates the endpoints, so integrable endpoint
/// singularities such as ln r or 1/sqrt(r) are handled without special casing.
/// Converges when the summed error estimate falls below
/// max(abs_tol, rel_tol * |result|); throws NonConvergence otherwise.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Same algorithm on an integrand that returns its value as a LogFloat.
///
/// Each panel factors out its own largest ln|f| before weighting, and panels
/// are accumulated as LogFloats, so no intermediate value ever overflows.
/// On failure NonConvergence::best_estimate() carries ln|estimate|.
LogFloat integrate_log(const std::function<LogFloat(double)>& f_ln, double a, double b,
                       const QuadratureSpec& spec = {});

}  // namespace cosmo
