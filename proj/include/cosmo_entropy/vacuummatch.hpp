#pragma once

#include "cosmo_entropy/logfloat.hpp"
#include "cosmo_entropy/params.hpp"
#include "cosmo_entropy/quadrature.hpp"

namespace cosmo::vacuum {

/// Inner solution g(sigma x)/x with g = sinh or g = cosh.
enum class Parity { sinh, cosh };

/// paper_leading_order reproduces the coefficients obtained after dropping
/// exp(-sigma x0) and relative 1/(sigma x0) terms; exact_numeric imposes
/// continuity of f and f' at x0 with nothing dropped.
enum class MatchMode { paper_leading_order, exact_numeric };

/// Largest sigma for which log-domain quadrature is attempted. Beyond it the
/// rounding of ln|f| ~ sigma exceeds 1e-7 and relative integrand values are
/// meaningless; use the closed forms instead.
inline constexpr double kQuadratureSigmaMax = 1e9;
/// Largest sigma integrated directly in double precision: f^2 ~ e^(2 sigma).
inline constexpr double kDirectSigmaMax = 300.0;

/// Approximate vacuum radial function on x in (0, 1]:
///   f = g(sigma x)/x        for x <= x0
///   f = A/x + B             for x >  x0
/// `norm` makes int_0^1 (norm f)^2 x^2 dx = 1. This dimensionless convention
/// omits the 4 pi and R0^3; the physical constant is norm / sqrt(4 pi R0^3).
struct MatchedVacuumState {
  double sigma = 0;
  double x0 = 1;
  Parity parity = Parity::sinh;
  MatchMode mode = MatchMode::exact_numeric;
  LogFloat A_coef;
  LogFloat B_coef;
  LogFloat norm;

  bool pure_inner() const noexcept { return x0 >= 1.0; }
};

/// sigma0 = m H0 R0^2 / hbar, the single parameter of the reduced equation.
LogFloat reduce(const CosmoParams& p);

LogFloat inner_solution(double x, double sigma, Parity parity);
/// d/dx of inner_solution.
LogFloat inner_derivative(double x, double sigma, Parity parity);

struct InnerOdeCheck {
  /// |(1/x^2)(x^2 f')' - sigma^2 f| / (sigma^2 |f|) for the inner solution.
  double relative_residual;
  /// Same residual against the full reduced equation; equals x^2 analytically.
  double full_relative_residual;
};

InnerOdeCheck verify_inner_ode(double x, double sigma, Parity parity);

/// A/x + B. Flags cancellation when A/x is indistinguishable from -B.
LogFloat outer_solution(double x, const LogFloat& A, const LogFloat& B);

/// Builds the matched state. x0 = 1 gives the pure inner function (A = B = 0).
MatchedVacuumState match(double sigma, double x0, Parity parity,
                         MatchMode mode = MatchMode::exact_numeric);

/// Unnormalised f(x) and f'(x).
LogFloat evaluate(const MatchedVacuumState& s, double x);
LogFloat evaluate_derivative(const MatchedVacuumState& s, double x);

struct Continuity {
  double value_relative;  // |f_in(x0) - f_out(x0)| / max
  double slope_relative;  // same for f'
};
Continuity continuity_at_x0(const MatchedVacuumState& s);

/// sqrt(12) sigma^-1 exp(-sigma x0) / (1 - x0)^(3/2); requires x0 < 1.
LogFloat normalization_closed_form(double sigma, double x0);
/// (int_0^1 f^2 x^2 dx)^(-1/2) by log-domain quadrature.
LogFloat normalization_quadrature(const MatchedVacuumState& s, const QuadratureSpec& spec = {});
/// paper_leading_order -> closed form; exact_numeric -> quadrature of the exactly matched f.
LogFloat normalization(double sigma, double x0, Parity parity, MatchMode mode);

/// <x^2> in the sigma -> infinity limit: (x0^2 + 3 x0 + 6) / 10.
double x2_closed(double x0);

/// int f^2 x^4 dx / int f^2 x^2 dx over [0, 1]. Uses double quadrature up to
/// kDirectSigmaMax and log-domain quadrature above.
double x2_quadrature(const MatchedVacuumState& s, const QuadratureSpec& spec = {});

/// <S_g>/k_B = N sigma0 <x^2>(x0).
LogFloat grav_entropy_nonperturbative(const CosmoParams& p, double x0, double N_factor = 1.0);

}  // namespace cosmo::vacuum
