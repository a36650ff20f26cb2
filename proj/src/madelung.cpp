#include "cosmo_entropy/madelung.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/finite_diff.hpp"

namespace cosmo::madelung {

namespace {

void check_grid(std::span<const double> grid, LaplacianMode mode) {
  if (grid.size() < 5) throw std::invalid_argument("madelung: grid needs at least 5 points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("madelung: grid must be strictly increasing");
  }
  if (mode == LaplacianMode::spherical && !(grid.front() > 0)) {
    throw std::invalid_argument("madelung: spherical grids must exclude r = 0");
  }
}

void check_size(std::size_t n, std::size_t expected, const char* what) {
  if (n != expected) throw std::invalid_argument(std::string("madelung: size mismatch for ") + what);
}

StencilSamples interior(std::size_t n) {
  StencilSamples out;
  out.values.assign(n, 0.0);
  out.begin = 2;
  out.end = n - 2;
  return out;
}

// Laplacian on the centred range, given first and second derivatives.
double laplacian(double d1, double d2, double r, LaplacianMode mode) {
  return mode == LaplacianMode::spherical ? d2 + 2.0 * d1 / r : d2;
}

}  // namespace

std::vector<std::size_t> StencilSamples::excluded() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!valid(i)) out.push_back(i);
  }
  return out;
}

MadelungFields decompose(std::span<const double> grid, std::span<const std::complex<double>> psi,
                         double m, double hbar, LaplacianMode mode) {
  check_grid(grid, mode);
  check_size(psi.size(), grid.size(), "psi");
  const std::size_t n = grid.size();
  MadelungFields f;
  f.mode = mode;
  f.grid.assign(grid.begin(), grid.end());
  f.A.resize(n);
  f.I.resize(n);
  f.rho.resize(n);
  f.S.resize(n);

  double phase = 0;
  double prev_arg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double amp = std::abs(psi[i]);
    if (amp == 0.0 && i > 0 && i + 1 < n) throw ZeroAmplitude(i);
    const double arg = std::arg(psi[i]);
    if (i == 0) {
      phase = arg;
    } else {
      double step = arg - prev_arg;
      step -= 2 * std::numbers::pi * std::round(step / (2 * std::numbers::pi));
      phase += step;
    }
    prev_arg = arg;
    f.A[i] = amp;
    f.rho[i] = amp * amp;
    f.S[i] = std::log(amp);
    f.I[i] = hbar * phase;
  }
  f.v = grid_derivative(f.grid, f.I, 1);
  for (auto& vi : f.v) vi /= m;
  return f;
}

StencilSamples quantum_potential(std::span<const double> A, std::span<const double> grid,
                                 double m, double hbar, LaplacianMode mode) {
  check_size(A.size(), grid.size(), "A");
  std::vector<double> S(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!(A[i] > 0)) throw std::domain_error("quantum_potential: amplitude must be positive");
    S[i] = std::log(A[i]);
  }
  return quantum_potential_log(S, grid, m, hbar, mode);
}

StencilSamples quantum_potential_log(std::span<const double> S, std::span<const double> grid,
                                     double m, double hbar, LaplacianMode mode) {
  check_grid(grid, mode);
  check_size(S.size(), grid.size(), "S");
  const auto d1 = grid_derivative(grid, S, 1);
  const auto d2 = grid_derivative(grid, S, 2);
  auto Q = interior(S.size());
  const double pref = -hbar * hbar / (2 * m);
  for (std::size_t i = Q.begin; i < Q.end; ++i) {
    Q.values[i] = pref * (laplacian(d1[i], d2[i], grid[i], mode) + d1[i] * d1[i]);
  }
  return Q;
}

StencilSamples continuity_residual(const MadelungFields& fields, std::span<const double> dS_dt,
                                   double m) {
  const std::size_t n = fields.grid.size();
  check_size(dS_dt.size(), n, "dS_dt");
  const auto dS = grid_derivative(fields.grid, fields.S, 1);
  const auto dI = grid_derivative(fields.grid, fields.I, 1);
  const auto d2I = grid_derivative(fields.grid, fields.I, 2);
  auto out = interior(n);
  for (std::size_t i = out.begin; i < out.end; ++i) {
    out.values[i] = dS_dt[i] + dS[i] * dI[i] / m +
                    laplacian(dI[i], d2I[i], fields.grid[i], fields.mode) / (2 * m);
  }
  return out;
}

StencilSamples hamilton_jacobi_residual(const MadelungFields& fields, std::span<const double> dI_dt,
                                        std::span<const double> V, const StencilSamples& Q,
                                        double m) {
  const std::size_t n = fields.grid.size();
  check_size(dI_dt.size(), n, "dI_dt");
  check_size(V.size(), n, "V");
  check_size(Q.values.size(), n, "Q");
  const auto dI = grid_derivative(fields.grid, fields.I, 1);
  StencilSamples out;
  out.values.assign(n, 0.0);
  out.begin = Q.begin;
  out.end = Q.end;
  for (std::size_t i = out.begin; i < out.end; ++i) {
    out.values[i] = dI_dt[i] + dI[i] * dI[i] / (2 * m) + V[i] + Q.values[i];
  }
  return out;
}

FluidFields correspondence_map(const MadelungFields& fields, std::span<const double> V,
                               const StencilSamples& Q, double m) {
  const std::size_t n = fields.grid.size();
  check_size(V.size(), n, "V");
  check_size(Q.values.size(), n, "Q");
  FluidFields out;
  out.rho.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.rho[i] = std::exp(2 * fields.S[i]);
  out.v = grid_derivative(fields.grid, fields.I, 1);
  for (auto& x : out.v) x /= m;

  out.force_per_mass = grid_derivative(fields.grid, V, 1);
  for (auto& x : out.force_per_mass) x = -x / m;

  out.pressure_grad_term.values.assign(n, 0.0);
  out.pressure_grad_term.begin = Q.begin;
  out.pressure_grad_term.end = Q.end;
  if (Q.end >= Q.begin + 5) {
    const auto sub_grid = std::span<const double>(fields.grid).subspan(Q.begin, Q.end - Q.begin);
    const auto sub_q = std::span<const double>(Q.values).subspan(Q.begin, Q.end - Q.begin);
    const auto dQ = grid_derivative(sub_grid, sub_q, 1);
    for (std::size_t k = 0; k < dQ.size(); ++k) out.pressure_grad_term.values[Q.begin + k] = dQ[k] / m;
  } else {
    out.pressure_grad_term.end = out.pressure_grad_term.begin;
  }
  return out;
}

void write_fields_csv(std::ostream& os, const MadelungFields& fields, const StencilSamples& Q) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os.precision(17);
  os << "r,A,I,rho,v,S,Q\n";
  for (std::size_t i = 0; i < fields.grid.size(); ++i) {
    os << fields.grid[i] << ',' << fields.A[i] << ',' << fields.I[i] << ',' << fields.rho[i] << ','
       << fields.v[i] << ',' << fields.S[i] << ',';
    if (i < Q.values.size() && Q.valid(i)) os << Q.values[i];
    os << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

}  // namespace cosmo::madelung
