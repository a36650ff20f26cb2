#include "cosmo_entropy/finite_diff.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosmo {

std::array<std::vector<double>, 3> fornberg_weights(double x0, std::span<const double> nodes) {
  const std::size_t n = nodes.size();
  constexpr int kMaxOrder = 2;
  std::array<std::vector<double>, 3> c;
  for (auto& row : c) row.assign(n, 0.0);
  if (n == 0) return c;
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), kMaxOrder);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

std::vector<double> grid_derivative(std::span<const double> grid, std::span<const double> values,
                                    int order) {
  const std::size_t n = grid.size();
  if (values.size() != n) throw std::invalid_argument("grid_derivative: size mismatch");
  if (order != 1 && order != 2) throw std::invalid_argument("grid_derivative: order must be 1 or 2");
  if (n < 5) throw std::invalid_argument("grid_derivative: need at least 5 points");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("grid must be strictly increasing");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const bool centred = i >= 2 && i + 2 < n;
    if (order == 2 && !centred) continue;
    const std::size_t start = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i) - 2, 0,
                                                         static_cast<std::ptrdiff_t>(n) - 5);
    const auto w = fornberg_weights(grid[i], grid.subspan(start, 5));
    // Differences against the centre value make constants differentiate to exactly zero.
    double acc = 0;
    for (std::size_t k = 0; k < 5; ++k) acc += w[order][k] * (values[start + k] - values[i]);
    out[i] = acc;
  }
  return out;
}

}  // namespace cosmo
