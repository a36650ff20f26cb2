#pragma once

// Reference computations that share no code with the library: plain
// composite rules, a classical Runge-Kutta integrator, and Boost's real 1F1.

#include <cmath>
#include <complex>
#include <functional>

#include <boost/math/special_functions/hypergeometric_1F1.hpp>

namespace oracle {

using cplx = std::complex<double>;

/// Composite Simpson in long double with n (even) panels.
inline long double simpson(const std::function<long double(long double)>& f, long double a, long double b, int n) {
  if (n % 2) ++n;
  const long double h = (b - a) / n;
  long double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0L : 2.0L);
  return s * h / 3;
}

/// Gauss-Legendre on a uniform partition, for integrands with endpoint
/// singularities where Simpson would evaluate the endpoint.
inline long double gauss_panels(const std::function<long double(long double)>& f, long double a, long double b, int panels) {
  static const long double x[3] = {0.0L, 0.5384693101056830910363144L, 0.9061798459386639927976269L};
  static const long double w[3] = {0.5688888888888888888888889L, 0.4786286704993664680412915L, 0.2369268850561890875142640L};
  const long double h = (b - a) / panels;
  long double s = 0;
  for (int p = 0; p < panels; ++p) {
    const long double mid = a + (p + 0.5L) * h, half = h / 2;
    s += w[0] * f(mid);
    for (int k = 1; k < 3; ++k) s += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
  }
  return s * h / 2;
}

/// R'' + (2/r) R' + c(r) R = 0 integrated with fixed-step RK4 from (r0, R0, dR0) to r1.
inline cplx shoot_radial(const std::function<double(double)>& c, double r0, cplx R0, cplx dR0, double r1, double h) {
  const int n = static_cast<int>(std::ceil((r1 - r0) / h));
  const double step = (r1 - r0) / n;
  cplx y = R0, dy = dR0;
  double r = r0;
  auto acc = [&](double rr, cplx yy, cplx dd) { return -2.0 / rr * dd - c(rr) * yy; };
  for (int i = 0; i < n; ++i) {
    const cplx k1y = dy, k1d = acc(r, y, dy);
    const cplx k2y = dy + 0.5 * step * k1d, k2d = acc(r + step / 2, y + 0.5 * step * k1y, dy + 0.5 * step * k1d);
    const cplx k3y = dy + 0.5 * step * k2d, k3d = acc(r + step / 2, y + 0.5 * step * k2y, dy + 0.5 * step * k2d);
    const cplx k4y = dy + step * k3d, k4d = acc(r + step, y + step * k3y, dy + step * k3d);
    y += step / 6 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    dy += step / 6 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    r += step;
  }
  return y;
}

/// Real-argument 1F1 from Boost.
inline double hyp1f1_real(double a, double b, double z) { return boost::math::hypergeometric_1F1(a, b, z); }

}  // namespace oracle
