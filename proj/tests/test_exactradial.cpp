#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/exactradial.hpp"
#include "cosmo_entropy/finite_diff.hpp"
#include "oracles.hpp"

using namespace cosmo;
using namespace cosmo::exactradial;
using std::numbers::pi;

namespace {
const CosmoParams kUnit{1, 1, 1, 1, 1};
}

TEST_CASE("1F1 reductions") {
  CHECK(hyp1f1({cplx(0.3, -2), cplx(1.5, 0), 0.0}) == cplx(1, 0));
  CHECK(std::abs(hyp1f1({1.0, 1.0, 1.0}) - std::exp(1.0)) <= 1e-15);
  CHECK(std::abs(hyp1f1({1.0, 2.0, 1.0}) - (std::exp(1.0) - 1)) <= 1e-15);
  for (double z : {-3.0, -0.2, 0.7, 4.0}) {
    CHECK(std::abs(hyp1f1({1.0, 2.0, 2 * z}) - std::expm1(2 * z) / (2 * z)) <= 1e-14 * std::exp(std::fabs(2 * z)));
  }
  const cplx z(0, 2.5);
  CHECK(std::abs(hyp1f1({1.0, 1.0, z}) - std::exp(z)) <= 1e-14);
}

TEST_CASE("1F1 agrees with Boost on the real line") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> a(-4, 4), c(0.1, 5), z(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const double aa = a(rng), cc = c(rng), zz = z(rng);
    const double ref = oracle::hyp1f1_real(aa, cc, zz);
    const cplx got = hyp1f1({aa, cc, zz});
    CHECK(std::fabs(got.real() - ref) <= 1e-11 * std::max(1.0, std::fabs(ref)));
    CHECK(std::fabs(got.imag()) <= 1e-11 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("property: Kummer's transformation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-3, 3), c(0.2, 4), r(0, 12);
  Hyp1F1Options direct;
  direct.kummer = false;
  for (int i = 0; i < 200; ++i) {
    const cplx alpha(u(rng), u(rng)), gamma(c(rng), u(rng));
    const cplx z = std::polar(r(rng), u(rng));
    const cplx lhs = hyp1f1({alpha, gamma, z}, direct);
    const cplx rhs = std::exp(z) * hyp1f1({gamma - alpha, gamma, -z}, direct);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("1F1 errors") {
  CHECK_THROWS_AS(hyp1f1({1.0, 0.0, 1.0}), PoleAtGamma);
  CHECK_THROWS_AS(hyp1f1({1.0, -3.0, 1.0}), PoleAtGamma);
  CHECK_THROWS_AS(hyp1f1({1.0, 1.5, 60.0}), OutOfValidityRange);
  CHECK_THROWS_AS(hyp1f1({cplx(0.75, -5e3), 1.5, cplx(0, -1)}), OutOfValidityRange);
  CHECK_NOTHROW(hyp1f1({1.0, -2.5, 1.0}));
}

TEST_CASE("radial solutions near the origin") {
  const ExactRadialState reg{Branch::regular, 2.0, 1.3};
  CHECK(std::abs(exact_radial(reg, 1e-8) - 1.0) <= 1e-12);
  const ExactRadialState sing{Branch::singular, 2.0, 1.3};
  for (double r : {1e-4, 1e-6}) CHECK(std::abs(exact_radial(sing, r) * r - 1.0) <= 1e-6);
  CHECK(std::abs(complete_wavefunction(reg, 1e-8, 0.3, 1.2) - 1 / std::sqrt(4 * pi)) <= 1e-12);
}

TEST_CASE("regular branch against an RK4 shooting oracle") {
  // lambda = 3, a = 1: R'' + 2R'/r + (3 + r^2) R = 0
  const double lambda = 3, a = 1, r0 = 1e-6;
  const cplx R0 = 1 - lambda * a * a * r0 * r0 / 6, dR0 = -lambda * a * a * r0 / 3;
  const cplx ref = oracle::shoot_radial([&](double r) { return lambda * a * a + std::pow(a, 4) * r * r; }, r0, R0,
                                        dR0, 1.0, 1e-4);
  const cplx got = exact_radial({Branch::regular, lambda, a}, 1.0);
  CHECK(std::abs(got - ref) <= 1e-6 * std::abs(ref));
}

TEST_CASE("singular branch against the shooting oracle") {
  const double lambda = -1.5, a = 0.8;
  const ExactRadialState s{Branch::singular, lambda, a};
  const double r0 = 0.5;
  const cplx ref = oracle::shoot_radial([&](double r) { return lambda * a * a + std::pow(a, 4) * r * r; }, r0,
                                        exact_radial(s, r0), exact_radial_derivative(s, r0), 3.0, 1e-4);
  CHECK(std::abs(exact_radial(s, 3.0) - ref) <= 1e-8 * std::abs(ref));
}

TEST_CASE("ODE residual") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> lam(-10, 10), rr(0.1, 5);
  for (int i = 0; i < 50; ++i) {
    const double lambda = lam(rng), r = rr(rng);
    const double E = energy_for_lambda(lambda, kUnit);
    for (Branch b : {Branch::regular, Branch::singular}) {
      const ExactRadialState s{b, lambda, 1.0};
      const auto res = radial_ode_residual([&](double x) { return exact_radial(s, x); }, 0, E, kUnit, r);
      double max_R = 0;
      for (double x = 0.1; x <= 5; x += 0.05) max_R = std::max(max_R, std::abs(exact_radial(s, x)));
      CHECK(std::abs(res.residual) <= 1e-7 * max_R * std::max(1.0, res.scale / std::abs(exact_radial(s, r))));
      CHECK(res.relative() <= 1e-7);
    }
  }
  SUBCASE("constant R") {
    const double E = 0.3, r = 1.7;
    const auto res = radial_ode_residual([](double) { return cplx(2, 0); }, 0, E, kUnit, r);
    CHECK(std::abs(res.residual - 2.0 * (E + r * r / 2) * 2.0) <= 1e-9);
  }
  SUBCASE("inconsistent energy is detected") {
    const ExactRadialState s{Branch::regular, 1.0, 1.0};
    const auto res = radial_ode_residual([&](double x) { return exact_radial(s, x); }, 0, energy_for_lambda(1.2, kUnit),
                                         kUnit, 1.0);
    CHECK(res.relative() > 1e-3);
  }
}

TEST_CASE("property: the Wronskian times r^2 is constant") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> lam(-6, 6);
  for (int i = 0; i < 10; ++i) {
    const double lambda = lam(rng);
    const ExactRadialState u{Branch::regular, lambda, 1.0}, v{Branch::singular, lambda, 1.0};
    auto w = [&](double r) {
      return r * r * (exact_radial(u, r) * exact_radial_derivative(v, r) - exact_radial_derivative(u, r) * exact_radial(v, r));
    };
    const cplx w0 = w(0.2);
    CHECK(std::abs(w0) > 0.1);  // independent solutions
    for (double r : {0.7, 1.5, 3.0}) CHECK(std::abs(w(r) - w0) <= 1e-10 * std::abs(w0));
  }
}

TEST_CASE("analytic derivative matches finite differences") {
  for (Branch b : {Branch::regular, Branch::singular}) {
    const ExactRadialState s{b, 2.5, 1.1};
    for (double r : {0.3, 1.0, 2.2}) {
      const cplx fd = finite_diff([&](double x) { return exact_radial(s, x); }, r, 1e-3);
      CHECK(std::abs(exact_radial_derivative(s, r) - fd) <= 1e-8 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("energy map") {
  const CosmoParams p{2.2e-18, 4.4e26, 6.4514e53, kHbarCodata, 1};
  CHECK(energy_for_lambda(-4, p) == doctest::Approx(-4 * p.hbar * p.H0 / 2).epsilon(1e-15));
  CHECK(lambda_for_energy(energy_for_lambda(3.7, p), p) == doctest::Approx(3.7).epsilon(1e-15));
  const auto s = state_for_energy(Branch::singular, energy_for_lambda(1.5, p), p);
  CHECK(s.branch == Branch::singular);
  CHECK(s.lambda == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.a == doctest::Approx(derive_scales(p).a).epsilon(1e-15));
}

TEST_CASE("complete wavefunction is angle independent") {
  const ExactRadialState s{Branch::singular, -2, 0.9};
  for (double r : {0.2, 1.0, 3.3}) {
    const cplx a = complete_wavefunction(s, r, 0, 0), b = complete_wavefunction(s, r, pi / 2, pi);
    CHECK(a == b);
    CHECK(std::abs(a / exact_radial(s, r) - 1 / std::sqrt(4 * pi)) <= 1e-15);
  }
}

TEST_CASE("large radii are refused rather than degraded") {
  CHECK_THROWS_AS(exact_radial({Branch::regular, 1, 1}, 20.0), OutOfValidityRange);
}
