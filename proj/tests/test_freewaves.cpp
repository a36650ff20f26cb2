#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cosmo_entropy/freewaves.hpp"
#include "cosmo_entropy/params.hpp"
#include "oracles.hpp"

using namespace cosmo;
using namespace cosmo::freewaves;
using std::numbers::pi;

TEST_CASE("plane wave evaluation") {
  const PlaneWaveState zero{{0, 0, 0}, 2.0};
  CHECK(std::abs(plane_wave_eval(zero, {0.3, 0.1, 1.9}) - std::pow(2.0, -1.5)) <= 1e-15);
  const PlaneWaveState s{{pi / 3, 0, 0}, 3.0};
  CHECK(std::abs(plane_wave_eval(s, {3, 0, 0}) + std::pow(3.0, -1.5)) <= 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10), in_box(0, 2);
  for (int i = 0; i < 100; ++i) {
    const PlaneWaveState w{{u(rng), u(rng), u(rng)}, 2.0};
    CHECK(std::norm(plane_wave_eval(w, {in_box(rng), in_box(rng), in_box(rng)})) == doctest::Approx(0.125).epsilon(1e-13));
  }
  CHECK_THROWS(plane_wave_eval(zero, {2.5, 0, 0}));
}

TEST_CASE("spherical wave evaluation") {
  const double R0 = 2.5;
  const SphericalWaveState zero{0, R0, 1};
  CHECK(std::abs(spherical_wave_eval(zero, 0.7) - 1 / std::sqrt(4 * pi * R0) / 0.7) <= 1e-15);
  const SphericalWaveState s{pi / R0, R0, 1};
  CHECK(std::abs(spherical_wave_eval(s, R0) + 1 / std::sqrt(4 * pi * R0) / R0) <= 1e-15);
  const SphericalWaveState m{1.7, R0, -1};
  CHECK(std::abs(spherical_wave_eval(m, 0.4) - std::conj(spherical_wave_eval({1.7, R0, 1}, 0.4))) <= 1e-15);
  // particle number per shell is constant in r
  for (double r : {0.01, 0.5, 1.0, 2.5}) {
    CHECK(std::norm(spherical_wave_eval(s, r)) * 4 * pi * r * r == doctest::Approx(1 / R0).epsilon(1e-13));
  }
}

TEST_CASE("N presets") {
  CHECK(*n_factor_preset("paper-plane") == kPaperPlaneN);
  CHECK(*n_factor_preset("paper-spherical") == kPaperSphericalN);
  CHECK_FALSE(n_factor_preset("bogus"));
}

TEST_CASE("gravitational entropy") {
  const CosmoParams unit{1, 1, 1, 1, 1};
  CHECK(grav_entropy_plane(unit).to_double() == doctest::Approx(1).epsilon(1e-15));
  CHECK(grav_entropy_spherical(unit, 3).to_double() == doctest::Approx(1).epsilon(1e-15));
  const auto planck = load_params_file(std::string(COSMO_PROFILE_DIR) + "/planck2015.json");
  CHECK(std::fabs(grav_entropy_plane(planck, kPaperPlaneN).log10_abs() - 123) <= 0.05);
  CHECK(std::fabs(grav_entropy_spherical(planck, kPaperSphericalN).log10_abs() - 123) <= 0.05);
}

TEST_CASE("property: plane over spherical entropy is 3 at equal N") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> e(-40, 40);
  for (int i = 0; i < 200; ++i) {
    const CosmoParams p{std::pow(10.0, e(rng)), std::pow(10.0, e(rng)), std::pow(10.0, e(rng)),
                        std::pow(10.0, e(rng)), 1};
    const double ratio = (grav_entropy_plane(p, 0.7) / grav_entropy_spherical(p, 0.7)).to_double();
    CHECK(ratio == doctest::Approx(3).epsilon(1e-13));
  }
}

TEST_CASE("second moments by quadrature") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-30, 30);
  for (int i = 0; i < 10; ++i) {
    const PlaneWaveState s{{u(rng), u(rng), u(rng)}, 1.0};
    CHECK(r2_expectation_plane_quadrature(s) == doctest::Approx(1).epsilon(1e-10));
  }
  CHECK(r2_expectation_plane_quadrature({{1, 2, 3}, 4.0}) == doctest::Approx(16).epsilon(1e-10));
  CHECK(r2_expectation_spherical_quadrature({2.0, 1.0, 1}) == doctest::Approx(1.0 / 3).epsilon(1e-10));
  CHECK(r2_expectation_spherical_quadrature({0.3, 5.0, -1}) == doctest::Approx(25.0 / 3).epsilon(1e-10));
}

TEST_CASE("second moment against an independent Gauss-Legendre oracle") {
  const SphericalWaveState s{3.1, 2.0, 1};
  const long double ref = oracle::gauss_panels(
      [&](long double r) { return 4 * pi * std::norm(spherical_wave_eval(s, static_cast<double>(r))) * r * r * r * r; },
      0.0L, 2.0L, 400);
  CHECK(r2_expectation_spherical_quadrature(s) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-11));
}

TEST_CASE("matter entropy") {
  CHECK(matter_entropy_operator(PlaneWaveState{{1, 2, 3}, 1.0}, {0.2, 0.3, 0.4}) == doctest::Approx(0).scale(1));
  CHECK(matter_entropy_operator(PlaneWaveState{{1, 2, 3}, 5.0}, {0.2, 0.3, 0.4}) ==
        doctest::Approx(-3 * std::log(5.0)).epsilon(1e-14));
  CHECK(matter_entropy_operator(SphericalWaveState{1, 1, 1}, 1.0) == doctest::Approx(-std::log(4 * pi)).epsilon(1e-14));
  CHECK(matter_entropy_expectation(PlaneWaveState{{0, 0, 0}, std::exp(1.0)}).total() == doctest::Approx(-3).epsilon(1e-14));
  const auto s1 = matter_entropy_expectation(SphericalWaveState{2, 1, 1});
  CHECK(std::fabs(s1.r0_dependent) <= 1e-9);
  CHECK(s1.constant == doctest::Approx(2 - std::log(4 * pi)).epsilon(1e-12));
  CHECK(s1.constant == doctest::Approx(-0.5310).epsilon(1e-4));
  const auto s10 = matter_entropy_expectation(SphericalWaveState{2, 10, 1});
  CHECK(s10.r0_dependent == doctest::Approx(-3 * std::log(10.0)).epsilon(1e-9));
  CHECK(s10.constant == doctest::Approx(s1.constant).epsilon(1e-12));
  CHECK(minus_two_ln_r_expectation(SphericalWaveState{5, 7, 1}) == doctest::Approx(2 - 2 * std::log(7.0)).epsilon(1e-9));
}
