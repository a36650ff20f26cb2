#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cosmo_entropy/errors.hpp"
#include "cosmo_entropy/exactradial.hpp"
#include "cosmo_entropy/qdiagnostic.hpp"

using namespace cosmo;
using namespace cosmo::qdiag;
using std::numbers::pi;

namespace {

RadialWavefunction gaussian_times_phase(double kappa, double width) {
  RadialWavefunction wf;
  wf.r_min = 0;
  wf.r_max = 6;
  wf.psi = [=](double r) { return std::polar(std::exp(-r * r / (2 * width * width)), kappa * r); };
  return wf;
}

auto hubble(double m, double H0) {
  return [=](double r) { return -0.5 * m * H0 * H0 * r * r; };
}

}  // namespace

TEST_CASE("real wavefunctions have a vanishing bracket") {
  RadialWavefunction wf = gaussian_times_phase(0, 1.3);
  const double E = -0.7;
  const auto rep = qv_ratio(wf, E, hubble(1, 1), 1, 1);
  CHECK(rep.bracket.total == cplx(0, 0));
  CHECK(rep.ratio == doctest::Approx((E - rep.V_expect) / rep.V_expect).epsilon(1e-14));
  // E = <V> is the best case
  const auto best = qv_ratio(wf, rep.V_expect, hubble(1, 1), 1, 1);
  CHECK(best.ratio == 0.0);
  CHECK(violation_assessment(best) == Compliance::compliant);
}

TEST_CASE("a phase e^{i kappa r} contributes -4 kappa^2 per unit norm") {
  for (double kappa : {0.5, 2.0, 5.0}) {
    const auto rep = qv_ratio(gaussian_times_phase(kappa, 1.0), 0.0, hubble(1, 1), 1, 1);
    CHECK(rep.bracket.total.real() == doctest::Approx(-4 * kappa * kappa).epsilon(1e-8));
    CHECK(std::fabs(rep.bracket.total.imag()) <= 1e-8 * kappa * kappa);
  }
  SUBCASE("g constant on [r1, r2], terms separately") {
    RadialWavefunction wf;
    wf.r_min = 1;
    wf.r_max = 2;
    const double kappa = 1.7;
    wf.psi = [=](double r) { return std::polar(1.0, kappa * r); };
    wf.dpsi = [=](double r) { return cplx(0, kappa) * std::polar(1.0, kappa * r); };
    const auto rep = qv_ratio(wf, 0.0, hubble(1, 1), 1, 1);
    // psi*/psi psi'^2 = -kappa^2 |g|^2 for each of the first two, -2 kappa^2 for the cross term
    REQUIRE(rep.bracket.conj_over_psi);
    REQUIRE(rep.bracket.psi_over_conj);
    REQUIRE(rep.bracket.cross);
    CHECK(std::abs(*rep.bracket.conj_over_psi + kappa * kappa) <= 1e-10);
    CHECK(std::abs(*rep.bracket.psi_over_conj + kappa * kappa) <= 1e-10);
    CHECK(std::abs(*rep.bracket.cross + 2 * kappa * kappa) <= 1e-10);
    CHECK(std::abs(rep.bracket.total + 4 * kappa * kappa) <= 1e-10);
  }
}

TEST_CASE("property: global phase and amplitude scale leave the report unchanged") {
  const auto base = gaussian_times_phase(1.1, 0.9);
  const auto ref = qv_ratio(base, -0.3, hubble(1, 1), 1, 1);
  for (double theta : {pi / 7, pi / 3}) {
    for (double scale : {1.0, 1e-3, 40.0}) {
      RadialWavefunction wf = base;
      wf.psi = [=](double r) { return std::polar(scale, theta) * base.psi(r); };
      const auto rep = qv_ratio(wf, -0.3, hubble(1, 1), 1, 1);
      CHECK(rep.ratio == doctest::Approx(ref.ratio).epsilon(1e-9));
      CHECK(rep.V_expect == doctest::Approx(ref.V_expect).epsilon(1e-10));
      CHECK(rep.norm == doctest::Approx(ref.norm * scale * scale).epsilon(1e-10));
    }
  }
}

TEST_CASE("potential expectation") {
  const double R0 = 2, H0 = 0.7, m = 1.5;
  RadialWavefunction wf;
  wf.r_min = 0;
  wf.r_max = R0;
  const freewaves::SphericalWaveState s{3.0, R0, 1};
  wf.psi = [=](double r) { return freewaves::spherical_wave_eval(s, r); };
  QOptions strict;
  strict.normalization = NormalizationPolicy::require;
  CHECK(potential_expectation(wf, hubble(m, H0), strict) == doctest::Approx(-0.5 * m * H0 * H0 * R0 * R0 / 3).epsilon(1e-9));
  CHECK(potential_expectation(wf, [](double) { return 4.25; }, strict) == doctest::Approx(4.25).epsilon(1e-9));
  CHECK(norm_integral(wf) == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("matched vacuum: <V> tracks E0 to O(1/sigma)") {
  const auto prob = parse_state("matched:sigma=100,x0=1,parity=sinh,mode=exact");
  const double V = potential_expectation(prob.wf, prob.V);
  CHECK(prob.E_auto == doctest::Approx(-5000));
  CHECK(std::fabs(V / prob.E_auto - 1) <= 2.0 / 100);
  const auto rep = diagnose(prob, prob.E_auto);
  CHECK(rep.bracket.total == cplx(0, 0));
  CHECK(std::fabs(rep.ratio) <= 2.0 / 100);
}

TEST_CASE("exact radial states have a nonzero bracket") {
  const auto prob = parse_state("exact:branch=1,lambda=3,a=1,rmin=0,rmax=4");
  const auto rep = diagnose(prob, prob.E_auto);
  CHECK(std::isfinite(rep.ratio));
  CHECK(std::isfinite(rep.bracket.total.real()));
  CHECK(rep.norm > 0);
}

TEST_CASE("plane wave uses the separable route") {
  const auto prob = parse_state("plane:kx=2,ky=0,kz=1,R0=1,H0=1");
  REQUIRE(prob.plane);
  const auto rep = diagnose(prob, prob.E_auto);
  CHECK(rep.V_expect == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(rep.bracket.total.real() == doctest::Approx(-4 * 5.0).epsilon(1e-9));
  CHECK(rep.norm == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("errors") {
  RadialWavefunction wf = gaussian_times_phase(0, 1);
  QOptions strict;
  strict.normalization = NormalizationPolicy::require;
  CHECK_THROWS_AS(qv_ratio(wf, 1, hubble(1, 1), 1, 1, strict), NotNormalized);
  CHECK_THROWS_AS(qv_ratio(wf, 1, [](double) { return 0.0; }, 1, 1), ZeroPotentialExpectation);
  RadialWavefunction zero;
  zero.psi = [](double) { return cplx(0, 0); };
  CHECK_THROWS_AS(qv_ratio(zero, 1, hubble(1, 1), 1, 1), NotNormalized);
}

TEST_CASE("assessment") {
  CHECK(violation_assessment(0.0) == Compliance::compliant);
  CHECK(violation_assessment(0.05, 0.1) == Compliance::compliant);
  CHECK(violation_assessment(-0.5, 0.1) == Compliance::marginal);
  CHECK(violation_assessment(5.0, 0.1) == Compliance::violated);
  CHECK(violation_assessment(5.0, 10) == Compliance::compliant);
  CHECK_THROWS(violation_assessment(NAN));
  CHECK_THROWS(violation_assessment(0.1, 0));
  CHECK(to_string(Compliance::violated) == "violated");
  CHECK(to_string(Compliance::compliant) == "compliant");
  CHECK(to_string(Compliance::marginal) == "marginal");
}

TEST_CASE("state spec parsing") {
  CHECK(parse_state("spherical:kappa=3,R0=1,H0=1,sign=1").kind == "spherical");
  CHECK(parse_state("matched:sigma=50,x0=0.5,parity=cosh,mode=paper").kind == "matched");
  CHECK_THROWS_AS(parse_state("bogus:x=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("matched:sigma=50,x0=0.5,colour=red"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("matched:sigma=abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("exact:branch=3,lambda=1,a=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("matched"), std::invalid_argument);
}

TEST_CASE("lambda sweep") {
  const auto pts = lambda_sweep(1.0, {-2, 0.5, 3}, 0.0, 3.0);
  REQUIRE(pts.size() == 3);
  for (const auto& p : pts) {
    CHECK(std::isfinite(p.report.ratio));
    CHECK(p.report.E == doctest::Approx(p.lambda / 2));
  }
}
