#include <doctest.h>

#include <sstream>

#include "cosmo_entropy/params.hpp"
#include "cosmo_entropy/qdiagnostic.hpp"
#include "cosmo_entropy/report.hpp"
#include "cosmo_entropy/verify.hpp"

using namespace cosmo;

TEST_CASE("number formatting") {
  CHECK(report::format_number(0.1) == "0.10000000000000001");
  CHECK(report::format_number(-0.0) == "0");
  CHECK(report::format_number(1.0) == "1");
  CHECK(report::format_number(1.0 / 3) == "0.33333333333333331");
  CHECK(report::format_number(2.5e-300) == "2.5e-300");
}

TEST_CASE("LogFloat and parameter JSON") {
  const auto j = report::to_json(LogFloat::from_ln(10 * std::log(10.0), -1));
  CHECK(j["sign"] == -1);
  CHECK(j["log10"].get<double>() == doctest::Approx(10).epsilon(1e-15));
  CHECK(j["ln_mag"].get<double>() == doctest::Approx(10 * std::log(10.0)));
  CHECK(report::to_json(LogFloat::zero())["sign"] == 0);
  const auto p = report::to_json(CosmoParams{1, 2, 3, 4, 5});
  CHECK(p["H0_si"] == 1.0);
  CHECK(p["R0_m"] == 2.0);
  CHECK(p["m_kg"] == 3.0);
}

TEST_CASE("run report") {
  report::RunReport r;
  r.inputs["x"] = 1;
  r.add("a", LogFloat(100.0), "k_B", "f1");
  r.add("b", -0.0, "", "plumbing");
  r.add("c", std::string("text"), "", "plumbing");
  const auto j = r.to_json();
  CHECK(j["inputs"]["x"] == 1);
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["name"] == "a");
  CHECK(j["results"][0]["formula"] == "f1");
  CHECK(j["results"][1]["value"].dump() == "0.0");
  CHECK(j["results"][2]["value"] == "text");
  std::ostringstream os;
  r.write_text(os);
  CHECK(os.str().find("a = 10^2 (sign 1, ln_mag 4.6051701859880918) k_B  [f1]") != std::string::npos);
}

TEST_CASE("Q report JSON carries the integrand breakdown") {
  const auto prob = qdiag::parse_state("spherical:kappa=3,R0=1,H0=1,sign=1");
  const auto j = report::to_json(qdiag::diagnose(prob, prob.E_auto));
  CHECK(j.contains("integrand_breakdown"));
  CHECK(j["integrand_breakdown"].contains("total"));
  CHECK(j["ratio"].is_number());
}

TEST_CASE("verify suites") {
  CHECK(verify::suite_names().size() == 7);
  CHECK_THROWS_AS(verify::run("nonexistent"), std::invalid_argument);
  verify::VerifyOptions opts;
  opts.cosmology = load_params_file(std::string(COSMO_PROFILE_DIR) + "/planck2015.json");
  const auto all = verify::run("all", opts);
  CHECK(all.size() > 100);
  for (const auto& c : all) {
    INFO(c.suite << ": " << c.name << " " << c.measured << " vs " << c.tolerance << " " << c.detail);
    CHECK(c.passed);
  }
  for (const auto& name : verify::suite_names()) {
    const auto part = verify::run(name, opts);
    CHECK_FALSE(part.empty());
    for (const auto& c : part) CHECK(c.suite == name);
  }
}
