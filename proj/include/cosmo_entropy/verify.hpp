#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosmo_entropy/params.hpp"

namespace cosmo::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0;   // the worst value observed
  double tolerance = 0;  // what it was held to
  std::string detail;
};

struct VerifyOptions {
  /// Desk-scale sigma added to the fixed sets {50, 100, 150, 300}.
  double sigma = 100;
  /// Physical profile for the entropy consistency checks; unit params if empty.
  std::optional<CosmoParams> cosmology;
  std::uint64_t seed = 20151105;
};

/// x2, entropy, freewaves, exact, matching, madelung, qdiag.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for unknown names. Checks that throw are reported as failures.
std::vector<CheckResult> run(std::string_view suite, const VerifyOptions& opts = {});

}  // namespace cosmo::verify
