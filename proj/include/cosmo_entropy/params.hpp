#pragma once

#include <filesystem>
#include <string_view>

#include "cosmo_entropy/logfloat.hpp"

namespace cosmo {

inline constexpr double kHbarCodata = 1.054571817e-34;     // J s
inline constexpr double kBoltzmannCodata = 1.380649e-23;   // J / K
inline constexpr double kMetersPerMegaparsec = 3.0857e22;  // m

/// Physical inputs, SI units throughout.
struct CosmoParams {
  double H0 = 0;  // 1/s
  double R0 = 0;  // m
  double m = 0;   // kg
  double hbar = kHbarCodata;
  double kB = kBoltzmannCodata;
};

struct LoadOptions {
  /// Enforce H0 in [1e-19, 1e-17] 1/s when the document declares
  /// "profile": "cosmology".
  bool cosmology_gate = true;
};

/// Parse a JSON parameter document. H0 is given either as `H0_km_s_Mpc` or
/// `H0_si`; `R0_m` and `m_kg` are required; `hbar` and `kB` are optional.
/// Keys beginning with '_' are comments. Throws ConfigError naming the key.
CosmoParams load_params(std::string_view config_text, const LoadOptions& options = {});
CosmoParams load_params_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Throws ConfigError if any field is non-positive or non-finite.
void validate(const CosmoParams& p);

struct DimensionlessScales {
  double lambda0;        // ground-state eigenvalue, -m H0 R0^2 / hbar
  double sigma0;         // entropy scale, exactly -lambda0; may be +inf
  LogFloat sigma0_log;   // the same value without overflow
  double sigma0_log10;
  double a;              // 1/m, a^4 = m k_eff / hbar^2
  double E0;             // J, -m H0^2 R0^2 / 2
  double k_eff;          // kg / s^2, m H0^2
};

/// sigma0 = m H0 R0^2 / hbar as a LogFloat.
LogFloat entropy_scale(const CosmoParams& p);

DimensionlessScales derive_scales(const CosmoParams& p);

/// Radius R at which m H0 R^2 / hbar equals sigma.
double radius_for_entropy(double sigma, const CosmoParams& p);

}  // namespace cosmo
