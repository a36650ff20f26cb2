#include "cosmo_entropy/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cosmo_entropy/errors.hpp"
#include "json.hpp"

namespace cosmo {

namespace {

using nlohmann::json;

double number_at(const json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key, "key '" + key + "' must be a number");
  return v.get<double>();
}

void require_positive(const std::string& key, double value) {
  if (!std::isfinite(value) || !(value > 0)) {
    std::ostringstream os;
    os << "non-positive " << key << " (" << value << ")";
    throw ConfigError(key, os.str());
  }
}

}  // namespace

void validate(const CosmoParams& p) {
  require_positive("H0", p.H0);
  require_positive("R0", p.R0);
  require_positive("m", p.m);
  require_positive("hbar", p.hbar);
  require_positive("kB", p.kB);
}

CosmoParams load_params(std::string_view config_text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("unparseable parameter document: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "parameter document must be a JSON object");

  CosmoParams p;
  const bool has_kms = doc.contains("H0_km_s_Mpc");
  const bool has_si = doc.contains("H0_si");
  if (has_kms && has_si) throw ConfigError("H0", "give only one of H0_km_s_Mpc and H0_si");
  if (!has_kms && !has_si) throw ConfigError("H0", "missing key H0_km_s_Mpc or H0_si");
  if (has_kms) {
    const double kms = number_at(doc, "H0_km_s_Mpc");
    require_positive("H0_km_s_Mpc", kms);
    p.H0 = kms * 1e3 / kMetersPerMegaparsec;
  } else {
    p.H0 = number_at(doc, "H0_si");
    require_positive("H0_si", p.H0);
  }
  for (const char* key : {"R0_m", "m_kg"}) {
    if (!doc.contains(key)) throw ConfigError(key, std::string("missing key ") + key);
  }
  p.R0 = number_at(doc, "R0_m");
  require_positive("R0_m", p.R0);
  p.m = number_at(doc, "m_kg");
  require_positive("m_kg", p.m);
  if (doc.contains("hbar")) p.hbar = number_at(doc, "hbar");
  if (doc.contains("kB")) p.kB = number_at(doc, "kB");
  validate(p);

  if (doc.contains("profile")) {
    const auto& profile = doc.at("profile");
    if (!profile.is_string()) throw ConfigError("profile", "key 'profile' must be a string");
    if (profile.get<std::string>() == "cosmology" && options.cosmology_gate) {
      if (p.H0 < 1e-19 || p.H0 > 1e-17) {
        std::ostringstream os;
        os << "H0 = " << p.H0 << " 1/s is outside the cosmology range [1e-19, 1e-17]";
        throw ConfigError("H0", os.str());
      }
    }
  }
  return p;
}

CosmoParams load_params_file(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open parameter file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_params(buf.str(), options);
}

LogFloat entropy_scale(const CosmoParams& p) {
  const LogFloat R0(p.R0);
  return LogFloat(p.m) * LogFloat(p.H0) * R0 * R0 / LogFloat(p.hbar);
}

DimensionlessScales derive_scales(const CosmoParams& p) {
  validate(p);
  DimensionlessScales s{};
  s.sigma0_log = entropy_scale(p);
  s.sigma0 = p.m * p.H0 * p.R0 * p.R0 / p.hbar;
  s.lambda0 = -s.sigma0;
  s.sigma0_log10 = s.sigma0_log.log10_abs();
  s.k_eff = p.m * p.H0 * p.H0;
  s.a = std::sqrt(std::sqrt(p.m * s.k_eff) / p.hbar);
  s.E0 = -0.5 * p.m * p.H0 * p.H0 * p.R0 * p.R0;
  return s;
}

double radius_for_entropy(double sigma, const CosmoParams& p) {
  if (!(sigma > 0)) throw std::domain_error("radius_for_entropy: sigma must be positive");
  validate(p);
  return std::sqrt(sigma * p.hbar / (p.m * p.H0));
}

}  // namespace cosmo
