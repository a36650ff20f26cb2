#include "cosmo_entropy/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace cosmo::report {

namespace {

json complex_json(const std::complex<double>& c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json optional_complex(const std::optional<std::complex<double>>& c) {
  return c ? complex_json(*c) : json(nullptr);
}

// JSON has no infinities; they are emitted as null.
json number(double v) {
  if (v == 0) v = 0;
  return std::isfinite(v) ? json(v) : json(nullptr);
}

}  // namespace

void RunReport::add(std::string name, LogFloat v, std::string units, std::string formula) {
  results_.push_back({std::move(name), v, std::move(units), std::move(formula)});
}

void RunReport::add(std::string name, double v, std::string units, std::string formula) {
  results_.push_back({std::move(name), v, std::move(units), std::move(formula)});
}

void RunReport::add(std::string name, std::string v, std::string units, std::string formula) {
  results_.push_back({std::move(name), std::move(v), std::move(units), std::move(formula)});
}

json RunReport::to_json() const {
  json out;
  out["inputs"] = inputs;
  json results = json::array();
  for (const auto& r : results_) {
    json e;
    e["name"] = r.name;
    if (const auto* lf = std::get_if<LogFloat>(&r.value)) {
      e["value"] = report::to_json(*lf);
    } else if (const auto* d = std::get_if<double>(&r.value)) {
      e["value"] = number(*d);
    } else {
      e["value"] = std::get<std::string>(r.value);
    }
    e["units"] = r.units;
    e["formula"] = r.formula;
    results.push_back(std::move(e));
  }
  out["results"] = std::move(results);
  return out;
}

void RunReport::write_text(std::ostream& os) const {
  for (const auto& r : results_) {
    os << r.name << " = ";
    if (const auto* lf = std::get_if<LogFloat>(&r.value)) {
      os << "10^" << format_number(lf->log10_abs()) << " (sign " << lf->sign() << ", ln_mag "
         << format_number(lf->ln_mag()) << ")";
    } else if (const auto* d = std::get_if<double>(&r.value)) {
      os << format_number(*d);
    } else {
      os << std::get<std::string>(r.value);
    }
    if (!r.units.empty()) os << ' ' << r.units;
    os << "  [" << r.formula << "]\n";
  }
}

std::string format_number(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const LogFloat& v) {
  json out;
  out["log10"] = v.is_zero() ? json(nullptr) : json(v.log10_abs());
  out["sign"] = v.sign();
  out["ln_mag"] = v.is_zero() ? json(nullptr) : json(v.ln_mag());
  return out;
}

json to_json(const CosmoParams& p) {
  return json{{"H0_si", p.H0}, {"R0_m", p.R0}, {"m_kg", p.m}, {"hbar", p.hbar}, {"kB", p.kB}};
}

json to_json(const qdiag::QVReport& r) {
  json out;
  out["E"] = number(r.E);
  out["V_expect"] = number(r.V_expect);
  out["Q_expect"] = number(r.Q_expect);
  out["ratio"] = number(r.ratio);
  out["integrand_breakdown"] = json{{"conj_psi_over_psi_grad_psi_sq", optional_complex(r.bracket.conj_over_psi)},
                                    {"psi_over_conj_psi_grad_conj_sq", optional_complex(r.bracket.psi_over_conj)},
                                    {"minus_two_grad_conj_grad_psi", optional_complex(r.bracket.cross)},
                                    {"total", complex_json(r.bracket.total)}};
  out["norm_before_normalisation"] = number(r.norm);
  out["excluded_fraction"] = number(r.excluded_fraction);
  return out;
}

}  // namespace cosmo::report
