#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cosmo_entropy/logfloat.hpp"
#include "cosmo_entropy/params.hpp"
#include "cosmo_entropy/qdiagnostic.hpp"

namespace cosmo::report {

using json = nlohmann::ordered_json;

/// One emitted number. `formula` says which relation produced it, or
/// "plumbing" for echoed inputs.
struct ResultEntry {
  std::string name;
  std::variant<LogFloat, double, std::string> value;
  std::string units;
  std::string formula;
};

class RunReport {
 public:
  json inputs = json::object();

  void add(std::string name, LogFloat v, std::string units, std::string formula);
  void add(std::string name, double v, std::string units, std::string formula);
  void add(std::string name, std::string v, std::string units, std::string formula);

  const std::vector<ResultEntry>& results() const { return results_; }
  json to_json() const;
  /// `name = value units  [formula]`, one line each; LogFloats print as
  /// log10 with the (sign, ln_mag) pair alongside.
  void write_text(std::ostream& os) const;

 private:
  std::vector<ResultEntry> results_;
};

/// %.17g, the fixed format used for every CSV and text number.
std::string format_number(double v);

json to_json(const LogFloat& v);
json to_json(const CosmoParams& p);
json to_json(const qdiag::QVReport& r);

}  // namespace cosmo::report
