#pragma once

// Catalog of named verification checks. Each check builds its inputs from a
// seeded generator, runs the library operations, and records expected values
// (with where they come from) next to the computed ones.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace detideal {

enum class FieldMode { exact, modular };
enum class ReportFormat { json, text };

FieldMode parse_field_mode(const std::string& text);
std::string to_string(FieldMode mode);
ReportFormat parse_report_format(const std::string& text);

// Integer parameters a check may accept.
inline const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names{"m", "n", "p", "q", "d", "r", "t", "k"};
  return names;
}

struct CheckSpec {
  std::string name;
  std::map<std::string, long long> params;  // keys from parameter_names()
  std::optional<FieldMode> field;           // unset: the check's default
  std::uint64_t seed = 1;
  unsigned primes = 2;                      // primes per modular rank
};

// Expected entries are {"value": v, "provenance": p} where p is one of
//   "stated"  - a value or identity asserted by the known result being verified,
//   "derived" - computed by an independent route inside the check,
//   "trivial" - forced by a definition.
// A report passes iff every expected value equals the actual value under the
// same key. Actual entries without an expected counterpart are informational.
struct Report {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
  nlohmann::ordered_json actual = nlohmann::ordered_json::object();
  bool pass = false;
  double runtime_ms = 0;
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
};

struct ParamInfo {
  std::string name;
  std::optional<long long> default_value;  // unset: the check sweeps its own family
  std::string meaning;
};

struct CheckInfo {
  std::string name;
  std::string summary;
  std::vector<ParamInfo> params;
  FieldMode default_field;
  bool modular_supported;
};

// Every check in catalog order.
const std::vector<CheckInfo>& check_catalog();
const CheckInfo& check_info(const std::string& name);  // throws std::invalid_argument

// Throws std::invalid_argument for unknown checks, unknown or out-of-range
// parameters, and unsupported field modes.
Report run_check(const CheckSpec& spec);

// True iff the report has expectations and each matches its actual value.
bool expectations_met(const Report& report);

std::string emit_report(const Report& report, ReportFormat format);

}  // namespace detideal
