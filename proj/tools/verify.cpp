// verify <check> [--m .. --k] [--seed S] [--field exact|modular] [--primes N] [--format json|text]
// verify all [--seed S] [--field ...] [--primes N] [--format ...]
// verify --list
//
// Prints one report per check to standard output; exits 0 iff every check passes.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "detideal/checks.hpp"

int main(int argc, char** argv) {
  using namespace detideal;

  CLI::App app{"Verify determinantal-ideal identities for symmetric, exterior and tensor powers"};
  std::string check;
  std::map<std::string, std::optional<long long>> params;
  std::uint64_t seed = 1;
  std::optional<std::string> field;
  unsigned primes = 2;
  std::string format = "json";
  bool list = false;

  app.add_option("check", check, "check name, or 'all' for the full catalog");
  for (const std::string& name : parameter_names()) app.add_option("--" + name, params[name], "integer parameter " + name);
  app.add_option("--seed", seed, "seed for random inputs and primes")->capture_default_str();
  app.add_option("--field", field, "exact or modular (default: per check)")->check(CLI::IsMember({"exact", "modular"}));
  app.add_option("--primes", primes, "primes per modular computation")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--list", list, "list the catalog and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (list) {
    for (const CheckInfo& info : check_catalog()) {
      std::cout << info.name << "  [" << to_string(info.default_field) << (info.modular_supported && info.default_field == FieldMode::exact ? ", modular available" : "")
                << "]\n    " << info.summary << "\n";
      for (const ParamInfo& p : info.params)
        std::cout << "    --" << p.name << "  " << p.meaning
                  << (p.default_value ? " (default " + std::to_string(*p.default_value) + ")" : std::string()) << "\n";
    }
    return 0;
  }
  if (check.empty()) {
    std::cerr << "error: a check name (or 'all') is required; see --list\n";
    return 1;
  }

  try {
    const ReportFormat fmt = parse_report_format(format);
    std::vector<CheckSpec> specs;
    auto base = [&](const std::string& name) {
      CheckSpec spec;
      spec.name = name;
      spec.seed = seed;
      spec.primes = primes;
      return spec;
    };
    if (check == "all") {
      for (const auto& [name, value] : params)
        if (value) throw std::invalid_argument("integer parameters cannot be combined with 'all'");
      for (const CheckInfo& info : check_catalog()) {
        CheckSpec spec = base(info.name);
        // An explicit field applies where the check supports it.
        if (field && (info.modular_supported || *field == "exact")) spec.field = parse_field_mode(*field);
        specs.push_back(spec);
      }
    } else {
      CheckSpec spec = base(check);
      for (const auto& [name, value] : params)
        if (value) spec.params[name] = *value;
      if (field) spec.field = parse_field_mode(*field);
      specs.push_back(spec);
    }

    bool all_pass = true;
    for (const CheckSpec& spec : specs) {
      const Report report = run_check(spec);
      all_pass = all_pass && report.pass;
      std::cout << emit_report(report, fmt) << (fmt == ReportFormat::json ? "\n" : "") << std::flush;
    }
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
