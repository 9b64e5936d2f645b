#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dunkl/report.hpp"
#include "dunkl/rootsys.hpp"

namespace dunkl {

struct SuiteConfig {
  std::string suite;
  RootSystem root_system = RootSystem::rank_one(1);
  int grid_n = 257;
  /// Replaces every tolerance when set.
  std::optional<double> tol;
  /// Per-check tolerance overrides, applied after `tol`.
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 20240531;
  std::string out;
  std::string format = "json";

  /// Throws UsageError for an unknown suite, a non-positive tolerance, a bad
  /// format or a grid size below 17.
  void validate() const;
};

/// {"suite", "preset" | "root_system", "grid_n", "tol", "tolerances", "seed",
///  "out", "format"}; missing keys keep their defaults.
SuiteConfig suite_config_from_json(const nlohmann::json& doc);

/// The fixed roster, "all" last.
const std::vector<std::string>& suite_names();

/// Suites that need a rank-one root system; "all" skips them otherwise.
bool suite_needs_rank_one(const std::string& name);

/// Runs the named suite. Unsupported root systems surface as
/// UnsupportedCase; numeric trouble inside a check is recorded as a failed
/// check with a NaN residual.
VerificationReport run_suite(const SuiteConfig& config);

/// Plot quantities each suite can emit, e.g. "kernel-curve".
const std::vector<std::string>& plot_quantities();

/// CSV for `quantity` from the report. UsageError for an unknown quantity
/// or when the report holds no rows for it.
std::string emit_plotdata(const VerificationReport& report, const std::string& quantity);

/// Suite that produces `quantity`.
std::string suite_for_quantity(const std::string& quantity);

}  // namespace dunkl
