#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dunkl {

struct CheckRecord {
  std::string id;
  std::string anchor;  // the identity or property being checked
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Sampled data for plotting: named columns, one row per sample.
struct Curve {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Header row plus data rows; deterministic formatting.
std::string curve_to_csv(const Curve& curve);

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = {});

  const std::string& suite() const { return suite_; }
  void set_suite(std::string suite) { suite_ = std::move(suite); }

  /// pass = residual <= tol; NaN residuals fail.
  const CheckRecord& add_check(std::string id, std::string anchor, double residual, double tol);
  void add_curve(Curve curve);
  void set_env(const std::string& key, nlohmann::json value);
  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  /// Appends checks and curves of another report; env keys are merged.
  void merge(const VerificationReport& other);
  /// Replaces every tolerance and recomputes pass flags.
  void override_tolerance(double tol);
  /// Replaces the tolerance of one check; UsageError for an unknown id.
  void override_tolerance(const std::string& id, double tol);

  bool passed() const;
  double max_residual() const;
  const std::vector<CheckRecord>& checks() const { return checks_; }
  const CheckRecord* find_check(const std::string& id) const;
  const std::vector<Curve>& curves() const { return curves_; }
  const Curve* find_curve(const std::string& name) const;
  const nlohmann::json& env() const { return env_; }

  /// Everything except wall time; stable across runs with the same inputs.
  nlohmann::json body_json() const;
  nlohmann::json to_json() const;
  /// id,anchor,residual,tol,pass rows.
  std::string to_csv() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
  std::vector<Curve> curves_;
  nlohmann::json env_ = nlohmann::json::object();
  double elapsed_ms_ = 0.0;
};

/// Shortest round-trip decimal text for a double ("nan", "inf" for
/// non-finite values).
std::string format_double(double v);

}  // namespace dunkl
