#include "dunkl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::json number_or_text(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string curve_to_csv(const Curve& curve) {
  std::ostringstream os;
  for (std::size_t i = 0; i < curve.columns.size(); ++i) os << (i ? "," : "") << csv_field(curve.columns[i]);
  os << '\n';
  for (const auto& row : curve.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
  return os.str();
}

VerificationReport::VerificationReport(std::string suite) : suite_(std::move(suite)) {}

const CheckRecord& VerificationReport::add_check(std::string id, std::string anchor, double residual, double tol) {
  if (!(tol > 0.0) && tol != 0.0) throw InvalidArgument("tolerance must be nonnegative");
  CheckRecord rec{std::move(id), std::move(anchor), residual, tol, residual <= tol};
  checks_.push_back(std::move(rec));
  return checks_.back();
}

void VerificationReport::add_curve(Curve curve) { curves_.push_back(std::move(curve)); }

void VerificationReport::set_env(const std::string& key, nlohmann::json value) { env_[key] = std::move(value); }

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  curves_.insert(curves_.end(), other.curves_.begin(), other.curves_.end());
  for (const auto& [k, v] : other.env_.items()) env_[k] = v;
}

void VerificationReport::override_tolerance(double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance override must be positive");
  for (auto& c : checks_) {
    c.tol = tol;
    c.pass = c.residual <= tol;
  }
}

void VerificationReport::override_tolerance(const std::string& id, double tol) {
  if (!(tol > 0.0)) throw UsageError("tolerance for " + id + " must be positive");
  for (auto& c : checks_) {
    if (c.id != id) continue;
    c.tol = tol;
    c.pass = c.residual <= tol;
    return;
  }
  throw UsageError("no check named " + id + " in suite " + suite_);
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks_) {
    if (std::isnan(c.residual)) return c.residual;
    m = std::max(m, c.residual);
  }
  return m;
}

const CheckRecord* VerificationReport::find_check(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Curve* VerificationReport::find_curve(const std::string& name) const {
  for (const auto& c : curves_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::body_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"residual", number_or_text(c.residual)},
                      {"tol", c.tol}, {"pass", c.pass}});
  }
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : curves_) {
    curves.push_back({{"name", c.name}, {"columns", c.columns}, {"rows", c.rows.size()}});
  }
  return {{"suite", suite_}, {"status", passed() ? "pass" : "fail"}, {"checks", checks},
          {"curves", curves}, {"env", env_}};
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j = body_json();
  j["elapsed_ms"] = elapsed_ms_;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "id,anchor,residual,tol,pass\n";
  for (const auto& c : checks_) {
    os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << format_double(c.residual) << ','
       << format_double(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace dunkl
