#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/suites.hpp"

using namespace dunkl;

namespace {

SuiteConfig config_for(const std::string& suite, const std::string& preset) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.root_system = root_system_from_preset(preset);
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  SuiteConfig cfg = config_for("kernel", "z2:1");
  CHECK_NOTHROW(cfg.validate());
  cfg.suite = "nope";
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = config_for("kernel", "z2:1");
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.tol.reset();
  cfg.format = "xml";
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.format = "csv";
  cfg.grid_n = 8;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  CHECK_THROWS_AS(run_suite(config_for("unknown", "z2:1")), UsageError);
  CHECK(suite_names().back() == "all");
}

TEST_CASE("config from JSON") {
  const auto doc = nlohmann::json::parse(R"({"suite": "kernel", "preset": "z2xz2:1,2", "grid_n": 129,
                                             "tol": 1e-3, "seed": 7, "format": "csv",
                                             "tolerances": {"kernel.bound": 1e-9}})");
  const SuiteConfig cfg = suite_config_from_json(doc);
  CHECK(cfg.suite == "kernel");
  CHECK(cfg.root_system.dimension() == 2);
  CHECK(cfg.grid_n == 129);
  CHECK(*cfg.tol == 1e-3);
  CHECK(cfg.seed == 7);
  CHECK(cfg.format == "csv");
  CHECK(cfg.tolerances.at("kernel.bound") == 1e-9);

  const auto inline_rs = nlohmann::json::parse(
      R"({"suite": "transmutation", "root_system": {"dimension": 1, "positive_roots": [["1"]], "multiplicities": ["3/2"]}})");
  CHECK(suite_config_from_json(inline_rs).root_system.gamma() == Rational(3, 2));
  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(R"({"grid_n": "many"})")), UsageError);
  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(R"([1, 2])")), UsageError);
  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(
                      R"({"preset": "z2:1", "root_system": {"dimension": 1, "positive_roots": [[1]], "multiplicities": [1]}})")),
                  UsageError);
}

TEST_CASE("exact suites report zero residuals") {
  for (const char* preset : {"z2:1/2", "z2:7/3", "z2xz2:1,2", "b2:1,2"}) {
    const VerificationReport rep = run_suite(config_for("transmutation", preset));
    CHECK(rep.passed());
    CHECK(rep.max_residual() == 0.0);
    CHECK(rep.env().at("root_system") == preset);
  }
}

TEST_CASE("tolerance overrides and exit contract") {
  SuiteConfig cfg = config_for("kernel", "z2:1");
  cfg.tol = 1e-30;
  const VerificationReport strict = run_suite(cfg);
  CHECK_FALSE(strict.passed());
  // Exact zero residuals still pass any positive tolerance.
  CHECK(strict.find_check("kernel.origin")->pass);

  cfg.tol.reset();
  cfg.tolerances = {{"kernel.series", 1e-30}};
  const VerificationReport one = run_suite(cfg);
  CHECK_FALSE(one.find_check("kernel.series")->pass);
  CHECK(one.find_check("kernel.bound")->pass);
  cfg.tolerances = {{"kernel.nothing", 1.0}};
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
}

TEST_CASE("unsupported root systems") {
  CHECK_THROWS_AS(run_suite(config_for("inversion", "z2xz2:1,2")), UnsupportedCase);
  CHECK_THROWS_AS(run_suite(config_for("transform", "b2:1,1")), UnsupportedCase);
  const VerificationReport all = run_suite(config_for("all", "b2:1,1"));
  CHECK(all.passed());
  CHECK(all.env().at("skipped").size() == 7);
}

TEST_CASE("plot data") {
  const VerificationReport kernel = run_suite(config_for("kernel", "z2:1"));
  const std::string csv = emit_plotdata(kernel, "kernel-curve");
  CHECK(csv.rfind("x,re,im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 202);
  CHECK_THROWS_AS(emit_plotdata(kernel, "approx-identity"), UsageError);
  CHECK_THROWS_AS(emit_plotdata(kernel, "spectrum"), UsageError);
  CHECK(suite_for_quantity("approx-identity") == "approx-identity");

  const VerificationReport approx = run_suite(config_for("approx-identity", "z2:1"));
  const Curve* c = approx.find_curve("approx-identity");
  REQUIRE(c != nullptr);
  CHECK(c->rows.size() == 4);
  CHECK(c->columns == std::vector<std::string>{"eps", "residual", "ratio_M"});
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SuiteConfig cfg = config_for("kernel", "z2xz2:1,2");
  cfg.seed = 99;
  const std::string a = run_suite(cfg).body_json().dump();
  const std::string b = run_suite(cfg).body_json().dump();
  CHECK(a == b);
  cfg.seed = 100;
  const VerificationReport other = run_suite(cfg);
  CHECK(other.passed());
  CHECK(other.body_json().dump() != a);
  CHECK(other.env().at("seed") == 100);
}
