#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/suites.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kError = 3 };

struct CommonOptions {
  std::optional<std::string> preset;
  std::optional<std::string> config;
  std::optional<int> grid_n;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  auto* preset = cmd->add_option("--preset", o.preset, "root system preset, e.g. z2:1 or z2xz2:1,2");
  auto* config = cmd->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  preset->excludes(config);
  cmd->add_option("--grid-n", o.grid_n, "grid resolution (nodes per axis)");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
  cmd->add_option("--out", o.out, "output path (stdout when omitted)");
}

dunkl::SuiteConfig base_config(const CommonOptions& o) {
  dunkl::SuiteConfig cfg;
  if (o.config) {
    std::ifstream in(*o.config);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw dunkl::UsageError(*o.config + ": " + e.what());
    }
    cfg = dunkl::suite_config_from_json(doc);
  } else if (o.preset) {
    cfg.root_system = dunkl::root_system_from_preset(*o.preset);
  } else {
    throw dunkl::UsageError("one of --preset or --config is required");
  }
  if (o.grid_n) cfg.grid_n = *o.grid_n;
  if (o.seed) cfg.seed = *o.seed;
  if (!o.out.empty()) cfg.out = o.out;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dunkl::UsageError("cannot open " + path + " for writing");
  out << text;
}

int run(const dunkl::SuiteConfig& cfg) {
  const dunkl::VerificationReport rep = dunkl::run_suite(cfg);
  const std::string text = cfg.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
  write_output(cfg.out, text);
  int failed = 0;
  for (const auto& c : rep.checks()) {
    if (c.pass) continue;
    ++failed;
    std::cerr << "FAIL " << c.id << ": residual " << dunkl::format_double(c.residual) << " > tol "
              << dunkl::format_double(c.tol) << "\n";
  }
  std::cerr << rep.suite() << ": " << (rep.passed() ? "pass" : "fail") << " (" << rep.checks().size() << " checks, "
            << failed << " failed, max residual " << dunkl::format_double(rep.max_residual()) << ")\n";
  return rep.passed() ? kPass : kFail;
}

int plot(const dunkl::SuiteConfig& base, const std::string& quantity) {
  dunkl::SuiteConfig cfg = base;
  cfg.suite = dunkl::suite_for_quantity(quantity);
  cfg.tol.reset();
  cfg.tolerances.clear();
  const dunkl::VerificationReport rep = dunkl::run_suite(cfg);
  // Fails before anything is written when the quantity has no rows.
  const std::string csv = dunkl::emit_plotdata(rep, quantity);
  write_output(cfg.out, csv);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dunkl-kit: verification suites for rational Dunkl operators"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::optional<std::string> suite;
  std::optional<double> tol;
  std::optional<std::string> format;
  auto* run_cmd = app.add_subcommand("run", "run a verification suite and write its report");
  run_cmd->add_option("--suite", suite, "suite name (see 'list')");
  add_common(run_cmd, run_opts);
  run_cmd->add_option("--tol", tol, "replace every tolerance");
  run_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CommonOptions plot_opts;
  std::string quantity;
  auto* plot_cmd = app.add_subcommand("plot", "write plot data (CSV) for one quantity");
  plot_cmd->add_option("--quantity", quantity, "kernel-curve or approx-identity")->required();
  add_common(plot_cmd, plot_opts);

  auto* list_cmd = app.add_subcommand("list", "list suites and plot quantities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& s : dunkl::suite_names()) std::cout << "suite " << s << "\n";
      for (const auto& q : dunkl::plot_quantities()) std::cout << "quantity " << q << "\n";
      return kPass;
    }
    if (run_cmd->parsed()) {
      dunkl::SuiteConfig cfg = base_config(run_opts);
      if (suite) cfg.suite = *suite;
      if (cfg.suite.empty()) throw dunkl::UsageError("--suite is required");
      if (tol) cfg.tol = *tol;
      if (format) cfg.format = *format;
      return run(cfg);
    }
    return plot(base_config(plot_opts), quantity);
  } catch (const dunkl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const dunkl::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const dunkl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
