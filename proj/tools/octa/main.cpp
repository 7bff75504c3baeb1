#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <octa/errors.hpp>
#include <octa/version.hpp>

#include "checks.hpp"
#include "fixtures.hpp"
#include "report.hpp"

int main(int argc, char** argv) {
  using namespace octa;
  using namespace octa::cli;

  CLI::App app{"numerical verification of the octonion 4-plane geometry library"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a check suite and report residuals");
  std::string suite;
  verify->add_option("suite", suite, "algebra | geometry | reduction | all")
      ->required()
      ->check(CLI::IsMember({"algebra", "geometry", "reduction", "all"}));
  long long trials = 1000;
  verify->add_option("--trials", trials, "base trial count (default 1000)")
      ->check(CLI::PositiveNumber);
  std::uint64_t seed = 42;
  verify->add_option("--seed", seed, "master seed (default 42)");
  std::vector<std::string> tol_args;
  verify->add_option("--tol", tol_args,
                     "override a check tolerance, name=value; the name matches a "
                     "full check id or its last dot component");
  std::string json_path;
  verify->add_option("--json", json_path, "also write the JSON report to this path");
  bool quiet = false;
  verify->add_flag("--quiet", quiet, "suppress the text report");
  int workers = 1;
  verify->add_option("--workers", workers, "worker threads for trial loops (default 1)")
      ->check(CLI::PositiveNumber);

  auto* dumpf = app.add_subcommand("dump-fixture", "print a pinned fixture as JSON");
  std::string fixture;
  dumpf->add_option("name", fixture, "example-plane | hframe | tricomplex-ije | sphere-hframe")
      ->required();

  auto* dumpt =
      app.add_subcommand("dump-table", "print the signed multiplication table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (dumpt->parsed()) {
    std::cout << table_csv();
    return 0;
  }

  if (dumpf->parsed()) {
    try {
      std::cout << fixture_json(fixture);
      return 0;
    } catch (const UnknownFixture& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  CheckContext ctx;
  ctx.seed = seed;
  ctx.trials = trials;
  ctx.workers = workers;
  ctx.suite = suite;
  for (const std::string& arg : tol_args) {
    const auto eq = arg.find('=');
    bool ok = eq != std::string::npos && eq > 0;
    double value = 0.0;
    if (ok) {
      try {
        std::size_t used = 0;
        value = std::stod(arg.substr(eq + 1), &used);
        ok = used == arg.size() - eq - 1 && value > 0.0;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      std::cerr << "error: --tol expects name=value with value > 0, got '" << arg << "'\n";
      return 2;
    }
    ctx.tol_overrides[arg.substr(0, eq)] = value;
  }

  const Report rep = run_suite(ctx);
  if (!quiet) std::cout << report_text(rep);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << report_json(rep);
  }
  return rep.overall_pass ? 0 : 1;
}
