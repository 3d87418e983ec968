#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "phermion/errors.hpp"
#include "phermion/suite.hpp"

namespace {

void add_common(CLI::App* cmd, phermion::RunConfig& cfg) {
  cmd->add_option("--tolerance", cfg.tolerance,
                  "Scaled residual tolerance for every check")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed,
                  "Seed for the randomized sweeps (PHERMION_SEED overrides)")
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "Output format: table or json")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  phermion::RunConfig cfg;

  CLI::App app{
      "phermion-lab: finite-dimensional ladder algebras with indefinite "
      "metrics, checked numerically"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand(
      "verify-algebra",
      "Defining relations and metric classification for one species");
  add_common(verify, cfg);
  verify
      ->add_option("--species", cfg.species,
                   "fermion | phermion | abnormal-phermion | boson")
      ->capture_default_str();
  verify->add_option("--eta", cfg.eta_spec,
                     "identity | sigma3 | diag:<a,b,...> | file:<path>");
  verify->add_option("--truncation", cfg.truncation, "Boson levels 0..t")
      ->capture_default_str();

  CLI::App* osc = app.add_subcommand(
      "oscillator", "Graded oscillator: superalgebra, two-component form, "
                    "spectrum pairing, sign theorem");
  add_common(osc, cfg);
  osc->add_option("--kind", cfg.kind,
                  "boson-fermion | boson-phermion | boson-abnormal-phermion")
      ->capture_default_str();
  CLI::Option* e_opt = osc->add_option(
      "--E", cfg.E, "Gap scale; the sign must match the kind (default +1, "
                    "or -1 for boson-abnormal-phermion)");
  osc->add_option("--truncation", cfg.truncation, "Boson levels 0..t")
      ->capture_default_str();
  osc->add_option("--eta", cfg.eta_spec,
                  "Two-level metric (boson-phermion only)");

  CLI::App* multi = app.add_subcommand(
      "multi", "Multi-site system: site operators, pair operators, shifts");
  add_common(multi, cfg);
  multi->add_option("--ell", cfg.ell, "Number of sites, 2..12")
      ->capture_default_str();

  CLI::App* lie = app.add_subcommand(
      "lie", "The three-generator algebra built from one ladder pair");
  add_common(lie, cfg);
  lie->add_option("--epsilon", cfg.epsilon, "+1 -> su(2), -1 -> su(1,1)")
      ->capture_default_str();

  CLI::App* all =
      app.add_subcommand("all", "Every suite with per-command defaults");
  add_common(all, cfg);
  all->add_option("--truncation", cfg.truncation, "Boson levels 0..t")
      ->capture_default_str();
  all->add_option("--ell", cfg.ell, "Number of sites, 2..12")
      ->capture_default_str();
  all->add_option("--eta", cfg.eta_spec,
                  "Metric for the phermion-based suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (e_opt->count() > 0) cfg.e_explicit = true;

  if (const char* env_seed = std::getenv("PHERMION_SEED")) {
    try {
      const std::string text(env_seed);
      std::size_t used = 0;
      cfg.seed = std::stoull(text, &used, 0);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      std::cerr << "config error: PHERMION_SEED='" << env_seed
                << "' is not an unsigned integer\n";
      return 2;
    }
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    phermion::SuiteReport report;
    if (verify->parsed()) {
      report = phermion::run_verify_algebra(cfg);
    } else if (osc->parsed()) {
      report = phermion::run_oscillator(cfg);
    } else if (multi->parsed()) {
      report = phermion::run_multi(cfg);
    } else if (lie->parsed()) {
      report = phermion::run_lie(cfg);
    } else {
      report = phermion::run_all(cfg);
    }
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    report.document["wallTimeMs"] = wall;
    if (cfg.format == "json") {
      std::cout << report.document.dump(2) << "\n";
    } else {
      std::cout << report.table << "wall time: " << wall << " ms\n";
    }
    return report.pass ? 0 : 1;
  } catch (const phermion::AlgebraObstruction& e) {
    std::cerr << "obstruction: " << e.what() << "\n"
              << "unavoidable residual " << e.residual << " exhibited by "
              << e.demonstration << "\n"
              << "no two-level ladder pair with {c, c#} = 1 admits an "
                 "indefinite metric: the general nilpotent candidate gives "
                 "{sigma, sigma3 sigma^dag sigma3} = -(|u| - |v|)^2 1 <= 0, "
                 "never +1\n";
    return 1;
  } catch (const phermion::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const phermion::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
