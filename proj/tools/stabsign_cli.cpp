// Command-line front end: runs one family of checks (or all of them) and
// writes a JSON or CSV report. Exit status: 0 all checks pass, 1 a check
// failed, 2 usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabsign/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using stabsign::report::Command;
using stabsign::report::Format;
using stabsign::report::RunConfig;
using stabsign::report::Which;

std::uint64_t default_seed() {
  if (const char* env = std::getenv(stabsign::report::kSeedEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw stabsign::report::ConfigError(std::string(stabsign::report::kSeedEnvVar) +
                                          " is not an unsigned integer");
    }
  }
  return stabsign::report::kDefaultSeed;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
  sub->add_option("--alpha-grid", cfg.alpha_grid, "Comma-separated stability exponents")
      ->delimiter(',');
  sub->add_option("--trials", cfg.trials, "Monte Carlo trials per estimate");
  sub->add_option("--seed", cfg.seed, "Base seed (default $STABSIGN_SEED or 42)");
  sub->add_option("--tol", cfg.tol, "Quadrature tolerance");
  sub->add_option("--n", cfg.n_values, "Comma-separated n for n-fold checks")->delimiter(',');
  sub->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", cfg.output_path, "Write the report here instead of stdout");
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  sub->add_option("--ks-m", cfg.ks_m, "Sequence length per de Finetti replicate");
  sub->add_option("--ks-replicates", cfg.ks_replicates, "de Finetti replicates");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-checks of sign moments of stable vectors, paintbox partitions and "
               "the alpha-independent angular integrals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", stabsign::report::kToolVersion);

  RunConfig cfg;
  std::string format = "json";
  std::string which = "both";
  try {
    cfg.seed = default_seed();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  struct Sub {
    const char* name;
    Command command;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {"integrate", Command::Integrate, "Principal-value and L1 angular integrals"},
      {"mc-signs", Command::McSigns, "Monte Carlo sign moments of stable vectors"},
      {"paintbox", Command::Paintbox, "Exact and simulated paintbox checks"},
      {"dac-check", Command::DacCheck, "Divide-and-color sign-vector law"},
      {"report", Command::Report, "Everything above"},
  };
  std::vector<CLI::App*> apps;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, cfg, format);
    if (s.command == Command::Integrate) {
      sub->add_option("--which", which, "I1, I2 or both")
          ->check(CLI::IsMember({"I1", "I2", "both"}));
    }
    apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (apps[i]->parsed()) cfg.command = subs[i].command;
  }
  cfg.output_format = format == "csv" ? Format::Csv : Format::Json;
  cfg.which = which == "I1" ? Which::I1 : which == "I2" ? Which::I2 : Which::Both;
  if (cfg.command == Command::Integrate && apps[0]->count("--alpha-grid") == 0) {
    cfg.alpha_grid = {0.25, 0.5, 0.75, 1, 1.25, 1.5, 1.75, 1.9, 2, 2.5, 3, 4};
  }

  stabsign::report::Report rep;
  try {
    rep = stabsign::report::run(cfg);
  } catch (const stabsign::report::ConfigError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitFail;
  }

  const std::string text = stabsign::report::render(rep);
  if (cfg.output_path) {
    std::ofstream out(*cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << *cfg.output_path << '\n';
      return kExitUsage;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return rep.pass ? 0 : kExitFail;
}
