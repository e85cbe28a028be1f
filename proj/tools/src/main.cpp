#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fkfront_app/commands.hpp"
#include "fkfront_app/config.hpp"

namespace {

constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

struct Options {
  std::string config;
  std::string out = "out";
  std::optional<std::size_t> workers;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fronts of the Fisher-KPP equation with diffusion a(x) = x^2 + eps"};
  app.require_subcommand(1);

  Options opts;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"simulate", "run the solver; write trajectory and front path"},
      {"compare-sfa", "numerical front against the soft-front prediction"},
      {"trap-sweep", "trapping time over an epsilon sweep with power-law fits"},
      {"eigen", "Neumann eigenpairs of (a phi')' = lambda phi"},
      {"wkb", "characteristic fans of the phase equation"},
      {"average", "domain average against its closed-form prediction"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opts.config, "config file (INI sections)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out, "output directory")->capture_default_str();
    sub->add_option("--workers", opts.workers, "concurrent simulations for trap-sweep")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  fkfront::app::ExperimentConfig config;
  try {
    config = fkfront::app::load_config(opts.config);
    if (opts.workers) config.sweep.workers = *opts.workers;
  } catch (const fkfront::app::ConfigError& e) {
    std::cerr << "fkfront: config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    const auto output = fkfront::app::run_command(command, config);
    for (const auto& w : output.warnings()) std::cerr << "fkfront: warning: " << w << '\n';
    output.commit(opts.out);
    for (const auto& f : output.files()) std::cout << (std::filesystem::path(opts.out) / f.name).string() << '\n';
  } catch (const fkfront::app::ConfigError& e) {
    std::cerr << "fkfront: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "fkfront: " << command << " failed: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
