#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cvdqs/commands.hpp"
#include "cvdqs/errors.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> shots;
  std::optional<int> jobs;
  std::optional<std::string> out_dir;
};

void attach_common(CLI::App* sub, CliOptions& options) {
  sub->add_option("--config", options.config_path, "Scenario config (JSON)")
      ->required();
  sub->add_option("--seed", options.seed, "Override run.seed");
  sub->add_option("--shots", options.shots, "Override run.shots");
  sub->add_option("--jobs", options.jobs, "Override run.jobs");
  sub->add_option("--out", options.out_dir, "Override run.out_dir");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Config-driven simulator for entangled RF sensor networks"};
  app.require_subcommand(1);

  using Command = void (*)(const cvdqs::ScenarioConfig&);
  struct Entry {
    const char* name;
    const char* help;
    Command fn;
  };
  const Entry entries[] = {
      {"trace", "Homodyne record of a single squeezed sensor",
       cvdqs::cmd_trace},
      {"task", "Entangled versus classical estimation of a network task",
       cvdqs::cmd_task},
      {"sweep", "Variance versus signed VBS transmissivity",
       cvdqs::cmd_sweep},
      {"scaling", "Optimal variance versus sensor count", cvdqs::cmd_scaling},
      {"infer", "Source characterization from measured squeezing levels",
       cvdqs::cmd_infer},
      {"synth", "Circuit synthesis for a task's optimal amplitudes",
       cvdqs::cmd_synth},
  };

  CliOptions options;
  Command command = nullptr;
  for (const Entry& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    attach_common(sub, options);
    sub->callback([&command, fn = entry.fn]() { command = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cvdqs::ScenarioConfig config = cvdqs::load_scenario(options.config_path);
    if (options.seed.has_value()) {
      config.run.seed = *options.seed;
    }
    if (options.shots.has_value()) {
      config.run.shots = *options.shots;
    }
    if (options.jobs.has_value()) {
      config.run.jobs = *options.jobs;
    }
    if (options.out_dir.has_value()) {
      config.run.out_dir = *options.out_dir;
    }
    command(config);
  } catch (const cvdqs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const cvdqs::NoSolutionError& e) {
    std::cerr << "no solution: " << e.what() << '\n';
    return 3;
  } catch (const cvdqs::DegenerateEstimatorError& e) {
    std::cerr << "degenerate estimator: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "out of domain: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
