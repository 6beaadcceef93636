// kickfreeze: reproduce and check sigma_z kick protocols on two coupled modes.
//
//   kickfreeze <subcommand> [--config <path>] [--out <path>] [--format csv|json]
//              [--convention paper|standard]
//
// Set KICKFREEZE_LOG=debug for progress messages on stderr.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kickfreeze/config.hpp"
#include "kickfreeze/dataset.hpp"
#include "kickfreeze/experiments.hpp"
#include "kickfreeze/verification.hpp"

namespace kf = kickfreeze;

namespace {

bool debug_logging() {
  const char* v = std::getenv("KICKFREEZE_LOG");
  return v != nullptr && std::string(v) == "debug";
}

void log_debug(const std::string& msg) {
  if (debug_logging()) std::cerr << "[kickfreeze] " << msg << '\n';
}

struct CommonOptions {
  std::string config;
  std::string out;
  std::string format;
  std::string convention;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--config", o.config, "Experiment config (JSON); defaults apply when omitted");
  sub->add_option("--out", o.out, "Output file; stdout when omitted");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--convention", o.convention, "Concurrence convention")
      ->check(CLI::IsMember({"paper", "standard"}));
}

kf::ExperimentConfig resolve(const CommonOptions& o) {
  kf::ExperimentConfig cfg = o.config.empty() ? kf::ExperimentConfig{} : kf::load_config(o.config);
  if (!o.out.empty()) cfg.output_path = o.out;
  if (!o.format.empty()) cfg.output_format = kf::parse_format(o.format);
  if (!o.convention.empty()) cfg.convention = kf::parse_convention(o.convention);
  log_debug("config: " + kf::config_to_json(cfg).dump());
  return cfg;
}

void write(const kf::Dataset& d, const kf::ExperimentConfig& cfg, const std::string& path) {
  if (path.empty()) {
    std::cout << (cfg.output_format == kf::OutputFormat::csv ? kf::to_csv(d) : kf::to_json_text(d));
    return;
  }
  kf::emit(d, cfg.output_format, path);
  log_debug("wrote " + path);
}

/// figure1 writes two files: <stem>_free<ext> and <stem>_kicked<ext>.
std::string suffixed(const std::string& path, const std::string& tag) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + "_" + tag + p.extension().string())).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bang-bang sigma_z kicks on two coupled modes sharing one photon"};
  app.require_subcommand(1);

  CommonOptions common;
  auto* simulate = app.add_subcommand("simulate", "Run the configured protocol");
  auto* figure1 = app.add_subcommand("figure1", "Free run vs. one kick at gt = 0.3");
  auto* figure2 = app.add_subcommand("figure2", "Kicks at gt = 0.1, 0.2, 0.3");
  auto* sweep = app.add_subcommand("sweep-n", "Concurrence deviation vs. number of kicks");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  auto* compare = app.add_subcommand("oracle-compare", "Ideal kicks vs. finite atom pulses");
  for (auto* sub : {simulate, figure1, figure2, sweep, verify, compare}) add_common(sub, common);

  std::vector<long> n_values = {2, 4, 8, 16, 32, 64};
  sweep->add_option("--n", n_values, "Even, increasing kick counts");
  std::vector<double> ratios = kf::default_gamma_ratios;
  compare->add_option("--ratios", ratios, "gamma / g values");
  std::uint64_t seed = 20240611;
  int draws = 200;
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--draws", draws, "Random draws per property")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const kf::ExperimentConfig cfg = resolve(common);
    const std::string& out = cfg.output_path;

    if (simulate->parsed()) {
      write(kf::simulate(cfg), cfg, out);
    } else if (figure1->parsed()) {
      const auto fig = kf::run_figure1(cfg);
      if (out.empty()) {
        std::cout << "# free\n";
        write(fig.free, cfg, "");
        std::cout << "# kicked\n";
        write(fig.kicked, cfg, "");
      } else {
        write(fig.free, cfg, suffixed(out, "free"));
        write(fig.kicked, cfg, suffixed(out, "kicked"));
      }
    } else if (figure2->parsed()) {
      write(kf::run_figure2(cfg), cfg, out);
    } else if (sweep->parsed()) {
      write(kf::sweep_n(cfg, n_values), cfg, out);
    } else if (compare->parsed()) {
      write(kf::oracle_compare(cfg, ratios), cfg, out);
    } else if (verify->parsed()) {
      const auto results = kf::run_verification(seed, draws);
      bool all = true;
      for (const auto& r : results) {
        std::printf("%-4s  %-42s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all = all && r.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const kf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
