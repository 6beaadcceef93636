#ifndef KICKFREEZE_CONFIG_HPP
#define KICKFREEZE_CONFIG_HPP

#include <filesystem>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kickfreeze/entanglement.hpp"
#include "kickfreeze/fullspace.hpp"
#include "kickfreeze/sequencer.hpp"

namespace kickfreeze {

/// Malformed or invalid configuration. The message names the offending
/// field, or carries the line and column of a syntax error.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

/// Coupling used when the config does not set one (rad/s).
inline constexpr double default_coupling = 1e3;
/// Pi-pulse duration of the Rydberg-atom kick (s); sets the default gamma = pi / tau.
inline constexpr double default_pi_pulse_time = 1e-5;

struct ExperimentConfig {
  double theta0 = 0;
  double phi0 = 0;
  double g = default_coupling;

  /// Seconds. Defaults to pi / (2 g).
  double total_time = std::numbers::pi / (2 * default_coupling);
  /// Exactly one of these describes the kicks.
  std::optional<long> n_kicks = 0;
  std::optional<std::vector<double>> kick_times;

  Convention convention = Convention::paper;

  bool oracle_enabled = false;
  double gamma = std::numbers::pi / default_pi_pulse_time;
  bool freeze_hopping = false;
  Disposal disposal = Disposal::trace;

  std::size_t points_per_segment = 50;

  std::string output_path;
  OutputFormat output_format = OutputFormat::csv;

  KickSchedule<double> schedule() const;
  CoupledModeSystem<double> system() const { return CoupledModeSystem<double>(g); }
  SubspaceState<double> initial_state() const { return make_initial_state(theta0, phi0); }
  PulseParams<double> pulse() const { return PulseParams<double>::phase_flip(gamma, freeze_hopping); }

  bool operator==(const ExperimentConfig&) const = default;
};

/**
 * Config schema (JSON; every key optional, unknown keys rejected):
 *
 *   initial_state: { theta0, phi0 }                      radians
 *   g:                                                   rad/s, > 0
 *   protocol: { total_time | total_gt,                   seconds | dimensionless g*T
 *               n_kicks | kick_times | kick_gt }         at most one of the three
 *   convention: "paper" | "standard"
 *   oracle: { enabled, gamma, freeze_hopping, disposal: "trace" | "postselect" }
 *   sampling: { points_per_segment }
 *   output: { path, format: "csv" | "json" }
 */
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical form (seconds, explicit defaults); config_from_json inverts it exactly.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

std::string to_string(Convention c);
std::string to_string(Disposal d);
std::string to_string(OutputFormat f);
Convention parse_convention(const std::string& s);
OutputFormat parse_format(const std::string& s);

}  // namespace kickfreeze

#endif  // KICKFREEZE_CONFIG_HPP
