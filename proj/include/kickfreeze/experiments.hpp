#ifndef KICKFREEZE_EXPERIMENTS_HPP
#define KICKFREEZE_EXPERIMENTS_HPP

#include <vector>

#include "kickfreeze/config.hpp"
#include "kickfreeze/dataset.hpp"
#include "kickfreeze/fullspace.hpp"
#include "kickfreeze/sequencer.hpp"

namespace kickfreeze {

Dataset trajectory_dataset(const Trajectory<double>& traj, const SubspaceState<double>& s0,
                           double g, Convention convention);
Dataset trajectory_dataset(const MixedTrajectory<double>& traj, const SubspaceState<double>& s0,
                           double g);

/// The configured protocol, with ideal kicks or, if the oracle is enabled, atom pulses.
Dataset simulate(const ExperimentConfig& cfg);

struct Figure1Data {
  Dataset free;
  Dataset kicked;
};

/// gt in [0, 0.6]: free evolution, and a single kick at gt = 0.3.
Figure1Data run_figure1(const ExperimentConfig& cfg);

/// gt in [0, 0.3] with kicks at gt = 0.1, 0.2, 0.3.
Dataset run_figure2(const ExperimentConfig& cfg);

/// Columns n, gT, deviation: max_t |C(t) - C(0)| under N uniform kicks over
/// the configured total time. n_values must be even and strictly increasing.
Dataset sweep_n(const ExperimentConfig& cfg, const std::vector<long>& n_values);

inline const std::vector<double> default_gamma_ratios = {10, 100, 1000, 10000};

/// Ideal kicks versus atom pulses on the configured schedule, one row per gamma / g.
Dataset oracle_compare(const ExperimentConfig& cfg, const std::vector<double>& gamma_ratios);

}  // namespace kickfreeze

#endif  // KICKFREEZE_EXPERIMENTS_HPP
