#ifndef KICKFREEZE_SEQUENCER_HPP
#define KICKFREEZE_SEQUENCER_HPP

// Bang-bang sigma_z kicks interleaved with free hopping evolution.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kickfreeze/entanglement.hpp"
#include "kickfreeze/subspace.hpp"

namespace kickfreeze {

/// Total protocol duration and strictly increasing kick times in (0, total_time].
template <typename Real = double>
class KickSchedule {
 public:
  KickSchedule(Real total_time, std::vector<Real> kick_times)
      : total_time_(total_time), kick_times_(std::move(kick_times)) {
    if (!(total_time_ > 0) || !std::isfinite(total_time_)) {
      throw std::invalid_argument("KickSchedule: total time must be finite and > 0");
    }
    Real previous = 0;
    for (const Real k : kick_times_) {
      if (!(k > previous)) {
        throw std::invalid_argument("KickSchedule: kick times must be strictly increasing and > 0");
      }
      if (k > total_time_) {
        throw std::invalid_argument("KickSchedule: kick time beyond the total time");
      }
      previous = k;
    }
  }

  Real total_time() const { return total_time_; }
  const std::vector<Real>& kick_times() const { return kick_times_; }
  std::size_t size() const { return kick_times_.size(); }

 private:
  Real total_time_;
  std::vector<Real> kick_times_;
};

/// N kicks at k T / N, k = 1..N. N = 0 is free evolution.
template <typename Real>
KickSchedule<Real> uniform_schedule(Real total_time, long n_kicks) {
  if (n_kicks < 0) throw std::invalid_argument("uniform_schedule: negative kick count");
  if (!(total_time > 0)) throw std::invalid_argument("uniform_schedule: total time must be > 0");
  std::vector<Real> times;
  times.reserve(static_cast<std::size_t>(n_kicks));
  for (long k = 1; k < n_kicks; ++k) {
    times.push_back(total_time * Real(k) / Real(n_kicks));
  }
  if (n_kicks > 0) times.push_back(total_time);
  return KickSchedule<Real>(total_time, std::move(times));
}

template <typename Real = double>
struct TrajectorySample {
  Real time;
  SubspaceState<Real> state;
  std::size_t kicks;
};

template <typename Real = double>
struct Trajectory {
  std::vector<TrajectorySample<Real>> samples;

  const SubspaceState<Real>& final_state() const { return samples.back().state; }
};

/// Sampling grid shared by the ideal and finite-pulse evolutions. Each free
/// segment yields its endpoints plus (samples_per_segment - 1) interior
/// points via on_segment_point(segment_start, elapsed, kicks_so_far); each
/// kick then calls on_kick(kick_time, kicks_done), which records the
/// post-kick sample at the same time coordinate.
template <typename Real, typename SegmentFn, typename KickFn>
void walk_schedule(const KickSchedule<Real>& sched, std::size_t samples_per_segment,
                   SegmentFn&& on_segment_point, KickFn&& on_kick) {
  if (samples_per_segment == 0) {
    throw std::invalid_argument("samples_per_segment must be >= 1");
  }
  Real start = 0;
  const auto& kicks = sched.kick_times();
  for (std::size_t seg = 0; seg <= kicks.size(); ++seg) {
    const Real end = seg < kicks.size() ? kicks[seg] : sched.total_time();
    if (seg == kicks.size() && !kicks.empty() && kicks.back() == sched.total_time()) break;
    const std::size_t first = seg == 0 ? 0 : 1;  // the post-kick sample opens later segments
    for (std::size_t j = first; j <= samples_per_segment; ++j) {
      const Real elapsed =
          j == samples_per_segment ? end - start
                                   : (end - start) * Real(j) / Real(samples_per_segment);
      on_segment_point(start, elapsed, seg);
    }
    if (seg < kicks.size()) on_kick(end, seg + 1);
    start = end;
  }
}

/**
 * Evolves s0 through the schedule: free hopping U_S between kicks and an
 * instantaneous sigma_z at every kick time. The state at each sample is
 * U_S(t - t_segment_start) applied to the segment's initial state, so
 * interior sampling does not accumulate rounding.
 */
template <typename Real>
Trajectory<Real> evolve_kicked(const SubspaceState<Real>& s0, const KickSchedule<Real>& sched,
                               const CoupledModeSystem<Real>& sys,
                               std::size_t samples_per_segment = 1) {
  Trajectory<Real> traj;
  SubspaceState<Real> segment_start = s0;
  SubspaceState<Real> current = s0;
  const auto kick = sigma_z_kick<Real>();
  walk_schedule(
      sched, samples_per_segment,
      [&](Real start, Real elapsed, std::size_t seg) {
        current = apply(coupled_mode_propagator(sys, elapsed), segment_start);
        traj.samples.push_back({start + elapsed, current, seg});
      },
      [&](Real t, std::size_t kicks_done) {
        current = apply(kick, current);
        segment_start = current;
        traj.samples.push_back({t, current, kicks_done});
      });
  return traj;
}

/// Product [sigma_z U_S(T/N)]^N applied to s0, evaluated without sampling.
template <typename Real>
SubspaceState<Real> periodic_kick_product(const SubspaceState<Real>& s0, Real total_time,
                                          long n_kicks, const CoupledModeSystem<Real>& sys) {
  if (n_kicks <= 0) return apply(coupled_mode_propagator(sys, total_time), s0);
  const auto step = sigma_z_kick<Real>() * coupled_mode_propagator(sys, total_time / Real(n_kicks));
  SubspaceState<Real> s = s0;
  for (long k = 0; k < n_kicks; ++k) s = apply(step, s);
  return s;
}

/// 1 - |<psi(0)|psi(T)>| after an even number of periodic kicks.
template <typename Real>
Real echo_residual(const SubspaceState<Real>& s0, Real total_time, long n_kicks,
                   const CoupledModeSystem<Real>& sys) {
  if (n_kicks < 0 || n_kicks % 2 != 0) {
    throw std::invalid_argument("echo_residual: the echo identity needs an even kick count");
  }
  return Real(1) - fidelity(s0, periodic_kick_product(s0, total_time, n_kicks, sys));
}

/// |sigma_z U(t) sigma_z - U(-t)|_max. Vanishes for equatorial axes (theta = pi/2).
template <typename Real>
Real reversal_residual(const BlochHamiltonian<Real>& h, Real t) {
  const Matrix2c<Real> z = Pauli<Real>::z();
  return max_abs(z * bloch_propagator(h, t).matrix() * z - bloch_propagator(h, -t).matrix());
}

}  // namespace kickfreeze

#endif  // KICKFREEZE_SEQUENCER_HPP
