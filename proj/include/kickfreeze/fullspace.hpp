#ifndef KICKFREEZE_FULLSPACE_HPP
#define KICKFREEZE_FULLSPACE_HPP

// Finite-duration kicks realized by a two-level atom crossing mode b.
//
// One excitation shared by mode a, mode b and the atom lives in the ordered
// basis {|1_a 0_b, g>, |0_a 1_b, g>, |0_a 0_b, e>}. The hopping term couples
// the first two, the Jaynes-Cummings exchange b^+|g><e| + b|e><g| couples
// the last two. The zero-excitation state |0_a 0_b, g> is decoupled from
// both, so the vacuum population p00 left behind by earlier atoms rides
// along untouched.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "kickfreeze/entanglement.hpp"
#include "kickfreeze/matrix_exp.hpp"
#include "kickfreeze/sequencer.hpp"

namespace kickfreeze {

template <typename Real>
Matrix3c<Real> full_hamiltonian(Real g, Real gamma, bool hopping_on) {
  Matrix3c<Real> h = Matrix3c<Real>::Zero();
  if (hopping_on) h(0, 1) = h(1, 0) = g;
  h(1, 2) = h(2, 1) = gamma;
  return h;
}

/// Density matrix of modes + one atom in the one-excitation sector.
template <typename Real = double>
class FullSpaceDensity {
 public:
  explicit FullSpaceDensity(const Matrix3c<Real>& rho) : rho_(rho) {
    const Real tol = Real(tolerance::physical);
    if (!(hermiticity_residual(rho_) <= tol)) {
      throw std::invalid_argument("FullSpaceDensity: not Hermitian");
    }
    if (!(std::abs(rho_.trace().real() - Real(1)) <= tol)) {
      throw std::invalid_argument("FullSpaceDensity: trace != 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix3c<Real>> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
      throw std::invalid_argument("FullSpaceDensity: negative eigenvalue");
    }
  }

  /// |psi>|g><psi|<g| for a subspace state and an atom in the ground state.
  static FullSpaceDensity with_ground_atom(const SubspaceState<Real>& s) {
    Matrix3c<Real> rho = Matrix3c<Real>::Zero();
    rho.template topLeftCorner<2, 2>() = s.projector();
    return FullSpaceDensity(rho);
  }

  const Matrix3c<Real>& matrix() const { return rho_; }
  Real excited_population() const { return rho_(2, 2).real(); }

 private:
  Matrix3c<Real> rho_;
};

/// How an atom is discarded after it leaves the cavity.
enum class Disposal { trace, postselect };

/// gamma: atom-mode coupling (rad/s); tau: transit time (s).
template <typename Real = double>
struct PulseParams {
  PulseParams(Real gamma_, Real tau_, bool freeze_hopping_ = false)
      : gamma(gamma_), tau(tau_), freeze_hopping(freeze_hopping_) {
    if (!(gamma_ > 0) || !std::isfinite(gamma_)) {
      throw std::invalid_argument("PulseParams: gamma must be finite and > 0");
    }
    if (!(tau_ > 0) || !std::isfinite(tau_)) {
      throw std::invalid_argument("PulseParams: tau must be finite and > 0");
    }
  }

  /// gamma tau = pi: the JC block {|01,g>, |00,e>} evolves as
  /// cos(gamma tau) I - i sin(gamma tau) sigma_x = -I, which flips the sign of
  /// |0_a 1_b, g> and leaves |1_a 0_b, g> alone.
  static PulseParams phase_flip(Real gamma_, bool freeze_hopping_ = false) {
    return PulseParams(gamma_, std::numbers::pi_v<Real> / gamma_, freeze_hopping_);
  }

  Real gamma;
  Real tau;
  bool freeze_hopping;
};

template <typename Real>
Matrix3c<Real> pulse_propagator(Real g, const PulseParams<Real>& p) {
  return matrix_exp_oracle(full_hamiltonian(g, p.gamma, !p.freeze_hopping), p.tau);
}

/// Reduced two-mode state: block over {|10>, |01>} and vacuum population.
template <typename Real = double>
struct ModeState {
  Matrix2c<Real> rho;
  Real p00 = 0;

  static ModeState pure(const SubspaceState<Real>& s) { return {s.projector(), Real(0)}; }

  Real trace() const { return rho.trace().real() + p00; }
};

template <typename Real = double>
struct KickOutcome {
  ModeState<Real> state;
  /// Probability of finding the outgoing atom in |g>.
  Real ground_probability;
};

/**
 * One atom, prepared in |g>, interacts with mode b for p.tau and is then
 * discarded. Disposal::trace keeps the photon the atom may carry off as
 * vacuum population; Disposal::postselect keeps only the atom-in-|g>
 * branch and renormalizes.
 */
template <typename Real>
KickOutcome<Real> kick_via_atom(const ModeState<Real>& in, Real g, const PulseParams<Real>& p,
                                Disposal disposal = Disposal::trace) {
  validate_mode_density(in.rho, in.p00);
  const Matrix3c<Real> u = pulse_propagator(g, p);
  Matrix3c<Real> rho3 = Matrix3c<Real>::Zero();
  rho3.template topLeftCorner<2, 2>() = in.rho;
  rho3 = (u * rho3 * u.adjoint()).eval();

  const Matrix2c<Real> ground_block = rho3.template topLeftCorner<2, 2>();
  const Real leaked = rho3(2, 2).real();
  const Real ground_probability = ground_block.trace().real() + in.p00;

  if (disposal == Disposal::trace) {
    return {{ground_block, in.p00 + leaked}, ground_probability};
  }
  if (!(ground_probability > 0)) {
    throw std::domain_error("kick_via_atom: post-selection on |g> has zero probability");
  }
  return {{ground_block / ground_probability, in.p00 / ground_probability}, ground_probability};
}

template <typename Real>
KickOutcome<Real> kick_via_atom(const SubspaceState<Real>& s, Real g, const PulseParams<Real>& p,
                                Disposal disposal = Disposal::trace) {
  return kick_via_atom(ModeState<Real>::pure(s), g, p, disposal);
}

/// Full-space input; the atom must start in |g> (no population or coherence on |0_a 0_b, e>).
template <typename Real>
KickOutcome<Real> kick_via_atom(const FullSpaceDensity<Real>& in, Real g,
                                const PulseParams<Real>& p, Disposal disposal = Disposal::trace) {
  const auto& rho = in.matrix();
  if (max_abs(rho.col(2)) > Real(tolerance::construction)) {
    throw std::invalid_argument("kick_via_atom: atom must be prepared in the ground state");
  }
  return kick_via_atom(ModeState<Real>{rho.template topLeftCorner<2, 2>(), Real(0)}, g, p,
                       disposal);
}

/// 1/2 |rho_a - rho_b|_1 for block-diagonal mode states.
template <typename Real>
Real trace_distance(const ModeState<Real>& a, const ModeState<Real>& b) {
  return trace_norm_half(Matrix2c<Real>(a.rho - b.rho)) + std::abs(a.p00 - b.p00) / 2;
}

template <typename Real>
Real trace_distance(const ModeState<Real>& a, const SubspaceState<Real>& b) {
  return trace_distance(a, ModeState<Real>::pure(b));
}

template <typename Real = double>
struct MixedSample {
  Real time;
  ModeState<Real> state;
  Real concurrence;
  std::size_t kicks;
};

template <typename Real = double>
struct MixedTrajectory {
  std::vector<MixedSample<Real>> samples;
  /// Physical time spent inside pulses; the sample clock excludes it.
  Real pulse_time = 0;
  /// Product of post-selection success probabilities (1 for Disposal::trace).
  Real postselection_probability = 1;

  const ModeState<Real>& final_state() const { return samples.back().state; }
};

/**
 * Kicked evolution with every kick realized by a fresh atom.
 *
 * Kicks sit at the schedule's kick times; each one inserts a pulse of
 * duration p.tau during which the hopping stays on unless
 * p.freeze_hopping. Sample times follow the protocol clock (the same grid
 * as evolve_kicked), so the two trajectories compare sample by sample.
 */
template <typename Real>
MixedTrajectory<Real> finite_pulse_trajectory(const SubspaceState<Real>& s0,
                                              const KickSchedule<Real>& sched,
                                              const CoupledModeSystem<Real>& sys,
                                              const PulseParams<Real>& p,
                                              std::size_t samples_per_segment = 1,
                                              Disposal disposal = Disposal::trace,
                                              Convention convention = Convention::paper) {
  MixedTrajectory<Real> traj;
  ModeState<Real> segment_start = ModeState<Real>::pure(s0);
  ModeState<Real> current = segment_start;

  auto record = [&](Real t, std::size_t kicks) {
    if (!(std::abs(current.trace() - Real(1)) <= Real(tolerance::sequence))) {
      throw std::runtime_error("finite_pulse_trajectory: trace leakage beyond 1e-9");
    }
    traj.samples.push_back({t, current, concurrence_mixed(current.rho, current.p00, convention),
                            kicks});
  };

  walk_schedule(
      sched, samples_per_segment,
      [&](Real start, Real elapsed, std::size_t seg) {
        const Matrix2c<Real> u = coupled_mode_propagator(sys, elapsed).matrix();
        current = {u * segment_start.rho * u.adjoint(), segment_start.p00};
        record(start + elapsed, seg);
      },
      [&](Real t, std::size_t kicks_done) {
        const auto outcome = kick_via_atom(current, sys.g, p, disposal);
        current = outcome.state;
        if (disposal == Disposal::postselect) {
          traj.postselection_probability *= outcome.ground_probability;
        }
        traj.pulse_time += p.tau;
        segment_start = current;
        record(t, kicks_done);
      });
  return traj;
}

}  // namespace kickfreeze

#endif  // KICKFREEZE_FULLSPACE_HPP
