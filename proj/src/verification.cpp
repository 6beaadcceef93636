#include "kickfreeze/verification.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <random>

#include "kickfreeze/entanglement.hpp"
#include "kickfreeze/fullspace.hpp"
#include "kickfreeze/matrix_exp.hpp"
#include "kickfreeze/sequencer.hpp"
#include "kickfreeze/subspace.hpp"

namespace kickfreeze {

namespace {

constexpr double pi = std::numbers::pi;

CheckResult check(std::string name, double worst, double threshold, bool below = true) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %.3e (threshold %.1e)", below ? "max" : "min", worst,
                threshold);
  return {std::move(name), below ? worst <= threshold : worst > threshold, buf};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, int draws) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  auto random_hamiltonian = [&] {
    return BlochHamiltonian<double>(uniform(0, 10), uniform(0, pi), uniform(0, 2 * pi) * 0.999);
  };
  auto random_state = [&] { return make_initial_state(uniform(0, pi), uniform(0, 2 * pi)); };

  std::vector<CheckResult> out;

  double unitarity = 0, group = 0, oracle = 0;
  for (int i = 0; i < draws; ++i) {
    const auto h = random_hamiltonian();
    const double t1 = uniform(-5, 5), t2 = uniform(-5, 5);
    const auto u1 = bloch_propagator(h, t1);
    unitarity = std::max(unitarity, unitarity_residual(u1.matrix()));
    group = std::max(group, max_abs((u1 * bloch_propagator(h, t2)).matrix() -
                                    bloch_propagator(h, t1 + t2).matrix()));
    oracle = std::max(oracle, max_abs(u1.matrix() - matrix_exp_oracle(h.matrix(), t1)));
    const CoupledModeSystem<double> sys(uniform(0.1, 10));
    Matrix2c<double> hop = sys.g * Pauli<double>::x();
    oracle = std::max(oracle, max_abs(coupled_mode_propagator(sys, t2).matrix() -
                                      matrix_exp_oracle(hop, t2)));
  }
  out.push_back(check("unitarity", unitarity, tolerance::construction));
  out.push_back(check("group property", group, 1e-11));
  out.push_back(check("oracle equivalence", oracle, tolerance::oracle));

  double reversal = 0;
  for (int i = 0; i < draws; ++i) {
    const BlochHamiltonian<double> h(uniform(0, 10), pi / 2, uniform(0, 2 * pi) * 0.999);
    reversal = std::max(reversal, reversal_residual(h, uniform(-5, 5)));
  }
  out.push_back(check("reversal identity (equatorial axis)", reversal, tolerance::construction));
  out.push_back(check("reversal negative control (polar axis)",
                      reversal_residual(BlochHamiltonian<double>(2, 0, 0), pi / 4), 0.5,
                      /*below=*/false));

  double echo = 0, kick_invariance = 0;
  for (int i = 0; i < draws; ++i) {
    const auto s0 = random_state();
    const CoupledModeSystem<double> sys(uniform(0.1, 10));
    const long n = 2 * std::uniform_int_distribution<long>(1, 64)(rng);
    echo = std::max(echo, echo_residual(s0, uniform(0, 20) / sys.g, n, sys));
    kick_invariance = std::max(
        kick_invariance,
        std::abs(concurrence_pure(apply(sigma_z_kick<double>(), s0)) - concurrence_pure(s0)));
  }
  out.push_back(check("even-kick echo", echo, tolerance::sequence));
  out.push_back(check("kick preserves concurrence", kick_invariance, 0.0));

  double ideal_limit = 0;
  for (int i = 0; i < 20; ++i) {
    const auto s0 = random_state();
    const CoupledModeSystem<double> sys(1.0);
    const auto sched = uniform_schedule(uniform(0.1, 3), 2 * (i % 5) + 1);
    const auto ideal = evolve_kicked(s0, sched, sys, 4);
    const auto real =
        finite_pulse_trajectory(s0, sched, sys, PulseParams<double>::phase_flip(50.0, true), 4);
    for (std::size_t k = 0; k < ideal.samples.size(); ++k) {
      ideal_limit = std::max(ideal_limit, trace_distance(real.samples[k].state, ideal.samples[k].state));
    }
  }
  out.push_back(check("frozen-hopping pulse equals sigma_z", ideal_limit, tolerance::oracle));

  const CoupledModeSystem<double> sys(1.0);
  const KickSchedule<double> fig2(0.3, {0.1, 0.2, 0.3});
  const auto probe = make_initial_state(pi / 3, 0.4);
  const auto ideal_final = evolve_kicked(probe, fig2, sys).final_state();
  double previous = 2, worst_step = 0;
  bool monotone = true;
  for (const double ratio : {10.0, 100.0, 1000.0, 10000.0}) {
    const auto real = finite_pulse_trajectory(probe, fig2, sys, PulseParams<double>::phase_flip(ratio));
    const double td = trace_distance(real.final_state(), ideal_final);
    monotone = monotone && td < previous;
    worst_step = std::max(worst_step, td / previous);
    previous = td;
  }
  out.push_back({"pulse error decreases with gamma/g", monotone,
                 "largest successive ratio " + std::to_string(worst_step)});
  return out;
}

}  // namespace kickfreeze
