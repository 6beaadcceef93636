#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "kickfreeze/fullspace.hpp"
#include "test_helpers.hpp"

using namespace kickfreeze;
using kickfreeze::testing::cplx;
using kickfreeze::testing::Draws;
using kickfreeze::testing::pi;

namespace {

double min_eigenvalue(const ModeState<double>& s) {
  Eigen::SelfAdjointEigenSolver<Matrix2c<double>> es(s.rho, Eigen::EigenvaluesOnly);
  return std::min(es.eigenvalues().minCoeff(), s.p00);
}

double purity(const ModeState<double>& s) { return (s.rho * s.rho).trace().real() + s.p00 * s.p00; }

}  // namespace

TEST_CASE("full_hamiltonian layout") {
  const auto h = full_hamiltonian(2.0, 5.0, true);
  CHECK(h(0, 1) == cplx(2));
  CHECK(h(1, 0) == cplx(2));
  CHECK(h(1, 2) == cplx(5));
  CHECK(h(2, 1) == cplx(5));
  CHECK(h(0, 2) == cplx(0));
  CHECK(h.diagonal().isZero());
  CHECK(full_hamiltonian(2.0, 5.0, false)(0, 1) == cplx(0));
  CHECK(hermiticity_residual(h) == 0);
}

TEST_CASE("decoupled atom reproduces the two-mode propagator") {
  const double g = 1.7;
  for (double t : {-1.0, 0.3, 2.5}) {
    const Matrix3c<double> u = matrix_exp_oracle(full_hamiltonian(g, 0.0, true), t);
    CHECK(max_abs(Matrix2c<double>(u.topLeftCorner<2, 2>()) -
                  coupled_mode_propagator(CoupledModeSystem<double>(g), t).matrix()) < 1e-12);
    CHECK(std::abs(u(2, 2) - cplx(1)) < 1e-15);
  }
}

TEST_CASE("Jaynes-Cummings block alone") {
  const double gamma = 4.0;
  SUBCASE("gamma tau = pi flips |0_a 1_b, g>") {
    const Matrix3c<double> u = matrix_exp_oracle(full_hamiltonian(0.0, gamma, false), pi / gamma);
    CHECK(std::abs(u(1, 1) + cplx(1)) < 1e-12);
    CHECK(std::abs(u(2, 1)) < 1e-12);
  }
  SUBCASE("|1_a 0_b, g> is untouched at every duration") {
    Draws draws(51);
    for (int i = 0; i < 50; ++i) {
      const Matrix3c<double> u =
          matrix_exp_oracle(full_hamiltonian(0.0, gamma, false), draws.uniform(0, 10));
      REQUIRE(std::abs(u(0, 0) - cplx(1)) < 1e-12);
      REQUIRE(std::abs(u(1, 0)) + std::abs(u(2, 0)) < 1e-12);
    }
  }
}

TEST_CASE("pulse_propagator") {
  const double g = 1.0, gamma = 50.0;

  SUBCASE("phase-flip pulse with frozen hopping is sigma_z on the modes") {
    const Matrix3c<double> u = pulse_propagator(g, PulseParams<double>::phase_flip(gamma, true));
    CHECK(max_abs(Matrix2c<double>(u.topLeftCorner<2, 2>()) - Pauli<double>::z()) < 1e-12);
    CHECK(std::abs(u(2, 2) + cplx(1)) < 1e-12);
    CHECK(unitarity_residual(u) < 1e-12);
  }
  SUBCASE("JC block rotates as cos(gamma tau) I - i sin(gamma tau) sigma_x") {
    Draws draws(52);
    for (int i = 0; i < 50; ++i) {
      const double tau = draws.uniform(0.001, 1);
      const Matrix3c<double> u = pulse_propagator(g, PulseParams<double>(gamma, tau, true));
      REQUIRE(std::abs(u(1, 1) - cplx(std::cos(gamma * tau))) < 1e-12);
      REQUIRE(std::abs(u(2, 2) - cplx(std::cos(gamma * tau))) < 1e-12);
      REQUIRE(std::abs(u(1, 2) - cplx(0, -std::sin(gamma * tau))) < 1e-12);
    }
    // gamma tau = 2 pi: back to the identity.
    const Matrix3c<double> full = pulse_propagator(g, PulseParams<double>(gamma, 2 * pi / gamma, true));
    CHECK(max_abs(full - Matrix3c<double>::Identity()) < 1e-12);
  }
  SUBCASE("hopping during the pulse spoils the kick, less so for faster pulses") {
    double previous = 1e9;
    for (double ratio : {10.0, 100.0, 1000.0}) {
      const Matrix3c<double> u = pulse_propagator(g, PulseParams<double>::phase_flip(ratio * g));
      Matrix3c<double> ideal = Matrix3c<double>::Zero();
      ideal.diagonal() << 1, -1, -1;
      const double deviation = max_abs(u - ideal);
      MESSAGE("gamma/g = " << ratio << ": max deviation from sigma_z (+) -1 = " << deviation);
      CHECK(deviation > 0);
      CHECK(deviation < previous);
      previous = deviation;
    }
  }
  CHECK_THROWS(PulseParams<double>(0.0, 1.0));
  CHECK_THROWS(PulseParams<double>(1.0, -1.0));
}

TEST_CASE("kick_via_atom") {
  Draws draws(53);
  const double g = 1.0;

  SUBCASE("ideal limit is sigma_z with no leakage") {
    for (int i = 0; i < 100; ++i) {
      const auto s = draws.state();
      const auto out = kick_via_atom(s, g, PulseParams<double>::phase_flip(30.0, true));
      const auto ideal = apply(sigma_z_kick<double>(), s);
      REQUIRE(trace_distance(out.state, ideal) <= 1e-12);
      REQUIRE(std::abs(out.state.p00) <= 1e-12);
      REQUIRE(purity(out.state) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("error shrinks monotonically as gamma/g doubles") {
    const auto bell = make_initial_state(pi / 2, 0.0);
    const auto ideal = apply(sigma_z_kick<double>(), bell);
    double previous = 1;
    for (double ratio = 100; ratio <= 100 * 1024; ratio *= 2) {
      const auto out = kick_via_atom(bell, g, PulseParams<double>::phase_flip(ratio * g));
      const double td = trace_distance(out.state, ideal);
      REQUIRE(td < previous);
      REQUIRE(std::abs(out.state.trace() - 1) <= 1e-12);
      REQUIRE(min_eigenvalue(out.state) >= -1e-12);
      previous = td;
    }
    CHECK(previous < 1e-6);
  }

  SUBCASE("post-selection keeps the ground-atom branch") {
    const auto s = make_initial_state(pi / 2, 0.0);
    const PulseParams<double> p(20.0, 0.05);  // not a pi pulse: the atom often leaves excited
    const auto traced = kick_via_atom(s, g, p, Disposal::trace);
    const auto kept = kick_via_atom(s, g, p, Disposal::postselect);
    CHECK(traced.ground_probability == doctest::Approx(kept.ground_probability));
    CHECK(kept.ground_probability == doctest::Approx(1 - traced.state.p00).epsilon(1e-12));
    CHECK(kept.state.p00 == 0);
    CHECK(kept.state.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs(Matrix2c<double>(kept.state.rho * kept.ground_probability - traced.state.rho)) <
          1e-12);
  }

  SUBCASE("full-space input needs a ground-state atom") {
    const auto s = draws.state();
    const auto fs = FullSpaceDensity<double>::with_ground_atom(s);
    const auto a = kick_via_atom(fs, g, PulseParams<double>::phase_flip(30.0, true));
    const auto b = kick_via_atom(s, g, PulseParams<double>::phase_flip(30.0, true));
    CHECK(trace_distance(a.state, b.state) < 1e-15);

    Matrix3c<double> excited = Matrix3c<double>::Zero();
    excited(2, 2) = 1;
    CHECK_THROWS_AS(kick_via_atom(FullSpaceDensity<double>(excited), g,
                                  PulseParams<double>::phase_flip(30.0)),
                    std::invalid_argument);
  }

  SUBCASE("invalid densities are refused") {
    Matrix3c<double> m = Matrix3c<double>::Identity();
    CHECK_THROWS(FullSpaceDensity<double>{m});
    m /= 3;
    m(0, 1) = 0.5;
    CHECK_THROWS(FullSpaceDensity<double>{m});
  }
}

TEST_CASE("finite_pulse_trajectory") {
  Draws draws(54);

  SUBCASE("frozen hopping reproduces the ideal sequence sample by sample") {
    for (int i = 0; i < 30; ++i) {
      const CoupledModeSystem<double> sys(draws.uniform(0.5, 5));
      const auto s0 = draws.state();
      const auto sched = uniform_schedule(draws.uniform(0.1, 10) / sys.g, draws.integer(0, 12));
      const auto ideal = evolve_kicked(s0, sched, sys, 4);
      const auto real = finite_pulse_trajectory(
          s0, sched, sys, PulseParams<double>::phase_flip(100 * sys.g, true), 4);
      REQUIRE(real.samples.size() == ideal.samples.size());
      for (std::size_t k = 0; k < real.samples.size(); ++k) {
        REQUIRE(real.samples[k].time == ideal.samples[k].time);
        REQUIRE(real.samples[k].kicks == ideal.samples[k].kicks);
        REQUIRE(fidelity(ideal.samples[k].state, real.samples[k].state.rho) >= 1 - 1e-10);
        REQUIRE(real.samples[k].state.p00 <= 1e-12);
      }
    }
  }

  SUBCASE("trace and positivity hold with hopping on") {
    const CoupledModeSystem<double> sys(1.0);
    const auto real = finite_pulse_trajectory(draws.state(), uniform_schedule(2.0, 8), sys,
                                              PulseParams<double>::phase_flip(10.0), 5);
    for (const auto& s : real.samples) {
      REQUIRE(std::abs(s.state.trace() - 1) <= 1e-10);
      REQUIRE(min_eigenvalue(s.state) >= -1e-10);
      REQUIRE(s.concurrence <= 0.5);
    }
    CHECK(real.pulse_time == doctest::Approx(8 * pi / 10.0));
  }

  SUBCASE("approximation improves monotonically with gamma/g") {
    const CoupledModeSystem<double> sys(1e3);
    const KickSchedule<double> fig2(0.3 / sys.g, {0.1 / sys.g, 0.2 / sys.g, 0.3 / sys.g});
    for (int i = 0; i < 20; ++i) {
      const auto s0 = draws.state();
      const auto ideal = evolve_kicked(s0, fig2, sys).final_state();
      double previous = 2;
      for (double ratio : {10.0, 100.0, 1000.0, 10000.0}) {
        const auto real =
            finite_pulse_trajectory(s0, fig2, sys, PulseParams<double>::phase_flip(ratio * sys.g));
        const double td = trace_distance(real.final_state(), ideal);
        REQUIRE(td < previous);
        previous = td;
      }
    }
  }

  SUBCASE("accumulated pulse error grows with the number of kicks") {
    const CoupledModeSystem<double> sys(1.0);
    const auto s0 = SubspaceState<double>::photon_in_a();
    const auto pulse = PulseParams<double>::phase_flip(100.0);
    double previous = 0;
    for (long n = 2; n <= 64; n *= 2) {
      const auto sched = uniform_schedule(pi / 2, n);
      const auto ideal = evolve_kicked(s0, sched, sys).final_state();
      const double td = trace_distance(finite_pulse_trajectory(s0, sched, sys, pulse).final_state(), ideal);
      MESSAGE("N = " << n << ": trace distance " << td);
      REQUIRE(td > previous);
      previous = td;
    }
  }

  SUBCASE("one kick at gamma/g = 1e3 keeps the ideal concurrence within 1e-2") {
    const CoupledModeSystem<double> sys(1e3);
    const auto s0 = make_initial_state(pi / 3, 0.5);
    const KickSchedule<double> sched(0.6 / sys.g, {0.3 / sys.g});
    const auto ideal = evolve_kicked(s0, sched, sys, 10);
    const auto real =
        finite_pulse_trajectory(s0, sched, sys, PulseParams<double>::phase_flip(1e3 * sys.g), 10);
    for (std::size_t k = 0; k < ideal.samples.size(); ++k) {
      REQUIRE(std::abs(real.samples[k].concurrence - concurrence_pure(ideal.samples[k].state)) <=
              1e-2);
    }
  }

  SUBCASE("post-selected runs stay normalized and report their success probability") {
    const CoupledModeSystem<double> sys(1.0);
    const auto real = finite_pulse_trajectory(draws.state(), uniform_schedule(1.0, 4), sys,
                                              PulseParams<double>::phase_flip(10.0), 2,
                                              Disposal::postselect);
    for (const auto& s : real.samples) REQUIRE(std::abs(s.state.trace() - 1) <= 1e-12);
    CHECK(real.postselection_probability < 1);
    CHECK(real.postselection_probability > 0.5);
  }
}
