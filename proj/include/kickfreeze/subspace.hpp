#ifndef KICKFREEZE_SUBSPACE_HPP
#define KICKFREEZE_SUBSPACE_HPP

// Exact two-level dynamics in the one-excitation subspace of two coupled
// modes, ordered basis {|1_a 0_b>, |0_a 1_b>}. hbar = 1, times in seconds,
// frequencies in rad/s.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kickfreeze/types.hpp"

namespace kickfreeze {

/// Pauli operators on the subspace, written in the mode basis:
///   sigma_x = |10><01| + |01><10|
///   sigma_y = i(|10><01| - |01><10|)
///   sigma_z = |10><10| - |01><01|
template <typename Real = double>
struct Pauli {
  static Matrix2c<Real> x() {
    Matrix2c<Real> m;
    m << 0, 1, 1, 0;
    return m;
  }
  static Matrix2c<Real> y() {
    const Complex<Real> i(0, 1);
    Matrix2c<Real> m;
    m << Real(0), i, -i, Real(0);
    return m;
  }
  static Matrix2c<Real> z() {
    Matrix2c<Real> m;
    m << 1, 0, 0, -1;
    return m;
  }
};

/// Normalized superposition amp10 |1_a 0_b> + amp01 |0_a 1_b>.
template <typename Real = double>
class SubspaceState {
 public:
  SubspaceState(Complex<Real> amp10, Complex<Real> amp01) : v_(amp10, amp01) { check(); }
  explicit SubspaceState(const Vector2c<Real>& v) : v_(v) { check(); }

  /// Rescales an arbitrary nonzero vector to unit norm.
  static SubspaceState normalized(const Vector2c<Real>& v) {
    const Real n = v.norm();
    if (!(n > Real(0)) || !std::isfinite(n)) {
      throw std::invalid_argument("SubspaceState: cannot normalize a zero or non-finite vector");
    }
    return SubspaceState(Vector2c<Real>(v / n));
  }

  static SubspaceState photon_in_a() { return SubspaceState(Real(1), Real(0)); }
  static SubspaceState photon_in_b() { return SubspaceState(Real(0), Real(1)); }

  Complex<Real> amp10() const { return v_(0); }
  Complex<Real> amp01() const { return v_(1); }
  const Vector2c<Real>& vector() const { return v_; }

  /// Rank-one density matrix |psi><psi|.
  Matrix2c<Real> projector() const { return v_ * v_.adjoint(); }

 private:
  void check() const {
    const Real dev = std::abs(v_.squaredNorm() - Real(1));
    if (!(dev <= Real(tolerance::physical))) {
      throw std::invalid_argument("SubspaceState: amplitudes are not normalized (|norm^2 - 1| = " +
                                  std::to_string(dev) + ")");
    }
  }

  Vector2c<Real> v_;
};

/// cos(theta0/2)|1_a 0_b> + e^{i phi0} sin(theta0/2)|0_a 1_b>.
template <typename Real = double>
SubspaceState<Real> make_initial_state(Real theta0, Real phi0) {
  if (!std::isfinite(theta0) || !std::isfinite(phi0)) {
    throw std::invalid_argument("make_initial_state: angles must be finite");
  }
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  theta0 = std::fmod(theta0, Real(2) * two_pi);  // theta0/2 has period 2*pi up to sign
  phi0 = std::fmod(phi0, two_pi);
  return SubspaceState<Real>(Complex<Real>(std::cos(theta0 / 2)),
                             std::polar(std::sin(theta0 / 2), phi0));
}

/**
 * H = (omega/2) (sin(theta)cos(phi) sigma_x + sin(theta)sin(phi) sigma_y + cos(theta) sigma_z)
 *
 * Requires omega >= 0, theta in [0, pi], phi in [0, 2 pi).
 */
template <typename Real = double>
class BlochHamiltonian {
 public:
  BlochHamiltonian(Real omega, Real theta, Real phi) : omega_(omega), theta_(theta), phi_(phi) {
    const Real pi = std::numbers::pi_v<Real>;
    if (!(omega >= 0) || !std::isfinite(omega)) {
      throw std::invalid_argument("BlochHamiltonian: omega must be finite and >= 0");
    }
    if (!(theta >= 0 && theta <= pi)) {
      throw std::invalid_argument("BlochHamiltonian: theta must lie in [0, pi]");
    }
    if (!(phi >= 0 && phi < 2 * pi)) {
      throw std::invalid_argument("BlochHamiltonian: phi must lie in [0, 2 pi)");
    }
  }

  Real omega() const { return omega_; }
  Real theta() const { return theta_; }
  Real phi() const { return phi_; }

  Eigen::Matrix<Real, 3, 1> axis() const {
    return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
  }

  /// n . sigma, built from the Pauli definitions above.
  Matrix2c<Real> axis_operator() const {
    const auto n = axis();
    return n(0) * Pauli<Real>::x() + n(1) * Pauli<Real>::y() + n(2) * Pauli<Real>::z();
  }

  Matrix2c<Real> matrix() const { return (omega_ / 2) * axis_operator(); }

 private:
  Real omega_;
  Real theta_;
  Real phi_;
};

/// Photon hopping between two resonant modes at rate g (> 0).
template <typename Real = double>
struct CoupledModeSystem {
  CoupledModeSystem(Real g_, Real omega_ = Real(0)) : g(g_), omega(omega_) {
    if (!(g_ > 0) || !std::isfinite(g_)) {
      throw std::invalid_argument("CoupledModeSystem: g must be finite and > 0");
    }
    if (!std::isfinite(omega_)) {
      throw std::invalid_argument("CoupledModeSystem: omega must be finite");
    }
  }
  Real g;
  Real omega;
};

/// 2x2 unitary acting on SubspaceState.
template <typename Real = double>
class Propagator2 {
 public:
  /// Accepts m if its unitarity residual is at most 1e-9.
  explicit Propagator2(const Matrix2c<Real>& m) : m_(m) {
    const Real r = unitarity_residual(m_);
    if (!(r <= Real(tolerance::unitarity_reject))) {
      throw std::domain_error("Propagator2: matrix is not unitary (residual " + std::to_string(r) +
                              ")");
    }
  }

  static Propagator2 identity() { return Propagator2(Matrix2c<Real>::Identity()); }

  const Matrix2c<Real>& matrix() const { return m_; }
  Complex<Real> operator()(int r, int c) const { return m_(r, c); }
  Propagator2 adjoint() const { return Propagator2(m_.adjoint()); }
  Complex<Real> determinant() const { return m_.determinant(); }

  friend Propagator2 operator*(const Propagator2& a, const Propagator2& b) {
    return Propagator2(a.m_ * b.m_);
  }

 private:
  Matrix2c<Real> m_;
};

/// exp(-i H t) = cos(omega t / 2) I - i sin(omega t / 2) (n . sigma). Negative t runs backwards.
template <typename Real>
Propagator2<Real> bloch_propagator(const BlochHamiltonian<Real>& h, Real t) {
  const Real half = h.omega() * t / 2;
  const Complex<Real> i(0, 1);
  return Propagator2<Real>(std::cos(half) * Matrix2c<Real>::Identity() -
                           i * std::sin(half) * h.axis_operator());
}

/**
 * Free evolution of the coupled modes on the one-excitation subspace:
 * cos(g t) I - i sin(g t) sigma_x.
 *
 * The common mode energy omega (a^+a + b^+b) only contributes the global
 * phase e^{-i omega t}; it is applied when include_global_phase is set.
 */
template <typename Real>
Propagator2<Real> coupled_mode_propagator(const CoupledModeSystem<Real>& sys, Real t,
                                          bool include_global_phase = false) {
  const Real gt = sys.g * t;
  const Complex<Real> c(std::cos(gt)), s(Real(0), -std::sin(gt));
  Matrix2c<Real> m;
  m << c, s, s, c;
  if (include_global_phase) m *= std::polar(Real(1), -sys.omega * t);
  return Propagator2<Real>(m);
}

/// Ideal instantaneous kick, diag(1, -1).
template <typename Real = double>
Propagator2<Real> sigma_z_kick() {
  return Propagator2<Real>(Pauli<Real>::z());
}

template <typename Real>
SubspaceState<Real> apply(const Propagator2<Real>& u, const SubspaceState<Real>& s) {
  return SubspaceState<Real>(Vector2c<Real>(u.matrix() * s.vector()));
}

}  // namespace kickfreeze

#endif  // KICKFREEZE_SUBSPACE_HPP
