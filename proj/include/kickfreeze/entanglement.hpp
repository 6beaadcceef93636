#ifndef KICKFREEZE_ENTANGLEMENT_HPP
#define KICKFREEZE_ENTANGLEMENT_HPP

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "kickfreeze/subspace.hpp"

namespace kickfreeze {

/// paper: C = |alpha* beta| in [0, 1/2].  standard: Wootters, 2|alpha beta| in [0, 1].
enum class Convention { paper, standard };

template <typename Real = double>
Real concurrence_bound(Convention c) {
  return c == Convention::paper ? Real(0.5) : Real(1);
}

/// alpha(t), beta(t) of a state evolved freely under photon hopping.
template <typename Real = double>
struct AmplitudePair {
  AmplitudePair(Complex<Real> a, Complex<Real> b) : alpha(a), beta(b) {
    const Real dev = std::abs(std::norm(a) + std::norm(b) - Real(1));
    if (!(dev <= Real(tolerance::physical))) {
      throw std::invalid_argument("AmplitudePair: |alpha|^2 + |beta|^2 != 1");
    }
  }
  Complex<Real> alpha;
  Complex<Real> beta;

  SubspaceState<Real> state() const { return SubspaceState<Real>(alpha, beta); }
};

/// Closed-form amplitudes of U_S(t) applied to make_initial_state(theta0, phi0).
template <typename Real>
AmplitudePair<Real> amplitudes(Real theta0, Real phi0, Real g, Real t) {
  const Complex<Real> i(0, 1);
  const Real c0 = std::cos(theta0 / 2), s0 = std::sin(theta0 / 2);
  const Complex<Real> ephi = std::polar(Real(1), phi0);
  const Real cg = std::cos(g * t), sg = std::sin(g * t);
  return AmplitudePair<Real>(c0 * cg - i * ephi * s0 * sg, -i * c0 * sg + ephi * s0 * cg);
}

template <typename Real>
Real concurrence_pure(Complex<Real> alpha, Complex<Real> beta,
                      Convention convention = Convention::paper) {
  const Real c = std::abs(std::conj(alpha) * beta);
  return convention == Convention::paper ? c : 2 * c;
}

template <typename Real>
Real concurrence_pure(const SubspaceState<Real>& s, Convention convention = Convention::paper) {
  return concurrence_pure(s.amp10(), s.amp01(), convention);
}

template <typename Real>
Real concurrence_pure(const AmplitudePair<Real>& p, Convention convention = Convention::paper) {
  return concurrence_pure(p.alpha, p.beta, convention);
}

/**
 * Checks that rho (over {|10>, |01>}) together with a vacuum population p00
 * is a physical state: Hermitian, eigenvalues >= -1e-10, tr(rho) + p00 = 1.
 */
template <typename Real>
void validate_mode_density(const Matrix2c<Real>& rho, Real p00) {
  const Real tol = Real(tolerance::physical);
  if (!(hermiticity_residual(rho) <= tol)) {
    throw std::invalid_argument("mode density: rho is not Hermitian");
  }
  if (!(p00 >= -tol) || !std::isfinite(p00)) {
    throw std::invalid_argument("mode density: vacuum population is negative");
  }
  Eigen::SelfAdjointEigenSolver<Matrix2c<Real>> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("mode density: rho has a negative eigenvalue");
  }
  if (!(std::abs(rho.trace().real() + p00 - Real(1)) <= tol)) {
    throw std::invalid_argument("mode density: tr(rho) + p00 != 1");
  }
}

/**
 * Concurrence of a two-mode state supported on {|10>, |01>, |00>} with no
 * coherence to the vacuum. For such states the Wootters formula reduces to
 * 2|<10|rho|01>|; the paper convention halves it.
 */
template <typename Real>
Real concurrence_mixed(const Matrix2c<Real>& rho, Real p00,
                       Convention convention = Convention::paper) {
  validate_mode_density(rho, p00);
  const Real c = std::abs(rho(0, 1));
  return convention == Convention::paper ? c : 2 * c;
}

/// |<a|b>|, insensitive to global phase.
template <typename Real>
Real fidelity(const SubspaceState<Real>& a, const SubspaceState<Real>& b) {
  return std::min(Real(1), std::abs(a.vector().dot(b.vector())));
}

/// sqrt(<psi|rho|psi>), which reduces to |<psi|phi>| when rho = |phi><phi|.
template <typename Real>
Real fidelity(const SubspaceState<Real>& psi, const Matrix2c<Real>& rho) {
  const Real overlap = (psi.vector().adjoint() * rho * psi.vector())(0).real();
  return std::sqrt(std::clamp(overlap, Real(0), Real(1)));
}

/// Half the trace norm of a Hermitian difference.
template <typename Real>
Real trace_norm_half(const Matrix2c<Real>& diff) {
  Eigen::SelfAdjointEigenSolver<Matrix2c<Real>> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum() / 2;
}

}  // namespace kickfreeze

#endif  // KICKFREEZE_ENTANGLEMENT_HPP
