#ifndef KICKFREEZE_TYPES_HPP
#define KICKFREEZE_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace kickfreeze {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Vector2c = Eigen::Matrix<Complex<Real>, 2, 1>;

template <typename Real>
using Matrix2c = Eigen::Matrix<Complex<Real>, 2, 2>;

template <typename Real>
using Matrix3c = Eigen::Matrix<Complex<Real>, 3, 3>;

template <typename Real>
using Vector3c = Eigen::Matrix<Complex<Real>, 3, 1>;

/// Numerical thresholds shared by every module (hbar = 1, seconds, rad/s).
namespace tolerance {
inline constexpr double construction = 1e-12;
inline constexpr double oracle = 1e-10;
inline constexpr double sequence = 1e-9;
/// Unitarity residual above which a matrix is refused as a propagator.
inline constexpr double unitarity_reject = 1e-9;
/// Slack accepted on user-supplied normalizations and density matrices.
inline constexpr double physical = 1e-10;
}  // namespace tolerance

/// Largest elementwise modulus, the norm used by every residual here.
template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
auto unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return max_abs(u.adjoint() * u - Plain::Identity(u.rows(), u.cols()));
}

template <typename Derived>
auto hermiticity_residual(const Eigen::MatrixBase<Derived>& h) {
  return max_abs(h - h.adjoint());
}

}  // namespace kickfreeze

#endif  // KICKFREEZE_TYPES_HPP
