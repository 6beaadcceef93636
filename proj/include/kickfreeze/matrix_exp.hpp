#ifndef KICKFREEZE_MATRIX_EXP_HPP
#define KICKFREEZE_MATRIX_EXP_HPP

#include <cmath>
#include <stdexcept>

#include "kickfreeze/types.hpp"

namespace kickfreeze {

/**
 * Generic propagator exp(-i h t) for a small Hermitian matrix.
 *
 * Truncated Taylor series on a scaled generator followed by repeated
 * squaring. It knows nothing about Pauli algebra or rotation angles, which
 * makes it the independent reference every closed-form propagator in the
 * library is checked against. The full-space pulse propagators are computed
 * only through this path.
 *
 * Throws std::invalid_argument when h is not Hermitian within 1e-12
 * (relative to max(1, |h|_max)).
 */
template <typename Derived>
typename Derived::PlainObject matrix_exp_oracle(const Eigen::MatrixBase<Derived>& h,
                                                typename Derived::RealScalar t) {
  using Plain = typename Derived::PlainObject;
  using Scalar = typename Derived::Scalar;
  using Real = typename Derived::RealScalar;

  if (h.rows() != h.cols()) {
    throw std::invalid_argument("matrix_exp_oracle: generator must be square");
  }
  const Real scale = std::max(Real(1), max_abs(h));
  if (hermiticity_residual(h) > Real(tolerance::construction) * scale) {
    throw std::invalid_argument("matrix_exp_oracle: generator is not Hermitian");
  }
  if (!std::isfinite(t)) {
    throw std::invalid_argument("matrix_exp_oracle: time must be finite");
  }

  const Plain generator = Scalar(0, -1) * t * h;
  const Real norm1 = generator.cwiseAbs().colwise().sum().maxCoeff();

  // Scale so the series argument has 1-norm at most 1/4.
  int squarings = 0;
  if (norm1 > Real(0.25)) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / Real(0.25))));
  }
  const Plain scaled = generator / std::ldexp(Real(1), squarings);

  Plain result = Plain::Identity(h.rows(), h.cols());
  Plain term = Plain::Identity(h.rows(), h.cols());
  for (int k = 1; k <= 40; ++k) {
    term = (term * scaled) / Real(k);
    result += term;
    if (max_abs(term) < std::numeric_limits<Real>::epsilon() * Real(1e-3)) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace kickfreeze

#endif  // KICKFREEZE_MATRIX_EXP_HPP
