#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dupdetect {

/// Orthonormal DCT-II basis for b x b blocks.
///
/// Row u of the basis matrix C holds a(u) * cos((2x+1) u pi / (2b)) with
/// a(0) = sqrt(1/b) and a(u>0) = sqrt(2/b), so C * C^T = I and the 2-D
/// transform of a block X is simply C * X * C^T.
template <typename Scalar>
class DctBasisT {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit DctBasisT(Eigen::Index size) : basis_(size, size) {
    if (size < 1) throw std::invalid_argument("DctBasis: size must be >= 1");
    const Scalar b = static_cast<Scalar>(size);
    const Scalar a0 = std::sqrt(Scalar(1) / b);
    const Scalar au = std::sqrt(Scalar(2) / b);
    for (Eigen::Index u = 0; u < size; ++u) {
      for (Eigen::Index x = 0; x < size; ++x) {
        const Scalar angle = static_cast<Scalar>(
            (2.0 * static_cast<double>(x) + 1.0) * static_cast<double>(u) *
            std::numbers::pi / (2.0 * static_cast<double>(size)));
        basis_(u, x) = (u == 0 ? a0 : au) * std::cos(angle);
      }
    }
  }

  Eigen::Index size() const { return basis_.rows(); }
  const Matrix& matrix() const { return basis_; }

  /// Basis row u as a row vector (handy for single-coefficient projections).
  auto row(Eigen::Index u) const { return basis_.row(u); }

 private:
  Matrix basis_;
};

using DctBasis = DctBasisT<double>;

/// Forward 2-D orthonormal DCT-II of a b x b block.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dct2(
    const DctBasisT<Scalar>& basis, const Eigen::MatrixBase<Derived>& block) {
  if (block.rows() != basis.size() || block.cols() != basis.size()) {
    throw std::invalid_argument("dct2: block shape does not match basis size");
  }
  return basis.matrix() * block.derived() * basis.matrix().transpose();
}

/// Inverse of dct2; recovers the spatial block from its coefficients.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> idct2(
    const DctBasisT<Scalar>& basis, const Eigen::MatrixBase<Derived>& coeffs) {
  if (coeffs.rows() != basis.size() || coeffs.cols() != basis.size()) {
    throw std::invalid_argument("idct2: coefficient shape does not match basis size");
  }
  return basis.matrix().transpose() * coeffs.derived() * basis.matrix();
}

}  // namespace dupdetect
