#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "dupdetect/blocks.hpp"
#include "dupdetect/config.hpp"
#include "dupdetect/dct.hpp"
#include "dupdetect/raster.hpp"

namespace dupdetect {

/// Per-block feature vector. Component order:
///   0: CY(0,0)   1: CY(0,1)   2: CY(1,0)
///   3: CR(0,0)   4: CG(0,0)   5: CB(0,0)
///   6: mean(R)   7: mean(B)   8: mean(G)
/// The means are deliberately in R, B, G order; it only affects the
/// lexicographic sort order, never which blocks match.
using Feature = Eigen::Matrix<double, 9, 1>;

/// One row of the feature matrix A: the feature vector plus the block origin.
struct BlockRecord {
  Feature feature;
  BlockOrigin origin;
};

/// Feature vector of four co-located b x b blocks (R, G, B, Y).
///
/// Only four DCT coefficients enter the features, so they are computed as
/// direct basis projections instead of full transforms:
///   C(0,0) = sum / b,  C(0,1) = a0 * <col sums, c1>,  C(1,0) = a0 * <row sums, c1>
/// which agree with dct2 to roundoff.
template <typename DR, typename DG, typename DB, typename DY>
Feature block_features(const Eigen::MatrixBase<DR>& red,
                       const Eigen::MatrixBase<DG>& green,
                       const Eigen::MatrixBase<DB>& blue,
                       const Eigen::MatrixBase<DY>& luma,
                       const DctBasis& basis) {
  const Eigen::Index b = basis.size();
  if (red.rows() != b || red.cols() != b || green.rows() != b || green.cols() != b ||
      blue.rows() != b || blue.cols() != b || luma.rows() != b || luma.cols() != b) {
    throw std::invalid_argument("block_features: blocks must all be b x b");
  }

  const double bs = static_cast<double>(b);
  const double a0 = std::sqrt(1.0 / bs);
  const auto c1 = basis.row(1);

  Feature f;
  f(0) = luma.sum() / bs;
  f(1) = a0 * c1.dot(luma.colwise().sum());
  f(2) = a0 * c1.dot(luma.rowwise().sum().transpose());
  f(3) = red.sum() / bs;
  f(4) = green.sum() / bs;
  f(5) = blue.sum() / bs;
  f(6) = red.mean();
  f(7) = blue.mean();
  f(8) = green.mean();
  return f;
}

/// Builds the (M-b+1)(N-b+1) x 9 feature matrix as one record per
/// overlapping block origin, in row-major origin order.
std::vector<BlockRecord> build_feature_matrix(const RasterImage& img,
                                              const DetectorConfig& config);

/// Same, with an explicit worker count (exposed for determinism tests).
std::vector<BlockRecord> build_feature_matrix(const RasterImage& img,
                                              const DetectorConfig& config,
                                              int workers);

}  // namespace dupdetect
