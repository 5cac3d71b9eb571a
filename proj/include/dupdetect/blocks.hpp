#pragma once

#include <Eigen/Dense>

#include <compare>
#include <stdexcept>
#include <vector>

namespace dupdetect {

/// Top-left corner of an overlapping block: row in [0, M-b], col in [0, N-b].
struct BlockOrigin {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const BlockOrigin&, const BlockOrigin&) = default;
};

/// One b x b window of a plane together with its origin.
struct Block {
  BlockOrigin origin;
  Eigen::MatrixXd values;
};

/// Number of overlapping b x b blocks in a rows x cols plane:
/// (rows - b + 1) * (cols - b + 1).
inline Eigen::Index overlapping_block_count(Eigen::Index rows, Eigen::Index cols,
                                            int block_size) {
  if (rows < block_size || cols < block_size) {
    throw std::invalid_argument("plane smaller than the block size");
  }
  return (rows - block_size + 1) * (cols - block_size + 1);
}

/// Materializes every overlapping b x b block of the plane in row-major
/// origin order. Block (i, j) pixel (x, y) equals plane(x + i, y + j).
///
/// Intended for inspection and tests; the detection pipeline reads block
/// windows as Eigen views instead of copying them out.
template <typename Derived>
std::vector<Block> extract_blocks(const Eigen::MatrixBase<Derived>& plane,
                                  int block_size) {
  const Eigen::Index rows = plane.rows();
  const Eigen::Index cols = plane.cols();
  const Eigen::Index count = overlapping_block_count(rows, cols, block_size);

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i + block_size <= rows; ++i) {
    for (Eigen::Index j = 0; j + block_size <= cols; ++j) {
      blocks.push_back({{static_cast<int>(i), static_cast<int>(j)},
                        plane.block(i, j, block_size, block_size)});
    }
  }
  return blocks;
}

}  // namespace dupdetect
