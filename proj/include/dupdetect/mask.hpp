#pragma once

#include <Eigen/Dense>

namespace dupdetect {

/// Binary per-pixel map, rows = image height, cols = image width.
using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

inline std::size_t count_true(const Mask& m) {
  return static_cast<std::size_t>(m.count());
}

}  // namespace dupdetect
