#pragma once

#include <cstddef>

#include "dupdetect/mask.hpp"

namespace dupdetect {

/// Pixel-set comparison of a detection mask D against ground truth C:
///   d = |C n D| / |C|      (detection rate, in [0, 1])
///   f = |D \ C| / |C|      (false-detection rate, >= 0, may exceed 1)
struct MetricsReport {
  double detection_rate = 0.0;
  double false_detection_rate = 0.0;
  std::size_t truth_pixels = 0;     // |C|
  std::size_t detected_pixels = 0;  // |D|
  std::size_t overlap_pixels = 0;   // |C n D|
  std::size_t false_pixels = 0;     // |D \ C|
};

/// Throws std::invalid_argument on dimension mismatch or empty ground truth
/// (|C| = 0 leaves both rates undefined).
MetricsReport compute_metrics(const Mask& detected, const Mask& truth);

}  // namespace dupdetect
