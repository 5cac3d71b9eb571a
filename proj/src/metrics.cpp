#include "dupdetect/metrics.hpp"

#include <stdexcept>

namespace dupdetect {

MetricsReport compute_metrics(const Mask& detected, const Mask& truth) {
  if (detected.rows() != truth.rows() || detected.cols() != truth.cols()) {
    throw std::invalid_argument("compute_metrics: mask dimensions differ");
  }
  MetricsReport m;
  m.truth_pixels = count_true(truth);
  if (m.truth_pixels == 0) {
    throw std::invalid_argument("compute_metrics: ground truth has no tampered pixels");
  }
  m.detected_pixels = count_true(detected);
  m.overlap_pixels = count_true(detected && truth);
  m.false_pixels = m.detected_pixels - m.overlap_pixels;
  m.detection_rate = static_cast<double>(m.overlap_pixels) /
                     static_cast<double>(m.truth_pixels);
  m.false_detection_rate = static_cast<double>(m.false_pixels) /
                           static_cast<double>(m.truth_pixels);
  return m;
}

}  // namespace dupdetect
