#pragma once

#include <Eigen/Dense>

namespace dupdetect {

/// A single image plane: rows = image height, cols = image width,
/// intensities normalized to [0, 1].
using Plane = Eigen::MatrixXd;

/// Y coefficients of the RGB -> YUV conversion. They sum to 1, so the
/// luma plane of a valid image stays inside [0, 1].
inline constexpr double kLumaR = 0.299;
inline constexpr double kLumaG = 0.587;
inline constexpr double kLumaB = 0.114;

/// Three-channel intensity raster. All planes share one shape and hold
/// values in [0, 1].
struct RasterImage {
  Plane r, g, b;

  RasterImage() = default;
  RasterImage(Plane red, Plane green, Plane blue);

  Eigen::Index rows() const { return r.rows(); }
  Eigen::Index cols() const { return r.cols(); }

  static RasterImage constant(Eigen::Index rows, Eigen::Index cols,
                              double red, double green, double blue);
  static RasterImage zero(Eigen::Index rows, Eigen::Index cols) {
    return constant(rows, cols, 0.0, 0.0, 0.0);
  }

  /// Per-channel clamp to [0, 1].
  void clamp();
};

/// Throws std::invalid_argument if planes disagree in shape or any
/// intensity falls outside [0, 1].
void validate(const RasterImage& img);

/// Per-pixel Y = 0.299 R + 0.587 G + 0.114 B.
Plane rgb_to_luma(const RasterImage& img);

}  // namespace dupdetect
