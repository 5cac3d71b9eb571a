#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dupdetect/mask.hpp"
#include "dupdetect/raster.hpp"

namespace dupdetect {

/// Post-processing applied to a copied patch before pasting or to the
/// whole tampered image afterwards.
enum class AttackKind { Jpeg, Blur, Awgn, Scale, Shift, Rotate };

/// One attack with its parameters. Only the fields of the active kind
/// are meaningful.
struct AttackOp {
  AttackKind kind = AttackKind::Jpeg;
  int quality = 100;      ///< jpeg: [1, 100]
  int radius = 1;         ///< blur: kernel (2r+1)^2, sigma = r
  double std_dev = 0.0;   ///< awgn: std on the 0..255 scale
  double factor = 1.0;    ///< scale: > 0
  int delta_row = 0;      ///< shift
  int delta_col = 0;      ///< shift
  double degrees = 0.0;   ///< rotate: |deg| <= 45

  static AttackOp jpeg(int quality);
  static AttackOp blur(int radius);
  static AttackOp awgn(double std_dev);
  static AttackOp scale(double factor);
  static AttackOp shift(int delta_row, int delta_col);
  static AttackOp rotate(double degrees);

  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;

  /// Textual form, e.g. "jpeg:90", "shift:1,0". parse() inverts it.
  std::string to_string() const;
  static AttackOp parse(const std::string& text);
};

/// Pixel rectangle, origin at (row, col), extent height x width.
struct SourceRect {
  int row = 0;
  int col = 0;
  int height = 0;
  int width = 0;

  bool contains(int r, int c) const {
    return r >= row && r < row + height && c >= col && c < col + width;
  }
};

/// Declarative description of one copy-move forgery: which rectangle is
/// copied, where it is pasted, and the attacks applied to the patch
/// (pre_paste, in order) and to the finished image (post_paste, in order).
struct ForgerySpec {
  SourceRect source;
  int dest_row = 0;
  int dest_col = 0;
  std::vector<AttackOp> pre_paste;
  std::vector<AttackOp> post_paste;

  /// Checks the source rect and the nominal pasted footprint against the
  /// image bounds and requires them to be disjoint. Throws
  /// std::invalid_argument on violation.
  void validate(Eigen::Index rows, Eigen::Index cols) const;

  /// Key/value document; parse()/load() invert it. Layout:
  ///   source = row,col,height,width
  ///   dest   = row,col
  ///   pre    = op op ...
  ///   post   = op op ...
  std::string serialize() const;
  static ForgerySpec parse(const std::string& text);
  static ForgerySpec load(const std::string& path);
  void save(const std::string& path) const;
};

/// Tampered image plus its ground truth: true pixels belong to the source
/// rectangle or to the pasted footprint.
struct ForgeryResult {
  RasterImage image;
  Mask truth;
};

/// Executes a forgery spec. The copied patch runs through pre_paste ops in
/// order (shift ops displace the paste origin instead of touching pixels),
/// is pasted with clipping to the image bounds, then post_paste ops run on
/// the whole image. All randomness comes from one generator seeded with
/// `seed`, consumed in op order. Throws if the pasted footprint overlaps
/// the source rectangle or a shift op pushes the paste out of bounds.
ForgeryResult apply_forgery(const RasterImage& img, const ForgerySpec& spec,
                            std::uint64_t seed);

/// Copies the rectangle out of the image. Throws on out-of-bounds rects.
RasterImage crop(const RasterImage& img, const SourceRect& rect);

/// Baseline JPEG encode at `quality` followed by decode. Dimensions are
/// preserved; pixel values pick up the codec's quantization error.
RasterImage jpeg_roundtrip(const RasterImage& img, int quality);

/// Convolution with a normalized (2*radius+1)^2 Gaussian kernel,
/// sigma = radius, clamp-to-edge borders.
Plane gaussian_blur(const Plane& plane, int radius);
RasterImage gaussian_blur(const RasterImage& img, int radius);

/// Adds zero-mean Gaussian noise with standard deviation std_dev/255
/// (std_dev is quoted on the 0..255 scale), then clamps to [0, 1].
/// std_dev = 0 leaves the image and the generator untouched.
RasterImage add_awgn(const RasterImage& img, double std_dev,
                     std::mt19937_64& rng);
RasterImage add_awgn(const RasterImage& img, double std_dev,
                     std::uint64_t seed);

/// Bilinear resample to round(dim * factor) per dimension, sampling at
/// pixel centers. factor = 1 reproduces the input bit for bit.
RasterImage scale_raster(const RasterImage& img, double factor);

/// Nearest-neighbor resample of a mask with the same geometry as
/// scale_raster, so a scaled image and its scaled truth stay aligned.
Mask scale_mask(const Mask& mask, double factor);

/// Rotation output: same shape as the input patch; `valid` is false where
/// the sampling point fell outside the source patch.
struct RotatedPatch {
  RasterImage image;
  Mask valid;
};

/// Rotates the patch about its center with bilinear interpolation.
/// Multiples of 90 degrees are resolved exactly. |degrees| <= 45 except
/// for exact right angles.
RotatedPatch rotate_patch(const RasterImage& patch, double degrees);
RotatedPatch rotate_patch(const RasterImage& patch, const Mask& valid_in,
                          double degrees);

/// Returns the spec with the paste origin displaced by (delta_row,
/// delta_col). Throws if the displaced nominal footprint leaves an
/// image of the given size.
ForgerySpec shift_paste(const ForgerySpec& spec, int delta_row, int delta_col,
                        Eigen::Index rows, Eigen::Index cols);

}  // namespace dupdetect
