#pragma once

namespace dupdetect {

/// Detector thresholds. Defaults follow the b = 16 working point:
/// t_2 = 2b, t_s = b + 2, t_n = b.
struct DetectorConfig {
  /// Side length of the square analysis blocks. Even, >= 8.
  int block_size = 16;
  /// Maximum Euclidean distance between two 9-element feature vectors
  /// for the blocks to count as a candidate pair (t_l, strict <).
  double feature_distance_threshold = 0.014;
  /// Minimum spatial separation between matched block origins in pixels
  /// (t_2, strict >).
  double min_separation = 32.0;
  /// Minimum number of candidate pairs voting for one shift vector
  /// (t_s, strict >).
  int shift_vote_threshold = 18;
  /// How many successors of each row of the sorted feature matrix are
  /// examined (t_n).
  int neighbor_window = 16;
  /// Keep the sign of shift vectors instead of taking componentwise
  /// absolute values. Off by default; mirror-symmetric displacements
  /// then land in distinct histogram bins.
  bool signed_shifts = false;

  /// Config for a non-default block size with the derived thresholds
  /// t_2 = 2b, t_s = b + 2, t_n = b.
  static DetectorConfig for_block_size(int b);

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

}  // namespace dupdetect
