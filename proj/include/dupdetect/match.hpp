#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dupdetect/config.hpp"
#include "dupdetect/features.hpp"
#include "dupdetect/mask.hpp"
#include "dupdetect/raster.hpp"

namespace dupdetect {

/// Two blocks whose feature vectors lie closer than t_l. Origins are kept in
/// canonical order (a lexicographically before b).
struct CandidatePair {
  BlockOrigin a;
  BlockOrigin b;
  Eigen::Vector2i shift;  // componentwise |delta| (or signed, see config)
  double feature_distance = 0.0;
};

/// Shift vector -> every candidate pair that voted for it. Keyed on
/// (shift row, shift col) so iteration order is deterministic.
using ShiftHistogram = std::map<std::pair<int, int>, std::vector<CandidatePair>>;

struct ConfirmedShift {
  int shift_row = 0;
  int shift_col = 0;
  std::size_t votes = 0;
};

struct StageTimings {
  double features_ms = 0;
  double sort_ms = 0;
  double match_ms = 0;
  double vote_ms = 0;
  double mask_ms = 0;
  double total_ms = 0;
};

struct DetectionReport {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  DetectorConfig config;
  std::size_t block_count = 0;
  std::size_t candidate_pairs = 0;
  std::vector<ConfirmedShift> confirmed_shifts;
  std::size_t confirmed_pairs = 0;
  std::size_t mask_pixels = 0;
  StageTimings timings;

  bool forged() const { return confirmed_pairs > 0; }
};

/// JSON rendering of the report (dimensions, config echo, candidate and
/// confirmed counts, shift vectors with votes, mask pixel count, timings).
std::string to_json_string(const DetectionReport& report, int indent = 2);

/// Sorts rows of the feature matrix lexicographically by v1..v9, ties
/// broken by (origin row, origin col).
void lex_sort(std::vector<BlockRecord>& records);

/// Windowed neighbor scan over the sorted records: position k is compared
/// with positions k+1 .. k+t_n and a pair is emitted when the Euclidean
/// feature distance is strictly below t_l. The result is deduplicated by
/// unordered origin pair and sorted by (a, b).
std::vector<CandidatePair> find_candidates(const std::vector<BlockRecord>& sorted,
                                           const DetectorConfig& config);
std::vector<CandidatePair> find_candidates(const std::vector<BlockRecord>& sorted,
                                           const DetectorConfig& config, int workers);

/// Groups candidate pairs by their exact shift vector.
ShiftHistogram accumulate_shifts(const std::vector<CandidatePair>& pairs);

/// Keeps the pairs of every histogram bin whose vote count is strictly
/// greater than t_s and whose origin separation ||shift||_2 is strictly
/// greater than t_2.
std::vector<CandidatePair> confirm_regions(const ShiftHistogram& hist,
                                           const DetectorConfig& config);

/// Paints both b x b blocks of every confirmed pair.
Mask render_mask(const std::vector<CandidatePair>& confirmed,
                 const DetectorConfig& config, Eigen::Index rows,
                 Eigen::Index cols);

struct DetectionResult {
  Mask mask;
  DetectionReport report;
};

/// Full pipeline: features -> lexicographic sort -> windowed matching ->
/// shift voting -> separation filter -> mask.
DetectionResult detect(const RasterImage& img, const DetectorConfig& config = {});
DetectionResult detect(const RasterImage& img, const DetectorConfig& config,
                       int workers);

}  // namespace dupdetect
