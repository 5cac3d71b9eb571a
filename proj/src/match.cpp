#include "dupdetect/match.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "dupdetect/parallel.hpp"

namespace dupdetect {

namespace {

bool feature_less(const BlockRecord& lhs, const BlockRecord& rhs) {
  for (int k = 0; k < 9; ++k) {
    if (lhs.feature(k) < rhs.feature(k)) return true;
    if (lhs.feature(k) > rhs.feature(k)) return false;
  }
  return lhs.origin < rhs.origin;
}

CandidatePair make_pair(const BlockRecord& x, const BlockRecord& y,
                        double distance, bool signed_shifts) {
  const BlockRecord& lo = x.origin < y.origin ? x : y;
  const BlockRecord& hi = x.origin < y.origin ? y : x;
  CandidatePair p;
  p.a = lo.origin;
  p.b = hi.origin;
  p.feature_distance = distance;
  const int dr = hi.origin.row - lo.origin.row;
  const int dc = hi.origin.col - lo.origin.col;
  p.shift = signed_shifts ? Eigen::Vector2i(dr, dc)
                          : Eigen::Vector2i(std::abs(dr), std::abs(dc));
  return p;
}

double elapsed_ms(std::chrono::steady_clock::time_point from,
                  std::chrono::steady_clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

}  // namespace

void lex_sort(std::vector<BlockRecord>& records) {
  std::sort(records.begin(), records.end(), feature_less);
}

std::vector<CandidatePair> find_candidates(const std::vector<BlockRecord>& sorted,
                                           const DetectorConfig& config) {
  return find_candidates(sorted, config, worker_count());
}

std::vector<CandidatePair> find_candidates(const std::vector<BlockRecord>& sorted,
                                           const DetectorConfig& config,
                                           int workers) {
  config.validate();
  const Eigen::Index n = static_cast<Eigen::Index>(sorted.size());
  const Eigen::Index window = config.neighbor_window;
  const double tl = config.feature_distance_threshold;

  // Chunks partition the anchor index k; the scan of k reads up to
  // k + t_n, so chunk results never overlap and merge deterministically.
  const Eigen::Index chunks =
      std::min<Eigen::Index>(std::max(workers, 1), std::max<Eigen::Index>(n, 1));
  std::vector<std::vector<CandidatePair>> chunk_pairs(
      static_cast<std::size_t>(chunks));

  parallel_chunks(0, chunks, static_cast<int>(chunks), [&](Eigen::Index c0, Eigen::Index c1) {
    for (Eigen::Index c = c0; c < c1; ++c) {
      std::vector<CandidatePair>& out = chunk_pairs[static_cast<std::size_t>(c)];
      const Eigen::Index k_begin = n * c / chunks;
      const Eigen::Index k_end = n * (c + 1) / chunks;
      for (Eigen::Index k = k_begin; k < k_end; ++k) {
        const BlockRecord& anchor = sorted[static_cast<std::size_t>(k)];
        const Eigen::Index jmax = std::min(n - 1, k + window);
        for (Eigen::Index j = k + 1; j <= jmax; ++j) {
          const BlockRecord& other = sorted[static_cast<std::size_t>(j)];
          // v1 is the primary sort key, so it is non-decreasing in j; once
          // the v1 gap alone reaches t_l no later neighbor can match.
          if (other.feature(0) - anchor.feature(0) >= tl) break;
          const double distance = (anchor.feature - other.feature).norm();
          if (distance < tl) {
            out.push_back(make_pair(anchor, other, distance, config.signed_shifts));
          }
        }
      }
    }
  });

  std::vector<CandidatePair> pairs;
  for (const auto& chunk : chunk_pairs) {
    pairs.insert(pairs.end(), chunk.begin(), chunk.end());
  }

  // Deduplicate by unordered origin pair so no pair can vote twice.
  std::sort(pairs.begin(), pairs.end(), [](const CandidatePair& x, const CandidatePair& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const CandidatePair& x, const CandidatePair& y) {
                            return x.a == y.a && x.b == y.b;
                          }),
              pairs.end());
  return pairs;
}

ShiftHistogram accumulate_shifts(const std::vector<CandidatePair>& pairs) {
  ShiftHistogram hist;
  for (const CandidatePair& p : pairs) {
    hist[{p.shift.x(), p.shift.y()}].push_back(p);
  }
  return hist;
}

std::vector<CandidatePair> confirm_regions(const ShiftHistogram& hist,
                                           const DetectorConfig& config) {
  config.validate();
  std::vector<CandidatePair> confirmed;
  for (const auto& [shift, pairs] : hist) {
    if (pairs.size() <= static_cast<std::size_t>(config.shift_vote_threshold)) continue;
    const double separation = std::hypot(static_cast<double>(shift.first),
                                         static_cast<double>(shift.second));
    if (!(separation > config.min_separation)) continue;
    confirmed.insert(confirmed.end(), pairs.begin(), pairs.end());
  }
  return confirmed;
}

Mask render_mask(const std::vector<CandidatePair>& confirmed,
                 const DetectorConfig& config, Eigen::Index rows,
                 Eigen::Index cols) {
  const int b = config.block_size;
  Mask mask = Mask::Constant(rows, cols, false);
  for (const CandidatePair& p : confirmed) {
    if (p.a.row < 0 || p.a.col < 0 || p.b.row < 0 || p.b.col < 0 ||
        p.a.row + b > rows || p.a.col + b > cols || p.b.row + b > rows ||
        p.b.col + b > cols) {
      throw std::invalid_argument("render_mask: block origin out of range");
    }
    mask.block(p.a.row, p.a.col, b, b).setConstant(true);
    mask.block(p.b.row, p.b.col, b, b).setConstant(true);
  }
  return mask;
}

DetectionResult detect(const RasterImage& img, const DetectorConfig& config) {
  return detect(img, config, worker_count());
}

DetectionResult detect(const RasterImage& img, const DetectorConfig& config,
                       int workers) {
  using clock = std::chrono::steady_clock;
  config.validate();

  const auto t0 = clock::now();
  std::vector<BlockRecord> records = build_feature_matrix(img, config, workers);
  const auto t1 = clock::now();
  lex_sort(records);
  const auto t2 = clock::now();
  std::vector<CandidatePair> candidates = find_candidates(records, config, workers);
  const auto t3 = clock::now();
  const ShiftHistogram hist = accumulate_shifts(candidates);
  std::vector<CandidatePair> confirmed = confirm_regions(hist, config);
  const auto t4 = clock::now();
  Mask mask = render_mask(confirmed, config, img.rows(), img.cols());
  const auto t5 = clock::now();

  DetectionResult result;
  result.report.width = img.cols();
  result.report.height = img.rows();
  result.report.config = config;
  result.report.block_count = records.size();
  result.report.candidate_pairs = candidates.size();
  result.report.confirmed_pairs = confirmed.size();
  for (const auto& [shift, pairs] : hist) {
    if (pairs.size() <= static_cast<std::size_t>(config.shift_vote_threshold)) continue;
    const double separation = std::hypot(static_cast<double>(shift.first),
                                         static_cast<double>(shift.second));
    if (!(separation > config.min_separation)) continue;
    result.report.confirmed_shifts.push_back({shift.first, shift.second, pairs.size()});
  }
  result.report.mask_pixels = count_true(mask);
  result.report.timings.features_ms = elapsed_ms(t0, t1);
  result.report.timings.sort_ms = elapsed_ms(t1, t2);
  result.report.timings.match_ms = elapsed_ms(t2, t3);
  result.report.timings.vote_ms = elapsed_ms(t3, t4);
  result.report.timings.mask_ms = elapsed_ms(t4, t5);
  result.report.timings.total_ms = elapsed_ms(t0, t5);
  result.mask = std::move(mask);
  return result;
}

std::string to_json_string(const DetectionReport& report, int indent) {
  nlohmann::json j;
  j["image"] = {{"width", report.width}, {"height", report.height}};
  j["config"] = {{"block_size", report.config.block_size},
                 {"tl", report.config.feature_distance_threshold},
                 {"t2", report.config.min_separation},
                 {"ts", report.config.shift_vote_threshold},
                 {"tn", report.config.neighbor_window},
                 {"signed_shifts", report.config.signed_shifts}};
  j["blocks"] = report.block_count;
  j["candidate_pairs"] = report.candidate_pairs;
  j["confirmed_pairs"] = report.confirmed_pairs;
  j["forged"] = report.forged();
  nlohmann::json shifts = nlohmann::json::array();
  for (const ConfirmedShift& s : report.confirmed_shifts) {
    shifts.push_back({{"shift", {s.shift_row, s.shift_col}}, {"votes", s.votes}});
  }
  j["confirmed_shifts"] = shifts;
  j["mask_pixels"] = report.mask_pixels;
  j["timings_ms"] = {{"features", report.timings.features_ms},
                     {"sort", report.timings.sort_ms},
                     {"match", report.timings.match_ms},
                     {"vote", report.timings.vote_ms},
                     {"mask", report.timings.mask_ms},
                     {"total", report.timings.total_ms}};
  return j.dump(indent);
}

}  // namespace dupdetect
