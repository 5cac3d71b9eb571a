#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "dupdetect/match.hpp"
#include "dupdetect/synth.hpp"

using namespace dupdetect;

namespace {

BlockRecord record(double v1, int row, int col) {
  BlockRecord rec;
  rec.feature = Feature::Zero();
  rec.feature(0) = v1;
  rec.origin = {row, col};
  return rec;
}

BlockRecord record(const Feature& f, int row, int col) {
  return BlockRecord{f, {row, col}};
}

// All-pairs reference matcher: every unordered origin pair with feature
// distance strictly below t_l, canonicalized and sorted like the library.
std::vector<CandidatePair> brute_force_candidates(const std::vector<BlockRecord>& records,
                                                  const DetectorConfig& config) {
  std::vector<CandidatePair> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const double dist = (records[i].feature - records[j].feature).norm();
      if (!(dist < config.feature_distance_threshold)) continue;
      const BlockRecord& lo = records[i].origin < records[j].origin ? records[i] : records[j];
      const BlockRecord& hi = records[i].origin < records[j].origin ? records[j] : records[i];
      CandidatePair p;
      p.a = lo.origin;
      p.b = hi.origin;
      p.feature_distance = dist;
      const int dr = hi.origin.row - lo.origin.row;
      const int dc = hi.origin.col - lo.origin.col;
      p.shift = config.signed_shifts ? Eigen::Vector2i(dr, dc)
                                     : Eigen::Vector2i(std::abs(dr), std::abs(dc));
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidatePair& x, const CandidatePair& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

std::set<std::pair<BlockOrigin, BlockOrigin>> origin_pairs(const std::vector<CandidatePair>& pairs) {
  std::set<std::pair<BlockOrigin, BlockOrigin>> keys;
  for (const CandidatePair& p : pairs) keys.emplace(p.a, p.b);
  return keys;
}

RasterImage uniform_noise_image(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  RasterImage img = RasterImage::zero(rows, cols);
  for (Plane* p : {&img.r, &img.g, &img.b}) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) (*p)(r, c) = uni(rng);
    }
  }
  return img;
}

void copy_region(RasterImage& img, int sr, int sc, int h, int w, int dr, int dc) {
  for (Plane* p : {&img.r, &img.g, &img.b}) {
    p->block(dr, dc, h, w) = p->block(sr, sc, h, w).eval();
  }
}

}  // namespace

TEST_CASE("lex_sort orders by feature components in sequence") {
  Feature base = Feature::Zero();
  std::vector<BlockRecord> records;
  Feature f1 = base, f2 = base, f3 = base;
  f1(0) = 1.0;
  f2(0) = 1.0;
  f2(8) = -0.5;  // ties on v1..v8 broken by the last component
  f3(0) = 0.5;
  records.push_back(record(f1, 0, 0));
  records.push_back(record(f2, 1, 1));
  records.push_back(record(f3, 2, 2));
  lex_sort(records);
  CHECK(records[0].origin == BlockOrigin{2, 2});  // smallest v1
  CHECK(records[1].origin == BlockOrigin{1, 1});  // v2..v8 equal, v9 smaller
  CHECK(records[2].origin == BlockOrigin{0, 0});
}

TEST_CASE("lex_sort breaks full feature ties by origin") {
  std::vector<BlockRecord> records;
  records.push_back(record(0.5, 3, 2));
  records.push_back(record(0.5, 1, 5));
  records.push_back(record(0.5, 1, 4));
  lex_sort(records);
  CHECK(records[0].origin == BlockOrigin{1, 4});
  CHECK(records[1].origin == BlockOrigin{1, 5});
  CHECK(records[2].origin == BlockOrigin{3, 2});
}

TEST_CASE("lex_sort is deterministic under shuffling and idempotent") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<BlockRecord> records;
  for (int i = 0; i < 200; ++i) {
    Feature f;
    for (int k = 0; k < 9; ++k) f(k) = uni(rng);
    // A batch of exact ties exercises the origin tie-break.
    if (i % 10 == 0) f = Feature::Constant(0.25);
    records.push_back(record(f, i / 20, i % 20));
  }
  std::vector<BlockRecord> a = records, b = records;
  std::shuffle(b.begin(), b.end(), rng);
  lex_sort(a);
  lex_sort(b);
  std::vector<BlockRecord> c = a;
  lex_sort(c);  // idempotence
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].origin == b[i].origin);
    CHECK(a[i].origin == c[i].origin);
    CHECK((a[i].feature - b[i].feature).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("window bounds the neighbor scan") {
  DetectorConfig config;
  config.feature_distance_threshold = 0.014;
  std::vector<BlockRecord> records;
  records.push_back(record(0.000, 0, 0));
  records.push_back(record(0.001, 0, 40));
  records.push_back(record(0.002, 0, 80));
  lex_sort(records);
  config.neighbor_window = 1;
  auto pairs = find_candidates(records, config, 1);
  CHECK(origin_pairs(pairs) ==
        std::set<std::pair<BlockOrigin, BlockOrigin>>{
            {{0, 0}, {0, 40}}, {{0, 40}, {0, 80}}});
  config.neighbor_window = 2;
  pairs = find_candidates(records, config, 1);
  CHECK(pairs.size() == 3);
}

TEST_CASE("feature distance threshold is strict") {
  DetectorConfig config;
  config.feature_distance_threshold = 1.0 / 64.0;  // exactly representable
  config.neighbor_window = 4;
  std::vector<BlockRecord> records;
  records.push_back(record(0.5, 0, 0));
  records.push_back(record(0.5 + 1.0 / 64.0, 0, 40));   // distance == t_l
  records.push_back(record(0.5 + 1.0 / 128.0, 0, 80));  // distance < t_l
  lex_sort(records);
  auto pairs = find_candidates(records, config, 1);
  // (0,0)-(0,80) at 1/128 and (0,40)-(0,80) at 1/128; the exact-t_l pair is out.
  CHECK(origin_pairs(pairs) ==
        std::set<std::pair<BlockOrigin, BlockOrigin>>{
            {{0, 0}, {0, 80}}, {{0, 40}, {0, 80}}});
}

TEST_CASE("candidates are canonical and deduplicated") {
  DetectorConfig config;
  config.neighbor_window = 5;
  std::vector<BlockRecord> records;
  records.push_back(record(0.5, 10, 40));
  records.push_back(record(0.5, 2, 3));
  records.push_back(record(0.5, 7, 90));
  lex_sort(records);
  const auto pairs = find_candidates(records, config, 3);
  REQUIRE(pairs.size() == 3);
  for (const CandidatePair& p : pairs) {
    CHECK(p.a < p.b);
    CHECK(p.feature_distance == 0.0);
  }
  CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                       [](const CandidatePair& x, const CandidatePair& y) {
                         if (x.a != y.a) return x.a < y.a;
                         return x.b < y.b;
                       }));
}

TEST_CASE("shift vectors are componentwise absolute by default, signed on request") {
  std::vector<BlockRecord> records;
  records.push_back(record(0.5, 2, 40));
  records.push_back(record(0.5, 10, 3));
  lex_sort(records);
  DetectorConfig config;

  auto pairs = find_candidates(records, config, 1);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].a == BlockOrigin{2, 40});
  CHECK(pairs[0].b == BlockOrigin{10, 3});
  CHECK(pairs[0].shift == Eigen::Vector2i(8, 37));

  config.signed_shifts = true;
  pairs = find_candidates(records, config, 1);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].shift == Eigen::Vector2i(8, -37));
}

TEST_CASE("windowed search with a full window equals brute force") {
  const DetectorConfig base_config;
  std::mt19937_64 seeds(1234);
  for (int trial = 0; trial < 6; ++trial) {
    RasterImage img = uniform_noise_image(40, 40, seeds());
    copy_region(img, 0, 0, 20, 20, 20, 20);
    auto records = build_feature_matrix(img, base_config);
    DetectorConfig config = base_config;
    config.neighbor_window = static_cast<int>(records.size());
    lex_sort(records);
    const auto windowed = find_candidates(records, config, 2);
    const auto brute = brute_force_candidates(records, config);
    REQUIRE(windowed.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(windowed[i].a == brute[i].a);
      CHECK(windowed[i].b == brute[i].b);
      CHECK(windowed[i].shift == brute[i].shift);
      CHECK(windowed[i].feature_distance == brute[i].feature_distance);
    }
  }
}

TEST_CASE("candidate set grows monotonically with t_l") {
  const RasterImage img = synth_texture(60, 70, 8);
  DetectorConfig config;
  auto records = build_feature_matrix(img, config);
  lex_sort(records);
  std::set<std::pair<BlockOrigin, BlockOrigin>> previous;
  for (const double tl : {0.004, 0.014, 0.05, 0.2}) {
    config.feature_distance_threshold = tl;
    const auto keys = origin_pairs(find_candidates(records, config, 1));
    CHECK(std::includes(keys.begin(), keys.end(), previous.begin(), previous.end()));
    previous = keys;
  }
}

TEST_CASE("vote count threshold is strict") {
  DetectorConfig config;  // ts = 18, t2 = 32
  auto make_aligned_pairs = [](int count) {
    std::vector<CandidatePair> pairs;
    for (int i = 0; i < count; ++i) {
      CandidatePair p;
      p.a = {i, 0};
      p.b = {i, 40};
      p.shift = {0, 40};
      p.feature_distance = 0.0;
      pairs.push_back(p);
    }
    return pairs;
  };
  const ShiftHistogram at_threshold = accumulate_shifts(make_aligned_pairs(18));
  CHECK(confirm_regions(at_threshold, config).empty());
  const ShiftHistogram over_threshold = accumulate_shifts(make_aligned_pairs(19));
  CHECK(confirm_regions(over_threshold, config).size() == 19);
}

TEST_CASE("separation threshold is strict") {
  DetectorConfig config;  // t2 = 32
  auto pairs_with_shift = [](int dr, int dc, int count) {
    std::vector<CandidatePair> pairs;
    for (int i = 0; i < count; ++i) {
      CandidatePair p;
      p.a = {i, 0};
      p.b = {i + dr, dc};
      p.shift = {dr, dc};
      pairs.push_back(p);
    }
    return pairs;
  };
  // ||(0,32)|| == t2 exactly: rejected regardless of votes.
  CHECK(confirm_regions(accumulate_shifts(pairs_with_shift(0, 32, 100)), config).empty());
  CHECK(confirm_regions(accumulate_shifts(pairs_with_shift(0, 33, 100)), config).size() == 100);
  // ||(23,23)|| = 32.53 > 32.
  CHECK(confirm_regions(accumulate_shifts(pairs_with_shift(23, 23, 25)), config).size() == 25);
  // ||(22,22)|| = 31.11 < 32.
  CHECK(confirm_regions(accumulate_shifts(pairs_with_shift(22, 22, 25)), config).empty());
}

TEST_CASE("accumulate_shifts groups pairs by exact shift") {
  std::vector<CandidatePair> pairs;
  CandidatePair p;
  p.a = {0, 0};
  p.b = {5, 40};
  p.shift = {5, 40};
  pairs.push_back(p);
  p.a = {3, 2};
  p.b = {8, 42};
  pairs.push_back(p);
  p.b = {9, 42};
  p.shift = {6, 40};
  pairs.push_back(p);
  const ShiftHistogram hist = accumulate_shifts(pairs);
  REQUIRE(hist.size() == 2);
  CHECK(hist.at({5, 40}).size() == 2);
  CHECK(hist.at({6, 40}).size() == 1);
}

TEST_CASE("render_mask paints both blocks of each pair") {
  DetectorConfig config;
  CandidatePair p;
  p.a = {0, 0};
  p.b = {20, 30};
  const Mask mask = render_mask({p}, config, 40, 50);
  CHECK(count_true(mask) == 2 * 16 * 16);
  CHECK(mask(0, 0));
  CHECK(mask(15, 15));
  CHECK_FALSE(mask(16, 16));
  CHECK(mask(20, 30));
  CHECK(mask(35, 45));
  CHECK_FALSE(mask(36, 30));

  // Overlapping confirmed blocks paint the union, not the sum.
  CandidatePair q = p;
  q.a = {0, 1};
  q.b = {20, 31};
  const Mask overlap = render_mask({p, q}, config, 40, 50);
  CHECK(count_true(overlap) == 2 * 16 * 17);

  CandidatePair bad;
  bad.a = {30, 40};  // 30 + 16 > 40
  bad.b = {0, 0};
  CHECK_THROWS_AS(render_mask({bad}, config, 40, 50), std::invalid_argument);
}

TEST_CASE("detect finds a planted duplicate and paints exactly its blocks") {
  RasterImage img = synth_texture(120, 180, 41);
  copy_region(img, 10, 15, 40, 40, 60, 120);
  const DetectionResult result = detect(img, DetectorConfig{}, 1);
  CHECK(result.report.forged());
  CHECK(result.report.block_count == (120 - 15) * (180 - 15));
  REQUIRE(result.report.confirmed_shifts.size() == 1);
  CHECK(result.report.confirmed_shifts[0].shift_row == 50);
  CHECK(result.report.confirmed_shifts[0].shift_col == 105);
  CHECK(result.report.confirmed_shifts[0].votes == 25 * 25);
  CHECK(result.report.confirmed_pairs == 25 * 25);
  CHECK(result.report.mask_pixels == count_true(result.mask));
  // The union of confirmed blocks is exactly the two 40x40 squares.
  CHECK(count_true(result.mask) == 2 * 40 * 40);
  for (int r = 0; r < 40; ++r) {
    for (int c = 0; c < 40; ++c) {
      CHECK(result.mask(10 + r, 15 + c));
      CHECK(result.mask(60 + r, 120 + c));
    }
  }
}

TEST_CASE("detect stays clean on untampered texture") {
  const RasterImage img = synth_texture(100, 150, 4242);
  const DetectionResult result = detect(img, DetectorConfig{}, 1);
  CHECK_FALSE(result.report.forged());
  CHECK(result.report.confirmed_pairs == 0);
  CHECK(count_true(result.mask) == 0);
}

TEST_CASE("detect is deterministic and worker-count independent") {
  RasterImage img = synth_texture(100, 140, 77);
  copy_region(img, 5, 5, 36, 36, 55, 90);
  const DetectionResult one = detect(img, DetectorConfig{}, 1);
  const DetectionResult again = detect(img, DetectorConfig{}, 1);
  const DetectionResult parallel = detect(img, DetectorConfig{}, 3);
  for (const DetectionResult* other : {&again, &parallel}) {
    CHECK(one.report.candidate_pairs == other->report.candidate_pairs);
    CHECK(one.report.confirmed_pairs == other->report.confirmed_pairs);
    CHECK(one.report.mask_pixels == other->report.mask_pixels);
    CHECK((one.mask == other->mask).all());
  }
}

TEST_CASE("report serializes to parseable JSON") {
  RasterImage img = synth_texture(60, 90, 13);
  copy_region(img, 4, 4, 30, 30, 25, 55);
  const DetectionResult result = detect(img, DetectorConfig{}, 1);
  const nlohmann::json j = nlohmann::json::parse(to_json_string(result.report));
  CHECK(j["image"]["width"] == 90);
  CHECK(j["image"]["height"] == 60);
  CHECK(j["config"]["block_size"] == 16);
  CHECK(j["config"]["tl"] == 0.014);
  CHECK(j["config"]["ts"] == 18);
  CHECK(j["blocks"] == result.report.block_count);
  CHECK(j["forged"] == result.report.forged());
  CHECK(j["mask_pixels"] == result.report.mask_pixels);
  CHECK(j["confirmed_shifts"].is_array());
}
