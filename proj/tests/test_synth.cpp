#include <doctest.h>

#include "dupdetect/features.hpp"
#include "dupdetect/synth.hpp"

using namespace dupdetect;

TEST_CASE("textures are deterministic per seed") {
  const RasterImage a = synth_texture(80, 120, 5);
  const RasterImage b = synth_texture(80, 120, 5);
  const RasterImage c = synth_texture(80, 120, 6);
  CHECK((a.r - b.r).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.g - b.g).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.b - b.b).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.r - c.r).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("textures have the requested shape and a safe value range") {
  const RasterImage img = synth_texture(50, 73, 11);
  CHECK(img.rows() == 50);
  CHECK(img.cols() == 73);
  for (const Plane* p : {&img.r, &img.g, &img.b}) {
    CHECK(p->minCoeff() >= 0.02);
    CHECK(p->maxCoeff() <= 0.98);
  }
  CHECK_NOTHROW(validate(img));
}

TEST_CASE("textures are non-flat at block scale") {
  const RasterImage img = synth_texture(64, 64, 3);
  // Every 16x16 block should show some variation in every channel.
  for (Eigen::Index r = 0; r + 16 <= 64; r += 16) {
    for (Eigen::Index c = 0; c + 16 <= 64; c += 16) {
      const auto block = img.r.block(r, c, 16, 16);
      CHECK(block.maxCoeff() - block.minCoeff() > 1e-4);
    }
  }
}

TEST_CASE("distinct blocks of a texture have distinct features") {
  const RasterImage img = synth_texture(60, 60, 21);
  const auto records = build_feature_matrix(img, DetectorConfig{});
  // Feature vectors of far-apart blocks should differ clearly; identical
  // features would make the matcher's job meaningless on synthetic input.
  double min_dist = 1e9;
  for (std::size_t i = 0; i < records.size(); i += 97) {
    for (std::size_t j = i + 200; j < records.size(); j += 131) {
      min_dist = std::min(
          min_dist, (records[i].feature - records[j].feature).norm());
    }
  }
  CHECK(min_dist > 0.0);
}
