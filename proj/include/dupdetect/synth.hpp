#pragma once

#include <cstdint>

#include "dupdetect/raster.hpp"

namespace dupdetect {

/// Deterministic natural-looking test image: several octaves of smoothly
/// interpolated value noise, summed coarse-to-fine and tinted per channel.
/// Every region carries texture at block scale, so overlapping-block
/// features stay distinctive; no large flat or saturated areas appear.
RasterImage synth_texture(Eigen::Index rows, Eigen::Index cols,
                          std::uint64_t seed);

}  // namespace dupdetect
