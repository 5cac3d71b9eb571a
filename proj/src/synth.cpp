#include "dupdetect/synth.hpp"

#include <random>
#include <stdexcept>

namespace dupdetect {

namespace {

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// One octave: a lattice of uniform draws, blended with smoothstep weights.
// Values stay in [0, 1].
Plane value_noise(Eigen::Index rows, Eigen::Index cols, int cell,
                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const Eigen::Index grid_rows = rows / cell + 2;
  const Eigen::Index grid_cols = cols / cell + 2;
  Plane lattice(grid_rows, grid_cols);
  for (Eigen::Index r = 0; r < grid_rows; ++r) {
    for (Eigen::Index c = 0; c < grid_cols; ++c) {
      lattice(r, c) = uni(rng);
    }
  }
  Plane out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double gy = static_cast<double>(r) / cell;
    const auto i0 = static_cast<Eigen::Index>(gy);
    const double ty = smoothstep(gy - static_cast<double>(i0));
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double gx = static_cast<double>(c) / cell;
      const auto j0 = static_cast<Eigen::Index>(gx);
      const double tx = smoothstep(gx - static_cast<double>(j0));
      const double top = lattice(i0, j0) + tx * (lattice(i0, j0 + 1) - lattice(i0, j0));
      const double bottom =
          lattice(i0 + 1, j0) + tx * (lattice(i0 + 1, j0 + 1) - lattice(i0 + 1, j0));
      out(r, c) = top + ty * (bottom - top);
    }
  }
  return out;
}

}  // namespace

RasterImage synth_texture(Eigen::Index rows, Eigen::Index cols,
                          std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("synth_texture needs positive dimensions");
  }
  std::mt19937_64 rng(seed);

  // Coarse octaves dominate so the image reads as gentle terrain; the fine
  // ones keep every block feature-distinct without sharpening gradients
  // enough to break matching under mild resampling.
  struct Octave {
    int cell;
    double amplitude;
  };
  constexpr Octave octaves[] = {
      {96, 1.0}, {48, 0.5}, {24, 0.24}, {12, 0.12}, {6, 0.06}};
  double amplitude_sum = 0.0;
  Plane field = Plane::Zero(rows, cols);
  for (const Octave& o : octaves) {
    field += o.amplitude * (value_noise(rows, cols, o.cell, rng).array() - 0.5).matrix();
    amplitude_sum += o.amplitude;
  }
  field /= amplitude_sum;  // roughly [-0.5, 0.5], typical spread much tighter

  std::uniform_real_distribution<double> tint(0.7, 1.0);
  std::uniform_real_distribution<double> offset(0.42, 0.58);
  RasterImage img = RasterImage::zero(rows, cols);
  for (Plane* plane : {&img.r, &img.g, &img.b}) {
    const double channel_tint = tint(rng);
    const double channel_offset = offset(rng);
    const Plane detail = value_noise(rows, cols, 10, rng);
    *plane = (channel_offset + 0.7 * channel_tint * field.array() +
              0.06 * (detail.array() - 0.5))
                 .cwiseMax(0.02)
                 .cwiseMin(0.98)
                 .matrix();
  }
  return img;
}

}  // namespace dupdetect
