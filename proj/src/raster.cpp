#include "dupdetect/raster.hpp"

#include <stdexcept>
#include <utility>

namespace dupdetect {

RasterImage::RasterImage(Plane red, Plane green, Plane blue)
    : r(std::move(red)), g(std::move(green)), b(std::move(blue)) {
  if (r.rows() != g.rows() || r.rows() != b.rows() ||
      r.cols() != g.cols() || r.cols() != b.cols()) {
    throw std::invalid_argument("RasterImage: channel shapes differ");
  }
}

RasterImage RasterImage::constant(Eigen::Index rows, Eigen::Index cols,
                                  double red, double green, double blue) {
  RasterImage img;
  img.r = Plane::Constant(rows, cols, red);
  img.g = Plane::Constant(rows, cols, green);
  img.b = Plane::Constant(rows, cols, blue);
  return img;
}

void RasterImage::clamp() {
  r = r.cwiseMax(0.0).cwiseMin(1.0);
  g = g.cwiseMax(0.0).cwiseMin(1.0);
  b = b.cwiseMax(0.0).cwiseMin(1.0);
}

void validate(const RasterImage& img) {
  if (img.r.rows() != img.g.rows() || img.r.rows() != img.b.rows() ||
      img.r.cols() != img.g.cols() || img.r.cols() != img.b.cols()) {
    throw std::invalid_argument("RasterImage: channel shapes differ");
  }
  if (img.rows() == 0 || img.cols() == 0) {
    throw std::invalid_argument("RasterImage: empty image");
  }
  for (const Plane* p : {&img.r, &img.g, &img.b}) {
    if (p->minCoeff() < 0.0 || p->maxCoeff() > 1.0) {
      throw std::invalid_argument("RasterImage: intensity outside [0, 1]");
    }
  }
}

Plane rgb_to_luma(const RasterImage& img) {
  return kLumaR * img.r + kLumaG * img.g + kLumaB * img.b;
}

}  // namespace dupdetect
