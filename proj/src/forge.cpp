#include "dupdetect/forge.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dupdetect/image_io.hpp"
#include "dupdetect/kv.hpp"

namespace dupdetect {

namespace {

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// Bilinear lookup with indices clamped into the plane.
double sample_bilinear(const Plane& p, double y, double x) {
  const double max_y = static_cast<double>(p.rows() - 1);
  const double max_x = static_cast<double>(p.cols() - 1);
  y = std::clamp(y, 0.0, max_y);
  x = std::clamp(x, 0.0, max_x);
  const auto y0 = static_cast<Eigen::Index>(y);
  const auto x0 = static_cast<Eigen::Index>(x);
  const auto y1 = std::min<Eigen::Index>(y0 + 1, p.rows() - 1);
  const auto x1 = std::min<Eigen::Index>(x0 + 1, p.cols() - 1);
  const double fy = y - static_cast<double>(y0);
  const double fx = x - static_cast<double>(x0);
  const double top = p(y0, x0) + fx * (p(y0, x1) - p(y0, x0));
  const double bottom = p(y1, x0) + fx * (p(y1, x1) - p(y1, x0));
  return top + fy * (bottom - top);
}

// cos/sin of the angle, snapped to exact values at right angles so that
// 90-degree rotations land precisely on grid points.
std::pair<double, double> rotation_cos_sin(double degrees) {
  if (std::fmod(degrees, 90.0) == 0.0) {
    const int quarter = static_cast<int>(std::lround(degrees / 90.0)) & 3;
    switch (quarter) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double rad = degrees * std::numbers::pi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

constexpr double kEdgeEps = 1e-9;

// Inverse-maps an output pixel of a rotation about (cy, cx):
// positive degrees turn the content clockwise with row 0 at the top.
struct InverseRotation {
  double cos_t, sin_t, cy, cx;

  void map(double r, double c, double& src_y, double& src_x) const {
    const double dx = c - cx;
    const double dy = r - cy;
    src_x = cx + cos_t * dx + sin_t * dy;
    src_y = cy - sin_t * dx + cos_t * dy;
  }
};

Mask translate_mask(const Mask& mask, int delta_row, int delta_col) {
  Mask out = Mask::Constant(mask.rows(), mask.cols(), false);
  for (Eigen::Index r = 0; r < mask.rows(); ++r) {
    for (Eigen::Index c = 0; c < mask.cols(); ++c) {
      const Eigen::Index sr = r - delta_row;
      const Eigen::Index sc = c - delta_col;
      if (sr >= 0 && sr < mask.rows() && sc >= 0 && sc < mask.cols()) {
        out(r, c) = mask(sr, sc);
      }
    }
  }
  return out;
}

RasterImage translate_image_clamped(const RasterImage& img, int delta_row,
                                    int delta_col) {
  RasterImage out = RasterImage::zero(img.rows(), img.cols());
  for (Eigen::Index r = 0; r < img.rows(); ++r) {
    for (Eigen::Index c = 0; c < img.cols(); ++c) {
      const Eigen::Index sr = std::clamp<Eigen::Index>(r - delta_row, 0, img.rows() - 1);
      const Eigen::Index sc = std::clamp<Eigen::Index>(c - delta_col, 0, img.cols() - 1);
      out.r(r, c) = img.r(sr, sc);
      out.g(r, c) = img.g(sr, sc);
      out.b(r, c) = img.b(sr, sc);
    }
  }
  return out;
}

// Whole-image rotation keeps the canvas size; sampling points outside the
// source are clamped to the nearest edge pixel so the frame stays filled.
RasterImage rotate_image_clamped(const RasterImage& img, double degrees) {
  const auto [cos_t, sin_t] = rotation_cos_sin(degrees);
  const InverseRotation inv{cos_t, sin_t, (img.rows() - 1) / 2.0,
                            (img.cols() - 1) / 2.0};
  RasterImage out = RasterImage::zero(img.rows(), img.cols());
  for (Eigen::Index r = 0; r < img.rows(); ++r) {
    for (Eigen::Index c = 0; c < img.cols(); ++c) {
      double sy, sx;
      inv.map(static_cast<double>(r), static_cast<double>(c), sy, sx);
      out.r(r, c) = sample_bilinear(img.r, sy, sx);
      out.g(r, c) = sample_bilinear(img.g, sy, sx);
      out.b(r, c) = sample_bilinear(img.b, sy, sx);
    }
  }
  return out;
}

// Mask counterpart of rotate_image_clamped: nearest-neighbor lookup,
// out-of-frame sources count as untampered.
Mask rotate_mask_nn(const Mask& mask, double degrees) {
  const auto [cos_t, sin_t] = rotation_cos_sin(degrees);
  const InverseRotation inv{cos_t, sin_t, (mask.rows() - 1) / 2.0,
                            (mask.cols() - 1) / 2.0};
  Mask out = Mask::Constant(mask.rows(), mask.cols(), false);
  for (Eigen::Index r = 0; r < mask.rows(); ++r) {
    for (Eigen::Index c = 0; c < mask.cols(); ++c) {
      double sy, sx;
      inv.map(static_cast<double>(r), static_cast<double>(c), sy, sx);
      const auto nr = static_cast<Eigen::Index>(std::lround(sy));
      const auto nc = static_cast<Eigen::Index>(std::lround(sx));
      if (nr >= 0 && nr < mask.rows() && nc >= 0 && nc < mask.cols()) {
        out(r, c) = mask(nr, nc);
      }
    }
  }
  return out;
}

Plane resize_plane_bilinear(const Plane& in, Eigen::Index out_rows,
                            Eigen::Index out_cols) {
  const double row_ratio = static_cast<double>(in.rows()) / static_cast<double>(out_rows);
  const double col_ratio = static_cast<double>(in.cols()) / static_cast<double>(out_cols);
  Plane out(out_rows, out_cols);
  for (Eigen::Index r = 0; r < out_rows; ++r) {
    const double sy = (static_cast<double>(r) + 0.5) * row_ratio - 0.5;
    for (Eigen::Index c = 0; c < out_cols; ++c) {
      const double sx = (static_cast<double>(c) + 0.5) * col_ratio - 0.5;
      out(r, c) = sample_bilinear(in, sy, sx);
    }
  }
  return out;
}

Eigen::Index scaled_extent(Eigen::Index dim, double factor) {
  const auto out = static_cast<Eigen::Index>(std::lround(static_cast<double>(dim) * factor));
  if (out < 1) throw std::invalid_argument("scale factor collapses the raster");
  return out;
}

}  // namespace

// ---------------------------------------------------------------- AttackOp

AttackOp AttackOp::jpeg(int quality) {
  AttackOp op;
  op.kind = AttackKind::Jpeg;
  op.quality = quality;
  return op;
}

AttackOp AttackOp::blur(int radius) {
  AttackOp op;
  op.kind = AttackKind::Blur;
  op.radius = radius;
  return op;
}

AttackOp AttackOp::awgn(double std_dev) {
  AttackOp op;
  op.kind = AttackKind::Awgn;
  op.std_dev = std_dev;
  return op;
}

AttackOp AttackOp::scale(double factor) {
  AttackOp op;
  op.kind = AttackKind::Scale;
  op.factor = factor;
  return op;
}

AttackOp AttackOp::shift(int delta_row, int delta_col) {
  AttackOp op;
  op.kind = AttackKind::Shift;
  op.delta_row = delta_row;
  op.delta_col = delta_col;
  return op;
}

AttackOp AttackOp::rotate(double degrees) {
  AttackOp op;
  op.kind = AttackKind::Rotate;
  op.degrees = degrees;
  return op;
}

void AttackOp::validate() const {
  switch (kind) {
    case AttackKind::Jpeg:
      if (quality < 1 || quality > 100) {
        throw std::invalid_argument("jpeg quality must be in [1, 100]");
      }
      return;
    case AttackKind::Blur:
      if (radius < 1) throw std::invalid_argument("blur radius must be >= 1");
      return;
    case AttackKind::Awgn:
      if (!(std_dev >= 0.0)) throw std::invalid_argument("awgn std must be >= 0");
      return;
    case AttackKind::Scale:
      if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be > 0");
      return;
    case AttackKind::Shift:
      return;
    case AttackKind::Rotate:
      if (std::abs(degrees) > 45.0 && std::fmod(degrees, 90.0) != 0.0) {
        throw std::invalid_argument(
            "rotation limited to |degrees| <= 45 (right angles excepted)");
      }
      return;
  }
  throw std::invalid_argument("unknown attack kind");
}

std::string AttackOp::to_string() const {
  switch (kind) {
    case AttackKind::Jpeg:
      return "jpeg:" + std::to_string(quality);
    case AttackKind::Blur:
      return "blur:" + std::to_string(radius);
    case AttackKind::Awgn:
      return "awgn:" + format_number(std_dev);
    case AttackKind::Scale:
      return "scale:" + format_number(factor);
    case AttackKind::Shift:
      return "shift:" + std::to_string(delta_row) + "," + std::to_string(delta_col);
    case AttackKind::Rotate:
      return "rotate:" + format_number(degrees);
  }
  throw std::invalid_argument("unknown attack kind");
}

AttackOp AttackOp::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("attack op needs 'kind:params': '" + text + "'");
  }
  const std::string kind = trim(text.substr(0, colon));
  const std::string params = trim(text.substr(colon + 1));
  AttackOp op;
  if (kind == "jpeg") {
    op = jpeg(parse_int(params));
  } else if (kind == "blur") {
    op = blur(parse_int(params));
  } else if (kind == "awgn") {
    op = awgn(parse_double(params));
  } else if (kind == "scale") {
    op = scale(parse_double(params));
  } else if (kind == "shift") {
    const auto parts = split(params, ',');
    if (parts.size() != 2) {
      throw std::invalid_argument("shift needs 'drow,dcol': '" + text + "'");
    }
    op = shift(parse_int(trim(parts[0])), parse_int(trim(parts[1])));
  } else if (kind == "rotate") {
    op = rotate(parse_double(params));
  } else {
    throw std::invalid_argument("unknown attack kind '" + kind + "'");
  }
  op.validate();
  return op;
}

// -------------------------------------------------------------- ForgerySpec

void ForgerySpec::validate(Eigen::Index rows, Eigen::Index cols) const {
  if (source.height <= 0 || source.width <= 0) {
    throw std::invalid_argument("source rect must have positive extent");
  }
  if (source.row < 0 || source.col < 0 ||
      source.row + source.height > rows || source.col + source.width > cols) {
    throw std::invalid_argument("source rect outside the image");
  }
  if (dest_row < 0 || dest_col < 0 || dest_row + source.height > rows ||
      dest_col + source.width > cols) {
    throw std::invalid_argument("pasted footprint outside the image");
  }
  const bool rows_overlap = dest_row < source.row + source.height &&
                            source.row < dest_row + source.height;
  const bool cols_overlap = dest_col < source.col + source.width &&
                            source.col < dest_col + source.width;
  if (rows_overlap && cols_overlap) {
    throw std::invalid_argument("source and destination rects overlap");
  }
  for (const AttackOp& op : pre_paste) op.validate();
  for (const AttackOp& op : post_paste) op.validate();
}

std::string ForgerySpec::serialize() const {
  std::ostringstream out;
  out << "source = " << source.row << "," << source.col << ","
      << source.height << "," << source.width << "\n";
  out << "dest = " << dest_row << "," << dest_col << "\n";
  out << "pre =";
  for (const AttackOp& op : pre_paste) out << " " << op.to_string();
  out << "\n";
  out << "post =";
  for (const AttackOp& op : post_paste) out << " " << op.to_string();
  out << "\n";
  return out.str();
}

ForgerySpec ForgerySpec::parse(const std::string& text) {
  const auto kv = parse_kv_document(text);
  for (const auto& [key, value] : kv) {
    (void)value;
    if (key != "source" && key != "dest" && key != "pre" && key != "post") {
      throw std::invalid_argument("unknown spec key '" + key + "'");
    }
  }
  ForgerySpec spec;
  const auto src = split(kv_require(kv, "source"), ',');
  if (src.size() != 4) {
    throw std::invalid_argument("source needs 'row,col,height,width'");
  }
  spec.source.row = parse_int(trim(src[0]));
  spec.source.col = parse_int(trim(src[1]));
  spec.source.height = parse_int(trim(src[2]));
  spec.source.width = parse_int(trim(src[3]));
  const auto dst = split(kv_require(kv, "dest"), ',');
  if (dst.size() != 2) throw std::invalid_argument("dest needs 'row,col'");
  spec.dest_row = parse_int(trim(dst[0]));
  spec.dest_col = parse_int(trim(dst[1]));
  if (const auto it = kv.find("pre"); it != kv.end()) {
    for (const std::string& tok : split_ws(it->second)) {
      spec.pre_paste.push_back(AttackOp::parse(tok));
    }
  }
  if (const auto it = kv.find("post"); it != kv.end()) {
    for (const std::string& tok : split_ws(it->second)) {
      spec.post_paste.push_back(AttackOp::parse(tok));
    }
  }
  return spec;
}

ForgerySpec ForgerySpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void ForgerySpec::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write spec file: " + path);
  out << serialize();
  if (!out) throw std::runtime_error("cannot write spec file: " + path);
}

// ------------------------------------------------------------------ attacks

RasterImage crop(const RasterImage& img, const SourceRect& rect) {
  if (rect.height <= 0 || rect.width <= 0 || rect.row < 0 || rect.col < 0 ||
      rect.row + rect.height > img.rows() || rect.col + rect.width > img.cols()) {
    throw std::invalid_argument("crop rect outside the image");
  }
  return RasterImage(img.r.block(rect.row, rect.col, rect.height, rect.width),
                     img.g.block(rect.row, rect.col, rect.height, rect.width),
                     img.b.block(rect.row, rect.col, rect.height, rect.width));
}

RasterImage jpeg_roundtrip(const RasterImage& img, int quality) {
  const std::vector<unsigned char> bytes = encode_jpeg(img, quality);
  return decode_jpeg(bytes.data(), bytes.size());
}

Plane gaussian_blur(const Plane& plane, int radius) {
  if (radius < 1) throw std::invalid_argument("blur radius must be >= 1");
  const int taps = 2 * radius + 1;
  Eigen::VectorXd kernel(taps);
  const double sigma = static_cast<double>(radius);
  for (int k = -radius; k <= radius; ++k) {
    kernel(k + radius) = std::exp(-(k * k) / (2.0 * sigma * sigma));
  }
  kernel /= kernel.sum();

  // The 2-D kernel is the outer product of the normalized 1-D kernel with
  // itself, and clamp-to-edge padding factors per axis, so two 1-D passes
  // reproduce the full 2-D convolution exactly.
  const Eigen::Index rows = plane.rows();
  const Eigen::Index cols = plane.cols();
  Plane horizontal(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const Eigen::Index cc = std::clamp<Eigen::Index>(c + k, 0, cols - 1);
        acc += kernel(k + radius) * plane(r, cc);
      }
      horizontal(r, c) = acc;
    }
  }
  Plane out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const Eigen::Index rr = std::clamp<Eigen::Index>(r + k, 0, rows - 1);
        acc += kernel(k + radius) * horizontal(rr, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

RasterImage gaussian_blur(const RasterImage& img, int radius) {
  return RasterImage(gaussian_blur(img.r, radius), gaussian_blur(img.g, radius),
                     gaussian_blur(img.b, radius));
}

RasterImage add_awgn(const RasterImage& img, double std_dev,
                     std::mt19937_64& rng) {
  if (!(std_dev >= 0.0)) throw std::invalid_argument("awgn std must be >= 0");
  if (std_dev == 0.0) return img;
  std::normal_distribution<double> noise(0.0, std_dev / 255.0);
  RasterImage out = img;
  // Draw order: channel r, then g, then b; row-major inside a channel.
  for (Plane* plane : {&out.r, &out.g, &out.b}) {
    for (Eigen::Index r = 0; r < plane->rows(); ++r) {
      for (Eigen::Index c = 0; c < plane->cols(); ++c) {
        (*plane)(r, c) = std::clamp((*plane)(r, c) + noise(rng), 0.0, 1.0);
      }
    }
  }
  return out;
}

RasterImage add_awgn(const RasterImage& img, double std_dev,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return add_awgn(img, std_dev, rng);
}

RasterImage scale_raster(const RasterImage& img, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  const Eigen::Index out_rows = scaled_extent(img.rows(), factor);
  const Eigen::Index out_cols = scaled_extent(img.cols(), factor);
  return RasterImage(resize_plane_bilinear(img.r, out_rows, out_cols),
                     resize_plane_bilinear(img.g, out_rows, out_cols),
                     resize_plane_bilinear(img.b, out_rows, out_cols));
}

Mask scale_mask(const Mask& mask, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  const Eigen::Index out_rows = scaled_extent(mask.rows(), factor);
  const Eigen::Index out_cols = scaled_extent(mask.cols(), factor);
  const double row_ratio = static_cast<double>(mask.rows()) / static_cast<double>(out_rows);
  const double col_ratio = static_cast<double>(mask.cols()) / static_cast<double>(out_cols);
  Mask out(out_rows, out_cols);
  for (Eigen::Index r = 0; r < out_rows; ++r) {
    const auto sr = std::clamp<Eigen::Index>(
        std::lround((static_cast<double>(r) + 0.5) * row_ratio - 0.5), 0,
        mask.rows() - 1);
    for (Eigen::Index c = 0; c < out_cols; ++c) {
      const auto sc = std::clamp<Eigen::Index>(
          std::lround((static_cast<double>(c) + 0.5) * col_ratio - 0.5), 0,
          mask.cols() - 1);
      out(r, c) = mask(sr, sc);
    }
  }
  return out;
}

RotatedPatch rotate_patch(const RasterImage& patch, double degrees) {
  return rotate_patch(patch, Mask::Constant(patch.rows(), patch.cols(), true),
                      degrees);
}

RotatedPatch rotate_patch(const RasterImage& patch, const Mask& valid_in,
                          double degrees) {
  if (std::abs(degrees) > 45.0 && std::fmod(degrees, 90.0) != 0.0) {
    throw std::invalid_argument(
        "rotation limited to |degrees| <= 45 (right angles excepted)");
  }
  if (valid_in.rows() != patch.rows() || valid_in.cols() != patch.cols()) {
    throw std::invalid_argument("validity mask shape mismatch");
  }
  const auto [cos_t, sin_t] = rotation_cos_sin(degrees);
  const Eigen::Index rows = patch.rows();
  const Eigen::Index cols = patch.cols();
  const InverseRotation inv{cos_t, sin_t, (rows - 1) / 2.0, (cols - 1) / 2.0};

  RotatedPatch out;
  out.image = RasterImage::zero(rows, cols);
  out.valid = Mask::Constant(rows, cols, false);
  const double max_y = static_cast<double>(rows - 1);
  const double max_x = static_cast<double>(cols - 1);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      double sy, sx;
      inv.map(static_cast<double>(r), static_cast<double>(c), sy, sx);
      if (sy < -kEdgeEps || sy > max_y + kEdgeEps || sx < -kEdgeEps ||
          sx > max_x + kEdgeEps) {
        continue;
      }
      const auto nr = std::clamp<Eigen::Index>(std::lround(sy), 0, rows - 1);
      const auto nc = std::clamp<Eigen::Index>(std::lround(sx), 0, cols - 1);
      if (!valid_in(nr, nc)) continue;
      out.image.r(r, c) = sample_bilinear(patch.r, sy, sx);
      out.image.g(r, c) = sample_bilinear(patch.g, sy, sx);
      out.image.b(r, c) = sample_bilinear(patch.b, sy, sx);
      out.valid(r, c) = true;
    }
  }
  return out;
}

ForgerySpec shift_paste(const ForgerySpec& spec, int delta_row, int delta_col,
                        Eigen::Index rows, Eigen::Index cols) {
  ForgerySpec out = spec;
  out.dest_row += delta_row;
  out.dest_col += delta_col;
  if (out.dest_row < 0 || out.dest_col < 0 ||
      out.dest_row + out.source.height > rows ||
      out.dest_col + out.source.width > cols) {
    throw std::invalid_argument("shifted paste origin leaves the image");
  }
  return out;
}

// ------------------------------------------------------------ apply_forgery

ForgeryResult apply_forgery(const RasterImage& img, const ForgerySpec& spec,
                            std::uint64_t seed) {
  dupdetect::validate(img);
  spec.validate(img.rows(), img.cols());
  std::mt19937_64 rng(seed);

  RasterImage patch = crop(img, spec.source);
  Mask valid = Mask::Constant(patch.rows(), patch.cols(), true);
  int dest_row = spec.dest_row;
  int dest_col = spec.dest_col;

  for (const AttackOp& op : spec.pre_paste) {
    switch (op.kind) {
      case AttackKind::Jpeg:
        patch = jpeg_roundtrip(patch, op.quality);
        break;
      case AttackKind::Blur:
        patch = gaussian_blur(patch, op.radius);
        break;
      case AttackKind::Awgn:
        patch = add_awgn(patch, op.std_dev, rng);
        break;
      case AttackKind::Scale:
        patch = scale_raster(patch, op.factor);
        valid = scale_mask(valid, op.factor);
        break;
      case AttackKind::Rotate: {
        RotatedPatch rotated = rotate_patch(patch, valid, op.degrees);
        patch = std::move(rotated.image);
        valid = std::move(rotated.valid);
        break;
      }
      case AttackKind::Shift:
        dest_row += op.delta_row;
        dest_col += op.delta_col;
        if (dest_row < 0 || dest_col < 0 ||
            dest_row + patch.rows() > img.rows() ||
            dest_col + patch.cols() > img.cols()) {
          throw std::runtime_error("shifted paste origin leaves the image");
        }
        break;
    }
  }

  RasterImage forged = img;
  Mask truth = Mask::Constant(img.rows(), img.cols(), false);
  for (int r = spec.source.row; r < spec.source.row + spec.source.height; ++r) {
    for (int c = spec.source.col; c < spec.source.col + spec.source.width; ++c) {
      truth(r, c) = true;
    }
  }

  // Paste, clipping to the frame; geometric pre-ops may have grown the
  // patch past the nominal footprint.
  for (Eigen::Index pr = 0; pr < patch.rows(); ++pr) {
    for (Eigen::Index pc = 0; pc < patch.cols(); ++pc) {
      if (!valid(pr, pc)) continue;
      const Eigen::Index tr = dest_row + pr;
      const Eigen::Index tc = dest_col + pc;
      if (tr < 0 || tr >= img.rows() || tc < 0 || tc >= img.cols()) continue;
      if (spec.source.contains(static_cast<int>(tr), static_cast<int>(tc))) {
        throw std::runtime_error("pasted footprint overlaps the source rect");
      }
      forged.r(tr, tc) = patch.r(pr, pc);
      forged.g(tr, tc) = patch.g(pr, pc);
      forged.b(tr, tc) = patch.b(pr, pc);
      truth(tr, tc) = true;
    }
  }

  for (const AttackOp& op : spec.post_paste) {
    switch (op.kind) {
      case AttackKind::Jpeg:
        forged = jpeg_roundtrip(forged, op.quality);
        break;
      case AttackKind::Blur:
        forged = gaussian_blur(forged, op.radius);
        break;
      case AttackKind::Awgn:
        forged = add_awgn(forged, op.std_dev, rng);
        break;
      case AttackKind::Scale:
        forged = scale_raster(forged, op.factor);
        truth = scale_mask(truth, op.factor);
        break;
      case AttackKind::Rotate:
        forged = rotate_image_clamped(forged, op.degrees);
        truth = rotate_mask_nn(truth, op.degrees);
        break;
      case AttackKind::Shift:
        forged = translate_image_clamped(forged, op.delta_row, op.delta_col);
        truth = translate_mask(truth, op.delta_row, op.delta_col);
        break;
    }
  }

  return ForgeryResult{std::move(forged), std::move(truth)};
}

}  // namespace dupdetect
