#include "dupdetect/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <jpeglib.h>

namespace dupdetect {

namespace {

std::vector<unsigned char> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  return bytes;
}

bool looks_like_png(const unsigned char* data, std::size_t size) {
  static const unsigned char sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  return size >= 8 && std::memcmp(data, sig, 8) == 0;
}

bool looks_like_jpeg(const unsigned char* data, std::size_t size) {
  return size >= 2 && data[0] == 0xFF && data[1] == 0xD8;
}

unsigned char quantize8(double v) {
  const long q = std::lround(std::clamp(v, 0.0, 1.0) * 255.0);
  return static_cast<unsigned char>(std::clamp(q, 0L, 255L));
}

// ---------------------------------------------------------------- PNG

struct PngMemReader {
  const unsigned char* data;
  std::size_t size;
  std::size_t offset;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t n) {
  auto* reader = static_cast<PngMemReader*>(png_get_io_ptr(png));
  if (reader->offset + n > reader->size) {
    png_error(png, "truncated PNG stream");
  }
  std::memcpy(out, reader->data + reader->offset, n);
  reader->offset += n;
}

// Decodes a PNG into interleaved rows. force_rgb8 collapses everything to
// RGB8 (mask reading); otherwise grayscale is rejected, alpha dropped, and
// the bit depth (8 or 16) preserved.
struct DecodedPng {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 8;
  std::vector<unsigned char> rows;  // height * rowbytes
  std::size_t rowbytes = 0;
};

DecodedPng decode_png_bytes(const unsigned char* data, std::size_t size,
                            bool force_rgb8) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           nullptr, nullptr);
  if (!png) throw std::runtime_error("libpng: failed to allocate read struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("libpng: failed to allocate info struct");
  }

  DecodedPng out;
  PngMemReader reader{data, size, 0};
  std::vector<png_bytep> row_ptrs;
  std::string error;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error(error.empty() ? "PNG decode failed" : error);
  }

  png_set_read_fn(png, &reader, png_mem_read);
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    if (!force_rgb8) {
      error = "grayscale PNG rejected: a 3-channel color image is required";
      png_error(png, "grayscale input");
    }
    if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_set_gray_to_rgb(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  if (force_rgb8 && bit_depth == 16) png_set_strip_16(png);

  png_read_update_info(png, info);

  out.width = png_get_image_width(png, info);
  out.height = png_get_image_height(png, info);
  out.bit_depth = png_get_bit_depth(png, info);
  out.rowbytes = png_get_rowbytes(png, info);
  if (png_get_channels(png, info) != 3) {
    error = "unsupported PNG layout";
    png_error(png, "unsupported layout");
  }

  out.rows.resize(out.rowbytes * out.height);
  row_ptrs.resize(out.height);
  for (png_uint_32 y = 0; y < out.height; ++y) {
    row_ptrs[y] = out.rows.data() + y * out.rowbytes;
  }
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

RasterImage png_to_raster(const DecodedPng& png) {
  RasterImage img = RasterImage::zero(png.height, png.width);
  if (png.bit_depth == 8) {
    for (png_uint_32 y = 0; y < png.height; ++y) {
      const unsigned char* row = png.rows.data() + y * png.rowbytes;
      for (png_uint_32 x = 0; x < png.width; ++x) {
        img.r(y, x) = row[3 * x + 0] / 255.0;
        img.g(y, x) = row[3 * x + 1] / 255.0;
        img.b(y, x) = row[3 * x + 2] / 255.0;
      }
    }
  } else if (png.bit_depth == 16) {
    // PNG 16-bit samples are big-endian.
    for (png_uint_32 y = 0; y < png.height; ++y) {
      const unsigned char* row = png.rows.data() + y * png.rowbytes;
      for (png_uint_32 x = 0; x < png.width; ++x) {
        for (int c = 0; c < 3; ++c) {
          const unsigned hi = row[6 * x + 2 * c];
          const unsigned lo = row[6 * x + 2 * c + 1];
          const double v = static_cast<double>((hi << 8) | lo) / 65535.0;
          (c == 0 ? img.r : c == 1 ? img.g : img.b)(y, x) = v;
        }
      }
    }
  } else {
    throw std::runtime_error("unsupported PNG bit depth");
  }
  return img;
}

void encode_png_file(const std::string& path, png_uint_32 width,
                     png_uint_32 height, int color_type,
                     const std::vector<unsigned char>& rows,
                     std::size_t rowbytes) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, nullptr);
  if (!png) {
    std::fclose(fp);
    throw std::runtime_error("libpng: failed to allocate write struct");
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    std::fclose(fp);
    throw std::runtime_error("libpng: failed to allocate info struct");
  }

  std::vector<png_bytep> row_ptrs(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    row_ptrs[y] = const_cast<png_bytep>(rows.data() + y * rowbytes);
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("PNG encode failed: " + path);
  }

  png_init_io(png, fp);
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fclose(fp) != 0) {
    throw std::runtime_error("cannot finish writing: " + path);
  }
}

// ---------------------------------------------------------------- JPEG

struct JpegErrorJump {
  jpeg_error_mgr mgr;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit_to_jump(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorJump*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

}  // namespace

RasterImage load_image(const std::string& path) {
  const std::vector<unsigned char> bytes = read_file(path);
  RasterImage img;
  if (looks_like_png(bytes.data(), bytes.size())) {
    img = png_to_raster(decode_png_bytes(bytes.data(), bytes.size(), false));
  } else if (looks_like_jpeg(bytes.data(), bytes.size())) {
    img = decode_jpeg(bytes.data(), bytes.size());
  } else {
    throw std::runtime_error("unsupported image format (need PNG or JPEG): " + path);
  }
  if (img.rows() < 16 || img.cols() < 16) {
    throw std::runtime_error("image smaller than 16x16: " + path);
  }
  return img;
}

void save_png(const RasterImage& img, const std::string& path) {
  const auto height = static_cast<png_uint_32>(img.rows());
  const auto width = static_cast<png_uint_32>(img.cols());
  const std::size_t rowbytes = static_cast<std::size_t>(width) * 3;
  std::vector<unsigned char> rows(rowbytes * height);
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      rows[y * rowbytes + 3 * x + 0] = quantize8(img.r(y, x));
      rows[y * rowbytes + 3 * x + 1] = quantize8(img.g(y, x));
      rows[y * rowbytes + 3 * x + 2] = quantize8(img.b(y, x));
    }
  }
  encode_png_file(path, width, height, PNG_COLOR_TYPE_RGB, rows, rowbytes);
}

void save_mask(const Mask& mask, const std::string& path) {
  if (mask.rows() <= 0 || mask.cols() <= 0) {
    throw std::invalid_argument("save_mask: mask dimensions must be positive");
  }
  const auto height = static_cast<png_uint_32>(mask.rows());
  const auto width = static_cast<png_uint_32>(mask.cols());
  std::vector<unsigned char> rows(static_cast<std::size_t>(width) * height);
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      rows[y * width + x] = mask(y, x) ? 255 : 0;
    }
  }
  encode_png_file(path, width, height, PNG_COLOR_TYPE_GRAY, rows, width);
}

Mask load_mask(const std::string& path) {
  const std::vector<unsigned char> bytes = read_file(path);
  if (!looks_like_png(bytes.data(), bytes.size())) {
    throw std::runtime_error("mask must be a PNG file: " + path);
  }
  const DecodedPng png = decode_png_bytes(bytes.data(), bytes.size(), true);
  Mask mask(png.height, png.width);
  for (png_uint_32 y = 0; y < png.height; ++y) {
    const unsigned char* row = png.rows.data() + y * png.rowbytes;
    for (png_uint_32 x = 0; x < png.width; ++x) {
      mask(y, x) = row[3 * x] >= 128 || row[3 * x + 1] >= 128 || row[3 * x + 2] >= 128;
    }
  }
  return mask;
}

std::vector<unsigned char> encode_jpeg(const RasterImage& img, int quality) {
  if (quality < 1 || quality > 100) {
    throw std::invalid_argument("JPEG quality must be in [1, 100]");
  }
  const auto height = static_cast<JDIMENSION>(img.rows());
  const auto width = static_cast<JDIMENSION>(img.cols());
  std::vector<unsigned char> rgb(static_cast<std::size_t>(width) * height * 3);
  for (JDIMENSION y = 0; y < height; ++y) {
    for (JDIMENSION x = 0; x < width; ++x) {
      rgb[(y * width + x) * 3 + 0] = quantize8(img.r(y, x));
      rgb[(y * width + x) * 3 + 1] = quantize8(img.g(y, x));
      rgb[(y * width + x) * 3 + 2] = quantize8(img.b(y, x));
    }
  }

  jpeg_compress_struct cinfo;
  JpegErrorJump err;
  cinfo.err = jpeg_std_error(&err.mgr);
  err.mgr.error_exit = jpeg_error_exit_to_jump;

  unsigned char* buffer = nullptr;
  unsigned long buffer_size = 0;
  std::vector<unsigned char> encoded;

  if (setjmp(err.jump)) {
    jpeg_destroy_compress(&cinfo);
    std::free(buffer);
    throw std::runtime_error(std::string("JPEG encode failed: ") + err.message);
  }

  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &buffer, &buffer_size);
  cinfo.image_width = width;
  cinfo.image_height = height;
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE /* baseline-compatible tables */);
  // 4:4:4 sampling: chroma subsampling would add color error an order of
  // magnitude above the quantization tables at high quality.
  for (int i = 0; i < cinfo.num_components; ++i) {
    cinfo.comp_info[i].h_samp_factor = 1;
    cinfo.comp_info[i].v_samp_factor = 1;
  }
  jpeg_start_compress(&cinfo, TRUE);

  const std::size_t stride = static_cast<std::size_t>(width) * 3;
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = rgb.data() + cinfo.next_scanline * stride;
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  encoded.assign(buffer, buffer + buffer_size);
  jpeg_destroy_compress(&cinfo);
  std::free(buffer);
  return encoded;
}

RasterImage decode_jpeg(const unsigned char* data, std::size_t size) {
  jpeg_decompress_struct cinfo;
  JpegErrorJump err;
  cinfo.err = jpeg_std_error(&err.mgr);
  err.mgr.error_exit = jpeg_error_exit_to_jump;

  std::vector<unsigned char> pixels;

  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error(std::string("JPEG decode failed: ") + err.message);
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, data, static_cast<unsigned long>(size));
  jpeg_read_header(&cinfo, TRUE);
  if (cinfo.jpeg_color_space == JCS_GRAYSCALE) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error("grayscale JPEG rejected: a 3-channel color image is required");
  }
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const JDIMENSION width = cinfo.output_width;
  const JDIMENSION height = cinfo.output_height;
  const std::size_t stride = static_cast<std::size_t>(width) * 3;
  pixels.resize(stride * height);
  while (cinfo.output_scanline < height) {
    JSAMPROW row = pixels.data() + cinfo.output_scanline * stride;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);

  RasterImage img = RasterImage::zero(height, width);
  for (JDIMENSION y = 0; y < height; ++y) {
    for (JDIMENSION x = 0; x < width; ++x) {
      img.r(y, x) = pixels[(y * width + x) * 3 + 0] / 255.0;
      img.g(y, x) = pixels[(y * width + x) * 3 + 1] / 255.0;
      img.b(y, x) = pixels[(y * width + x) * 3 + 2] / 255.0;
    }
  }
  return img;
}

}  // namespace dupdetect
