#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dupdetect/mask.hpp"
#include "dupdetect/raster.hpp"

namespace dupdetect {

/// Decodes a PNG or baseline JPEG file (sniffed by signature, not by
/// extension) into a normalized [0, 1] raster. 8-bit samples map to c/255,
/// 16-bit PNG samples to c/65535. Grayscale inputs and images smaller than
/// 16 x 16 are rejected; PNG alpha channels are dropped.
RasterImage load_image(const std::string& path);

/// Writes an 8-bit RGB PNG; intensities are rounded to v * 255.
void save_png(const RasterImage& img, const std::string& path);

/// Writes the mask as an 8-bit grayscale PNG, 255 = duplicated, 0 = clean.
void save_mask(const Mask& mask, const std::string& path);

/// Reads a mask PNG back. Grayscale values >= 128 (or any channel >= 128
/// for RGB inputs) count as true.
Mask load_mask(const std::string& path);

/// In-memory baseline JPEG encode at the given quality (1-100).
std::vector<unsigned char> encode_jpeg(const RasterImage& img, int quality);

/// In-memory JPEG decode; rejects grayscale streams.
RasterImage decode_jpeg(const unsigned char* data, std::size_t size);

}  // namespace dupdetect
