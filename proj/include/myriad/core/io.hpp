#pragma once

#include <filesystem>
#include <string>

#include "myriad/core/types.hpp"

namespace myriad {

/// Snap a [0,1] value to the nearest 8-bit level so image files round-trip
/// losslessly. Generators quantize at creation time.
inline Scalar quantize8(Scalar v) {
  if (v < 0) v = 0;
  if (v > 1) v = 1;
  return std::round(v * 255.0) / 255.0;
}

void write_ppm(const std::filesystem::path& path, const Image& img);
Image read_ppm(const std::filesystem::path& path);

/// 8-bit grayscale; used for {0,1} masks.
void write_pgm(const std::filesystem::path& path, const Mat& m);
Mat read_pgm(const std::filesystem::path& path);

/// Minimal npy (v1.0, little-endian f8, C order) for float grids.
void write_npy(const std::filesystem::path& path, const Mat& m);
Mat read_npy(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace myriad
