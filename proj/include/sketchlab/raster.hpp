#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sketchlab {

// Binary object mask, row-major, true = object pixel.
struct MaskImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // width*height entries, 0 or 1

  bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// 8-bit RGB raster, row-major, interleaved channels.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> px;  // 3*width*height

  static RgbImage filled(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b);
  std::uint8_t* pixel(int x, int y) { return &px[3 * (static_cast<std::size_t>(y) * width + x)]; }
  const std::uint8_t* pixel(int x, int y) const {
    return &px[3 * (static_cast<std::size_t>(y) * width + x)];
  }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// Loads a PNG or PGM mask; any grayscale value > 127 maps to foreground.
// Throws std::runtime_error on unreadable files or zero-dimension images.
MaskImage load_mask(const std::string& path);

// Loads a PNG or PGM as RGB (grayscale sources are replicated across channels).
RgbImage load_rgb(const std::string& path);

// Lossless PNG encoders. Output bytes are stable for identical inputs.
std::vector<std::uint8_t> encode_png(const RgbImage& image);
void save_png(const RgbImage& image, const std::string& path);
void save_mask_png(const MaskImage& mask, const std::string& path);

RgbImage decode_png(const std::vector<std::uint8_t>& bytes);

}  // namespace sketchlab
