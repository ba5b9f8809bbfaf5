#include "sketchlab/raster.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace sketchlab {

namespace {

struct PngReadCtx {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t offset;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t count) {
  auto* ctx = static_cast<PngReadCtx*>(png_get_io_ptr(png));
  if (ctx->offset + count > ctx->size) {
    png_error(png, "png: read past end of buffer");
  }
  std::memcpy(out, ctx->data + ctx->offset, count);
  ctx->offset += count;
}

void png_vec_write(png_structp png, png_bytep data, png_size_t count) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + count);
}

void png_vec_flush(png_structp) {}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

bool looks_like_png(const std::vector<std::uint8_t>& bytes) {
  static const std::uint8_t kSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kSig, 8) == 0;
}

bool looks_like_pgm(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5');
}

// Decode any PNG to 8-bit RGB rows (palette expanded, 16-bit downscaled,
// alpha dropped against black per libpng defaults with strip_alpha).
RgbImage decode_png_rgb(const std::vector<std::uint8_t>& bytes, const std::string& what) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) {
    throw std::runtime_error("png: allocation failure");
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png: allocation failure");
  }
  RgbImage image;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: failed to decode " + what);
  }

  PngReadCtx ctx{bytes.data(), bytes.size(), 0};
  png_set_read_fn(png, &ctx, png_mem_read);
  png_read_info(png, info);

  png_uint_32 width = png_get_image_width(png, info);
  png_uint_32 height = png_get_image_height(png, info);
  int color_type = png_get_color_type(png, info);
  int bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) {
    png_set_strip_16(png);
  }
  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  if (width == 0 || height == 0) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: zero-dimension image in " + what);
  }

  image.width = static_cast<int>(width);
  image.height = static_cast<int>(height);
  image.px.assign(3 * static_cast<std::size_t>(width) * height, 0);
  row_ptrs.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    row_ptrs[y] = image.px.data() + 3 * static_cast<std::size_t>(y) * width;
  }
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

struct PgmData {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> values;
};

PgmData parse_pgm(const std::vector<std::uint8_t>& bytes, const std::string& what) {
  std::size_t pos = 0;
  auto peek = [&]() -> int { return pos < bytes.size() ? bytes[pos] : -1; };
  auto skip_ws_and_comments = [&]() {
    while (pos < bytes.size()) {
      if (std::isspace(peek())) {
        ++pos;
      } else if (peek() == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };
  auto read_int = [&]() -> int {
    skip_ws_and_comments();
    if (pos >= bytes.size() || !std::isdigit(peek())) {
      throw std::runtime_error("pgm: malformed header in " + what);
    }
    long v = 0;
    while (pos < bytes.size() && std::isdigit(peek())) {
      v = v * 10 + (bytes[pos] - '0');
      ++pos;
    }
    return static_cast<int>(v);
  };

  bool binary = bytes[1] == '5';
  pos = 2;
  PgmData pgm;
  pgm.width = read_int();
  pgm.height = read_int();
  pgm.maxval = read_int();
  if (pgm.width <= 0 || pgm.height <= 0 || pgm.maxval <= 0 || pgm.maxval > 65535) {
    throw std::runtime_error("pgm: bad dimensions in " + what);
  }
  std::size_t count = static_cast<std::size_t>(pgm.width) * pgm.height;
  pgm.values.resize(count);
  if (binary) {
    ++pos;  // single whitespace after maxval
    int bytes_per = pgm.maxval > 255 ? 2 : 1;
    if (pos + count * bytes_per > bytes.size()) {
      throw std::runtime_error("pgm: truncated pixel data in " + what);
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (bytes_per == 1) {
        pgm.values[i] = bytes[pos + i];
      } else {
        pgm.values[i] = (bytes[pos + 2 * i] << 8) | bytes[pos + 2 * i + 1];
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      pgm.values[i] = read_int();
    }
  }
  return pgm;
}

}  // namespace

RgbImage RgbImage::filled(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  RgbImage image;
  image.width = width;
  image.height = height;
  image.px.resize(3 * static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < image.px.size(); i += 3) {
    image.px[i] = r;
    image.px[i + 1] = g;
    image.px[i + 2] = b;
  }
  return image;
}

MaskImage load_mask(const std::string& path) {
  auto bytes = read_file_bytes(path);
  MaskImage mask;
  if (looks_like_png(bytes)) {
    RgbImage rgb = decode_png_rgb(bytes, path);
    mask.width = rgb.width;
    mask.height = rgb.height;
    mask.bits.resize(static_cast<std::size_t>(mask.width) * mask.height);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
      // Integer mean of the channels; masks are expected grayscale anyway.
      int gray = (rgb.px[3 * i] + rgb.px[3 * i + 1] + rgb.px[3 * i + 2]) / 3;
      mask.bits[i] = gray > 127 ? 1 : 0;
    }
  } else if (looks_like_pgm(bytes)) {
    PgmData pgm = parse_pgm(bytes, path);
    mask.width = pgm.width;
    mask.height = pgm.height;
    mask.bits.resize(pgm.values.size());
    for (std::size_t i = 0; i < pgm.values.size(); ++i) {
      int gray = pgm.maxval == 255 ? pgm.values[i] : pgm.values[i] * 255 / pgm.maxval;
      mask.bits[i] = gray > 127 ? 1 : 0;
    }
  } else {
    throw std::runtime_error("load_mask: not a PNG or PGM file: " + path);
  }
  if (mask.width < 1 || mask.height < 1) {
    throw std::runtime_error("load_mask: zero-dimension image: " + path);
  }
  return mask;
}

RgbImage load_rgb(const std::string& path) {
  auto bytes = read_file_bytes(path);
  if (looks_like_png(bytes)) {
    return decode_png_rgb(bytes, path);
  }
  if (looks_like_pgm(bytes)) {
    PgmData pgm = parse_pgm(bytes, path);
    RgbImage image;
    image.width = pgm.width;
    image.height = pgm.height;
    image.px.resize(3 * pgm.values.size());
    for (std::size_t i = 0; i < pgm.values.size(); ++i) {
      int gray = pgm.maxval == 255 ? pgm.values[i] : pgm.values[i] * 255 / pgm.maxval;
      auto g = static_cast<std::uint8_t>(gray);
      image.px[3 * i] = g;
      image.px[3 * i + 1] = g;
      image.px[3 * i + 2] = g;
    }
    return image;
  }
  throw std::runtime_error("load_rgb: not a PNG or PGM file: " + path);
}

RgbImage decode_png(const std::vector<std::uint8_t>& bytes) {
  return decode_png_rgb(bytes, "<memory>");
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
  if (image.width < 1 || image.height < 1) {
    throw std::runtime_error("encode_png: zero-dimension image");
  }
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) {
    throw std::runtime_error("png: allocation failure");
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png: allocation failure");
  }
  std::vector<std::uint8_t> out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png: encode failed");
  }
  png_set_write_fn(png, &out, png_vec_write, png_vec_flush);
  // Fixed filter and compression settings so identical pixels give
  // identical bytes run to run.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = const_cast<png_bytep>(image.px.data() + 3 * static_cast<std::size_t>(y) * image.width);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void save_png(const RgbImage& image, const std::string& path) {
  auto bytes = encode_png(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("save_png: cannot open " + path);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("save_png: write failed for " + path);
  }
}

void save_mask_png(const MaskImage& mask, const std::string& path) {
  RgbImage image = RgbImage::filled(mask.width, mask.height, 0, 0, 0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (mask.at(x, y)) {
        auto* p = image.pixel(x, y);
        p[0] = p[1] = p[2] = 255;
      }
    }
  }
  save_png(image, path);
}

}  // namespace sketchlab
