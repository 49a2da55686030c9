#include "flashnet/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include "flashnet/errors.hpp"

namespace flashnet {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---- PPM (P6, maxval 255) ----

int ppm_read_token(std::FILE* f) {
  // Skips whitespace and '#' comments, returns a non-negative integer.
  int c = std::fgetc(f);
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = std::fgetc(f);
    } else if (!std::isspace(c)) {
      break;
    } else {
      c = std::fgetc(f);
    }
  }
  if (c == EOF || !std::isdigit(c)) return -1;
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1 << 30) return -1;
    c = std::fgetc(f);
  }
  return value;
}

Image load_ppm(std::FILE* f, const std::string& path) {
  const int w = ppm_read_token(f);
  const int h = ppm_read_token(f);
  const int maxval = ppm_read_token(f);
  if (w < 1 || h < 1 || maxval != 255) {
    fail(ErrorCategory::format, "unsupported PPM header in " + path);
  }
  Image img(h, w);
  std::vector<unsigned char> row(static_cast<std::size_t>(w) * 3);
  for (int y = 0; y < h; ++y) {
    if (std::fread(row.data(), 1, row.size(), f) != row.size()) {
      fail(ErrorCategory::format, "truncated PPM payload in " + path);
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      img.data[static_cast<std::size_t>(y) * w * 3 + i] = row[i] / 255.0f;
    }
  }
  return img;
}

void save_ppm(const Image& img, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) fail(ErrorCategory::io, "cannot open " + path + " for writing");
  std::fprintf(f.get(), "P6\n%d %d\n255\n", img.width, img.height);
  std::vector<unsigned char> row(static_cast<std::size_t>(img.width) * 3);
  for (int y = 0; y < img.height; ++y) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const float v = clampf(img.data[static_cast<std::size_t>(y) * img.width * 3 + i], 0.0f, 1.0f);
      row[i] = static_cast<unsigned char>(std::lround(v * 255.0f));
    }
    if (std::fwrite(row.data(), 1, row.size(), f.get()) != row.size()) {
      fail(ErrorCategory::io, "short write to " + path);
    }
  }
  if (std::fflush(f.get()) != 0) fail(ErrorCategory::io, "cannot flush " + path);
}

// ---- PNG via libpng ----

[[noreturn]] void png_error_fn(png_structp png, png_const_charp msg) {
  std::string* err = static_cast<std::string*>(png_get_error_ptr(png));
  if (err) *err = msg ? msg : "png error";
  longjmp(png_jmpbuf(png), 1);
}

void png_warn_fn(png_structp, png_const_charp) {}

Image load_png(std::FILE* f, const std::string& path) {
  std::string errmsg;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &errmsg,
                                           png_error_fn, png_warn_fn);
  if (!png) fail(ErrorCategory::io, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(ErrorCategory::io, "libpng init failed");
  }

  std::vector<png_bytep> row_ptrs;
  std::vector<unsigned char> raw;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(ErrorCategory::format, "PNG decode failed for " + path + ": " + errmsg);
  }

  png_init_io(png, f);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  const png_byte effective_type = png_get_color_type(png, info);
  if (effective_type == PNG_COLOR_TYPE_GRAY ||
      effective_type == PNG_COLOR_TYPE_GRAY_ALPHA ||
      effective_type == PNG_COLOR_TYPE_RGB_ALPHA) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(ErrorCategory::format, "non-RGB channel count in " + path);
  }
  if (bit_depth < 8) png_set_packing(png);
#ifdef PNG_READ_SWAP_SUPPORTED
  // 16-bit PNG samples are big-endian on disk; read them host-order.
  if (bit_depth == 16) png_set_swap(png);
#endif
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  const int bytes_per_sample = bit_depth == 16 ? 2 : 1;
  if (png_get_channels(png, info) != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(ErrorCategory::format, "non-RGB channel count in " + path);
  }

  raw.resize(static_cast<std::size_t>(h) * w * 3 * bytes_per_sample);
  row_ptrs.resize(h);
  for (int y = 0; y < h; ++y) {
    row_ptrs[y] = raw.data() + static_cast<std::size_t>(y) * w * 3 * bytes_per_sample;
  }
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  Image img(h, w);
  const std::size_t n = img.data.size();
  if (bytes_per_sample == 1) {
    for (std::size_t i = 0; i < n; ++i) img.data[i] = raw[i] / 255.0f;
  } else {
    const std::uint16_t* samples = reinterpret_cast<const std::uint16_t*>(raw.data());
    for (std::size_t i = 0; i < n; ++i) img.data[i] = samples[i] / 65535.0f;
  }
  return img;
}

void save_png(const Image& img, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) fail(ErrorCategory::io, "cannot open " + path + " for writing");

  std::string errmsg;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &errmsg,
                                            png_error_fn, png_warn_fn);
  if (!png) fail(ErrorCategory::io, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(ErrorCategory::io, "libpng init failed");
  }

  std::vector<unsigned char> raw(img.data.size());
  std::vector<png_bytep> row_ptrs(img.height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorCategory::io, "PNG encode failed for " + path + ": " + errmsg);
  }

  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = static_cast<unsigned char>(
        std::lround(clampf(img.data[i], 0.0f, 1.0f) * 255.0f));
  }
  for (int y = 0; y < img.height; ++y) {
    row_ptrs[y] = raw.data() + static_cast<std::size_t>(y) * img.width * 3;
  }

  png_init_io(png, f.get());
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(f.get()) != 0) fail(ErrorCategory::io, "cannot flush " + path);
}

}  // namespace

Image load_image(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) fail(ErrorCategory::io, "cannot open " + path);

  unsigned char sig[8] = {0};
  const std::size_t got = std::fread(sig, 1, sizeof(sig), f.get());
  std::rewind(f.get());
  if (got >= 8 && png_sig_cmp(sig, 0, 8) == 0) return load_png(f.get(), path);
  if (got >= 2 && sig[0] == 'P' && sig[1] == '6') {
    std::fseek(f.get(), 2, SEEK_SET);
    return load_ppm(f.get(), path);
  }
  fail(ErrorCategory::format, "unsupported image format in " + path);
}

void save_image(const Image& img, const std::string& path) {
  if (!image_shape_valid(img)) {
    fail(ErrorCategory::config, "save_image: invalid image shape");
  }
  const bool ppm = path.size() >= 4 && path.compare(path.size() - 4, 4, ".ppm") == 0;
  if (ppm) {
    save_ppm(img, path);
  } else {
    save_png(img, path);
  }
}

}  // namespace flashnet
