#pragma once

#include <cstddef>
#include <vector>

namespace flashnet {

// RGB raster, row-major, interleaved channels, samples nominally in [0, 1].
// The preconditioned ground truth (x - 2t + 1) reuses this container with
// samples outside [0, 1]; codecs and display paths clamp, metrics do not.
struct Image {
  int height = 0;
  int width = 0;
  static constexpr int channels = 3;
  std::vector<float> data;  // height * width * 3

  Image() = default;
  Image(int h, int w, float fill = 0.0f)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, fill) {}

  float& at(int row, int col, int c) {
    return data[(static_cast<std::size_t>(row) * width + col) * 3 + c];
  }
  float at(int row, int col, int c) const {
    return data[(static_cast<std::size_t>(row) * width + col) * 3 + c];
  }

  std::size_t sample_count() const { return data.size(); }
  bool same_size(const Image& other) const {
    return height == other.height && width == other.width;
  }
};

struct BoundingBox {
  int top = 0;
  int left = 0;
  int height = 0;
  int width = 0;
};

// height/width >= 1 and data length consistent.
bool image_shape_valid(const Image& img);

// Box fully inside the host image with positive extent.
bool box_within(const BoundingBox& box, const Image& img);

// Bilinear resampling with half-pixel center alignment; output stays in
// the input's value range. Errors on non-positive target dimensions.
Image resize(const Image& img, int out_h, int out_w);

// Verbatim sample copy of the boxed region. Errors on out-of-bounds boxes.
Image crop(const Image& img, const BoundingBox& box);

Image flip_horizontal(const Image& img);

Image clamp01(const Image& img);

inline float clampf(float v, float lo, float hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace flashnet
