#include "flashnet/image.hpp"

#include <algorithm>
#include <cmath>

#include "flashnet/errors.hpp"

namespace flashnet {

bool image_shape_valid(const Image& img) {
  return img.height >= 1 && img.width >= 1 &&
         img.data.size() ==
             static_cast<std::size_t>(img.height) * img.width * 3;
}

bool box_within(const BoundingBox& box, const Image& img) {
  return box.height > 0 && box.width > 0 && box.top >= 0 && box.left >= 0 &&
         box.top + box.height <= img.height &&
         box.left + box.width <= img.width;
}

Image resize(const Image& img, int out_h, int out_w) {
  if (!image_shape_valid(img)) fail(ErrorCategory::config, "resize: invalid image");
  if (out_h < 1 || out_w < 1) {
    fail(ErrorCategory::config, "resize: target dimensions must be >= 1");
  }
  Image out(out_h, out_w);
  const double scale_y = static_cast<double>(img.height) / out_h;
  const double scale_x = static_cast<double>(img.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    // Half-pixel center alignment.
    double sy = (y + 0.5) * scale_y - 0.5;
    sy = std::clamp(sy, 0.0, static_cast<double>(img.height - 1));
    const int y0 = static_cast<int>(sy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fy = sy - y0;
    for (int x = 0; x < out_w; ++x) {
      double sx = (x + 0.5) * scale_x - 0.5;
      sx = std::clamp(sx, 0.0, static_cast<double>(img.width - 1));
      const int x0 = static_cast<int>(sx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double fx = sx - x0;
      for (int c = 0; c < 3; ++c) {
        const double top = img.at(y0, x0, c) * (1.0 - fx) + img.at(y0, x1, c) * fx;
        const double bot = img.at(y1, x0, c) * (1.0 - fx) + img.at(y1, x1, c) * fx;
        out.at(y, x, c) = static_cast<float>(top * (1.0 - fy) + bot * fy);
      }
    }
  }
  return out;
}

Image crop(const Image& img, const BoundingBox& box) {
  if (!image_shape_valid(img)) fail(ErrorCategory::config, "crop: invalid image");
  if (!box_within(box, img)) {
    fail(ErrorCategory::config, "crop: box outside image bounds");
  }
  Image out(box.height, box.width);
  for (int y = 0; y < box.height; ++y) {
    const float* src = &img.data[(static_cast<std::size_t>(box.top + y) * img.width + box.left) * 3];
    float* dst = &out.data[static_cast<std::size_t>(y) * box.width * 3];
    std::copy(src, src + static_cast<std::size_t>(box.width) * 3, dst);
  }
  return out;
}

Image flip_horizontal(const Image& img) {
  Image out(img.height, img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < 3; ++c) {
        out.at(y, x, c) = img.at(y, img.width - 1 - x, c);
      }
    }
  }
  return out;
}

Image clamp01(const Image& img) {
  Image out = img;
  for (float& v : out.data) v = clampf(v, 0.0f, 1.0f);
  return out;
}

}  // namespace flashnet
