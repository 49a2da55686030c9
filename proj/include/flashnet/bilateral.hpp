#pragma once

#include "flashnet/image.hpp"

namespace flashnet {

struct FilterParams {
  double sigma_s = 16.0;  // spatial Gaussian std dev, pixels
  double sigma_r = 0.4;   // range Gaussian std dev, [0,1] units
};

// sigma_s = 3% of the longest image side, sigma_r = 0.4.
FilterParams choose_sigmas(const Image& img);

// Brute-force bilateral filter: truncated window of radius ceil(3*sigma_s),
// clamp-to-edge replication at borders, joint RGB range distance. Serves as
// the oracle for the accelerated variant.
Image bilateral_exact(const Image& img, const FilterParams& params);

// Grid-accelerated bilateral filter: pixels are splatted into a spatial
// grid sampled proportionally to sigma_s crossed with a 3D RGB range
// lattice sampled proportionally to sigma_r, the grid is Gaussian-blurred,
// and the result is sliced back with multilinear interpolation. Range
// lattice slabs are processed one at a time so memory stays O(image).
Image bilateral_fast(const Image& img, const FilterParams& params);

enum class FilterVariant { fast, exact };

Image bilateral(const Image& img, const FilterParams& params, FilterVariant v);

}  // namespace flashnet
