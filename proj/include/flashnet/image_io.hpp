#pragma once

#include <string>

#include "flashnet/image.hpp"

namespace flashnet {

// Decodes a PNG or binary PPM (P6) file into an RGB image with samples
// scaled to [0, 1] (s/255 for 8-bit storage, s/65535 for 16-bit PNG).
// The format is picked by file signature, not extension.
// Errors: missing/unreadable file, unsupported format, non-RGB channels.
Image load_image(const std::string& path);

// Encodes to 8-bit PNG or binary PPM depending on the path extension
// (".ppm" selects PPM, anything else PNG). Samples are clamped to [0, 1]
// and quantized with round(s * 255).
void save_image(const Image& img, const std::string& path);

}  // namespace flashnet
