// PNG read/write backed by libpng. Writing is always 8-bit RGB; reading
// converts any PNG color type to 8-bit RGB.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invar/image.hpp"

namespace invar {

struct RawImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // interleaved, 3 channels
};

void write_png(const std::string& path, const Image& im);
void write_png_raw(const std::string& path, const RawImage& im);

// Throws IoError when the file is missing/unreadable, FormatError when it is
// not a valid PNG.
RawImage read_png(const std::string& path);

// Bilinear resample of an arbitrary RawImage onto the fixed 128x128 canvas.
Image to_canvas(const RawImage& raw);

} // namespace invar
