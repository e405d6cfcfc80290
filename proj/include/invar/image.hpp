// Fixed-size 8-bit RGB canvas plus foreground-mask helpers. Background pixels
// (no geometry projected) are exactly zero in every channel; the mask helpers
// rely on that convention.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace invar {

struct Image {
    static constexpr int kSize = 128;
    static constexpr int kChannels = 3;

    std::vector<std::uint8_t> px; // row-major, interleaved RGB

    Image() : px(static_cast<std::size_t>(kSize) * kSize * kChannels, 0) {}

    std::uint8_t& at(int y, int x, int c) {
        return px[(static_cast<std::size_t>(y) * kSize + x) * kChannels + c];
    }
    std::uint8_t at(int y, int x, int c) const {
        return px[(static_cast<std::size_t>(y) * kSize + x) * kChannels + c];
    }

    bool is_foreground(int y, int x) const {
        const std::size_t i = (static_cast<std::size_t>(y) * kSize + x) * kChannels;
        return px[i] != 0 || px[i + 1] != 0 || px[i + 2] != 0;
    }

    bool operator==(const Image& other) const { return px == other.px; }
};

struct BoundingBox {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1; // inclusive; empty when x1 < x0
    bool empty() const { return x1 < x0 || y1 < y0; }
    int width() const { return empty() ? 0 : x1 - x0 + 1; }
    int height() const { return empty() ? 0 : y1 - y0 + 1; }
};

// Number of pixels with any nonzero channel.
int foreground_count(const Image& im);

// Centroid of the foreground mask in pixel-center coordinates
// ((x + 0.5, y + 0.5) per pixel). Returns {64, 64} when the mask is empty.
std::array<double, 2> foreground_centroid(const Image& im);

BoundingBox foreground_bbox(const Image& im);

// Shift the whole image by integer (dx, dy) with black fill.
Image shifted(const Image& im, int dx, int dy);

} // namespace invar
