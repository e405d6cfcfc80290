#include "invar/image.hpp"

namespace invar {

int foreground_count(const Image& im) {
    int n = 0;
    for (int y = 0; y < Image::kSize; ++y)
        for (int x = 0; x < Image::kSize; ++x)
            if (im.is_foreground(y, x)) ++n;
    return n;
}

std::array<double, 2> foreground_centroid(const Image& im) {
    double sx = 0.0, sy = 0.0;
    int n = 0;
    for (int y = 0; y < Image::kSize; ++y) {
        for (int x = 0; x < Image::kSize; ++x) {
            if (im.is_foreground(y, x)) {
                sx += x + 0.5;
                sy += y + 0.5;
                ++n;
            }
        }
    }
    if (n == 0) return {Image::kSize / 2.0, Image::kSize / 2.0};
    return {sx / n, sy / n};
}

BoundingBox foreground_bbox(const Image& im) {
    BoundingBox b{Image::kSize, Image::kSize, -1, -1};
    for (int y = 0; y < Image::kSize; ++y) {
        for (int x = 0; x < Image::kSize; ++x) {
            if (im.is_foreground(y, x)) {
                if (x < b.x0) b.x0 = x;
                if (x > b.x1) b.x1 = x;
                if (y < b.y0) b.y0 = y;
                if (y > b.y1) b.y1 = y;
            }
        }
    }
    return b;
}

Image shifted(const Image& im, int dx, int dy) {
    Image out;
    for (int y = 0; y < Image::kSize; ++y) {
        const int sy = y - dy;
        if (sy < 0 || sy >= Image::kSize) continue;
        for (int x = 0; x < Image::kSize; ++x) {
            const int sx = x - dx;
            if (sx < 0 || sx >= Image::kSize) continue;
            for (int c = 0; c < Image::kChannels; ++c)
                out.at(y, x, c) = im.at(sy, sx, c);
        }
    }
    return out;
}

} // namespace invar
