#include "invar/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

#include "invar/errors.hpp"

namespace invar {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

void write_png_raw(const std::string& path, const RawImage& im) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng write error: " + path);
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, im.width, im.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_bytep> rows(im.height);
    for (int y = 0; y < im.height; ++y)
        rows[y] = const_cast<png_bytep>(im.rgb.data() + static_cast<std::size_t>(y) * im.width * 3);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void write_png(const std::string& path, const Image& im) {
    RawImage raw;
    raw.width = Image::kSize;
    raw.height = Image::kSize;
    raw.rgb = im.px;
    write_png_raw(path, raw);
}

RawImage read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open: " + path);

    unsigned char sig[8];
    if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
        throw FormatError("not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError("libpng read error: " + path);
    }

    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    // Normalize every input to 8-bit RGB.
    png_set_strip_16(png);
    png_set_packing(png);
    const png_byte color = png_get_color_type(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    if (png_get_bit_depth(png, info) < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    RawImage out;
    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    out.rgb.assign(static_cast<std::size_t>(out.width) * out.height * 3, 0);

    std::vector<png_bytep> rows(out.height);
    for (int y = 0; y < out.height; ++y)
        rows[y] = out.rgb.data() + static_cast<std::size_t>(y) * out.width * 3;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

Image to_canvas(const RawImage& raw) {
    if (raw.width <= 0 || raw.height <= 0)
        throw FormatError("empty image");
    Image out;
    if (raw.width == Image::kSize && raw.height == Image::kSize) {
        out.px = raw.rgb;
        return out;
    }
    const double sx = static_cast<double>(raw.width) / Image::kSize;
    const double sy = static_cast<double>(raw.height) / Image::kSize;
    for (int y = 0; y < Image::kSize; ++y) {
        for (int x = 0; x < Image::kSize; ++x) {
            const double fx = (x + 0.5) * sx - 0.5;
            const double fy = (y + 0.5) * sy - 0.5;
            const int x0 = static_cast<int>(std::floor(fx));
            const int y0 = static_cast<int>(std::floor(fy));
            const double ax = fx - x0;
            const double ay = fy - y0;
            for (int c = 0; c < 3; ++c) {
                double acc = 0.0;
                for (int dy = 0; dy <= 1; ++dy) {
                    for (int dx = 0; dx <= 1; ++dx) {
                        const int xx = std::min(std::max(x0 + dx, 0), raw.width - 1);
                        const int yy = std::min(std::max(y0 + dy, 0), raw.height - 1);
                        const double w = (dx ? ax : 1.0 - ax) * (dy ? ay : 1.0 - ay);
                        acc += w * raw.rgb[(static_cast<std::size_t>(yy) * raw.width + xx) * 3 + c];
                    }
                }
                out.at(y, x, c) = static_cast<std::uint8_t>(std::lround(std::min(std::max(acc, 0.0), 255.0)));
            }
        }
    }
    return out;
}

} // namespace invar
