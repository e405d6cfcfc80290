#include "invar/transforms.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "invar/errors.hpp"
#include "invar/rng.hpp"

namespace invar {

namespace {

using nlohmann::json;

// Inverse-mapped bilinear sample with black outside the canvas.
double sample_bilinear(const Image& im, double sx, double sy, int c) {
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    const double ax = sx - x0;
    const double ay = sy - y0;
    double acc = 0.0;
    for (int dy = 0; dy <= 1; ++dy) {
        const int yy = y0 + dy;
        if (yy < 0 || yy >= Image::kSize) continue;
        for (int dx = 0; dx <= 1; ++dx) {
            const int xx = x0 + dx;
            if (xx < 0 || xx >= Image::kSize) continue;
            acc += (dx ? ax : 1.0 - ax) * (dy ? ay : 1.0 - ay) * im.at(yy, xx, c);
        }
    }
    return acc;
}

std::uint8_t clip255(double v) {
    return static_cast<std::uint8_t>(std::lround(std::min(std::max(v, 0.0), 255.0)));
}

Image warp_about_center(const Image& im, double cos_t, double sin_t, double inv_scale) {
    const double c = Image::kSize / 2.0;
    Image out;
    for (int y = 0; y < Image::kSize; ++y) {
        const double py = y + 0.5 - c;
        for (int x = 0; x < Image::kSize; ++x) {
            const double px = x + 0.5 - c;
            // Inverse map: rotate by -theta, scale by 1/factor.
            const double sx = (cos_t * px + sin_t * py) * inv_scale + c - 0.5;
            const double sy = (-sin_t * px + cos_t * py) * inv_scale + c - 0.5;
            for (int ch = 0; ch < Image::kChannels; ++ch)
                out.at(y, x, ch) = clip255(sample_bilinear(im, sx, sy, ch));
        }
    }
    return out;
}

} // namespace

const std::vector<TransformKind>& all_transform_kinds() {
    static const std::vector<TransformKind> kinds{
        TransformKind::rotation,   TransformKind::scale,    TransformKind::translation,
        TransformKind::brightness, TransformKind::contrast, TransformKind::viewpoint,
    };
    return kinds;
}

std::string to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::none: return "none";
        case TransformKind::rotation: return "rotation";
        case TransformKind::scale: return "scale";
        case TransformKind::translation: return "translation";
        case TransformKind::brightness: return "brightness";
        case TransformKind::contrast: return "contrast";
        case TransformKind::viewpoint: return "viewpoint";
    }
    return "none";
}

TransformKind transform_kind_from_string(const std::string& name) {
    if (name == "none") return TransformKind::none;
    if (name == "rotation") return TransformKind::rotation;
    if (name == "scale") return TransformKind::scale;
    if (name == "translation") return TransformKind::translation;
    if (name == "brightness") return TransformKind::brightness;
    if (name == "contrast") return TransformKind::contrast;
    if (name == "viewpoint") return TransformKind::viewpoint;
    throw ConfigError("unknown transform kind '" + name + "'");
}

std::string transform_to_json(const TransformInstance& inst) {
    json j;
    j["kind"] = to_string(inst.kind);
    switch (inst.kind) {
        case TransformKind::rotation: j["deg"] = inst.value; break;
        case TransformKind::scale:
        case TransformKind::brightness:
        case TransformKind::contrast: j["factor"] = inst.value; break;
        case TransformKind::translation:
            j["cx"] = inst.cx;
            j["cy"] = inst.cy;
            break;
        case TransformKind::viewpoint:
            j["incl"] = inst.camera.inclination_deg;
            j["azim"] = inst.camera.azimuth_deg;
            break;
        case TransformKind::none: break;
    }
    return j.dump();
}

TransformInstance transform_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad transform json: ") + e.what());
    }
    TransformInstance inst;
    inst.kind = transform_kind_from_string(j.at("kind").get<std::string>());
    switch (inst.kind) {
        case TransformKind::rotation: inst.value = j.at("deg").get<double>(); break;
        case TransformKind::scale:
        case TransformKind::brightness:
        case TransformKind::contrast: inst.value = j.at("factor").get<double>(); break;
        case TransformKind::translation:
            inst.cx = j.at("cx").get<double>();
            inst.cy = j.at("cy").get<double>();
            break;
        case TransformKind::viewpoint:
            inst.camera.inclination_deg = j.at("incl").get<double>();
            inst.camera.azimuth_deg = j.at("azim").get<double>();
            break;
        case TransformKind::none: break;
    }
    return inst;
}

TransformInstance sample_transform(TransformKind kind, const TransformRanges& ranges, Rng& rng) {
    TransformInstance inst;
    inst.kind = kind;
    switch (kind) {
        case TransformKind::none: break;
        case TransformKind::rotation:
            inst.value = rng.uniform(ranges.rotation_deg.lo, ranges.rotation_deg.hi);
            break;
        case TransformKind::scale:
            inst.value = rng.uniform(ranges.scale_factor.lo, ranges.scale_factor.hi);
            break;
        case TransformKind::brightness:
            inst.value = rng.uniform(ranges.brightness_factor.lo, ranges.brightness_factor.hi);
            break;
        case TransformKind::contrast:
            inst.value = rng.uniform(ranges.contrast_factor.lo, ranges.contrast_factor.hi);
            break;
        case TransformKind::translation:
            inst.cx = rng.uniform(ranges.translation_center_px.x_lo, ranges.translation_center_px.x_hi);
            inst.cy = rng.uniform(ranges.translation_center_px.y_lo, ranges.translation_center_px.y_hi);
            break;
        case TransformKind::viewpoint: {
            const auto cams = ranges.viewpoint.cameras();
            if (cams.empty()) throw ConfigError("sample_transform: empty viewpoint grid");
            inst.camera = cams[rng.uniform_int(static_cast<int>(cams.size()))];
            break;
        }
    }
    return inst;
}

TransformInstance baseline_instance(TransformKind kind) {
    if (kind == TransformKind::none)
        throw ConfigError("baseline_instance: kind 'none' has no baseline");
    TransformInstance inst;
    inst.kind = kind;
    switch (kind) {
        case TransformKind::rotation: inst.value = 0.0; break;
        case TransformKind::scale:
        case TransformKind::brightness:
        case TransformKind::contrast: inst.value = 1.0; break;
        case TransformKind::translation:
            inst.cx = 64.0;
            inst.cy = 64.0;
            break;
        case TransformKind::viewpoint: inst.camera = fixed_pose_camera(); break;
        case TransformKind::none: break;
    }
    return inst;
}

Camera fixed_pose_camera() {
    Camera cam;
    cam.inclination_deg = 80.0;
    cam.azimuth_deg = 36.0;
    return cam;
}

Image apply_2d(const Image& image, const TransformInstance& instance) {
    switch (instance.kind) {
        case TransformKind::none: return image;

        case TransformKind::rotation: {
            if (instance.value == 0.0) return image;
            const double t = deg_to_rad(instance.value);
            return warp_about_center(image, std::cos(t), std::sin(t), 1.0);
        }

        case TransformKind::scale: {
            const double f = instance.value;
            if (f == 1.0) return image;
            if (f <= 0.0) throw ConfigError("apply_2d: scale factor must be positive");
            const auto bbox = foreground_bbox(image);
            if (!bbox.empty()) {
                const double c = Image::kSize / 2.0;
                const double reach = std::max({std::abs(bbox.x0 - c), std::abs(bbox.x1 + 1 - c),
                                               std::abs(bbox.y0 - c), std::abs(bbox.y1 + 1 - c)});
                if (reach * f > Image::kSize / 2.0)
                    throw OutOfCanvasError("apply_2d: scaled object would leave the canvas");
            }
            return warp_about_center(image, 1.0, 0.0, 1.0 / f);
        }

        case TransformKind::translation: {
            const auto cen = foreground_centroid(image);
            const int dx = static_cast<int>(std::llround(instance.cx - cen[0]));
            const int dy = static_cast<int>(std::llround(instance.cy - cen[1]));
            if (dx == 0 && dy == 0) return image;
            const auto bbox = foreground_bbox(image);
            if (!bbox.empty()) {
                if (bbox.x0 + dx < 0 || bbox.x1 + dx >= Image::kSize || bbox.y0 + dy < 0 ||
                    bbox.y1 + dy >= Image::kSize)
                    throw OutOfCanvasError("apply_2d: translated object would leave the canvas");
            }
            return shifted(image, dx, dy);
        }

        case TransformKind::brightness: {
            const double f = instance.value;
            if (f == 1.0) return image;
            Image out = image;
            for (auto& v : out.px) v = clip255(static_cast<double>(v) * f);
            return out;
        }

        case TransformKind::contrast: {
            const double f = instance.value;
            if (f == 1.0) return image;
            // Pivot on the foreground mean; background pixels stay black.
            double sum = 0.0;
            long count = 0;
            for (int y = 0; y < Image::kSize; ++y) {
                for (int x = 0; x < Image::kSize; ++x) {
                    if (!image.is_foreground(y, x)) continue;
                    for (int c = 0; c < Image::kChannels; ++c) sum += image.at(y, x, c);
                    count += Image::kChannels;
                }
            }
            if (count == 0) return image;
            const double mu = sum / static_cast<double>(count);
            Image out = image;
            for (int y = 0; y < Image::kSize; ++y) {
                for (int x = 0; x < Image::kSize; ++x) {
                    if (!image.is_foreground(y, x)) continue;
                    for (int c = 0; c < Image::kChannels; ++c)
                        out.at(y, x, c) = clip255((image.at(y, x, c) - mu) * f + mu);
                }
            }
            return out;
        }

        case TransformKind::viewpoint:
            throw ConfigError("apply_2d: viewpoint is realized at render time");
    }
    return image;
}

} // namespace invar
