// The stochastic transformation schemes applied to stimuli: rotation, scale,
// translation, brightness, contrast in 2D image space, viewpoint at render
// time, plus the identity baselines each invariance measurement compares
// against.
#pragma once

#include <string>
#include <vector>

#include "invar/camera.hpp"
#include "invar/image.hpp"

namespace invar {

class Rng;

enum class TransformKind {
    none,
    rotation,
    scale,
    translation,
    brightness,
    contrast,
    viewpoint,
};

const std::vector<TransformKind>& all_transform_kinds(); // the six real kinds
std::string to_string(TransformKind kind);
TransformKind transform_kind_from_string(const std::string& name); // ConfigError on unknown

struct Interval {
    double lo = 0.0, hi = 0.0;
};

struct Rect {
    double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
};

struct CameraGridSpec {
    double incl_min = 30.0, incl_max = 110.0, incl_step = 10.0, azim_step = 36.0;
    std::vector<Camera> cameras() const {
        return camera_grid(incl_min, incl_max, incl_step, azim_step);
    }
};

// Admissible parameter sets per kind. The 2D photometric/geometric intervals
// are configurable defaults; the viewpoint range is the camera grid.
struct TransformRanges {
    Interval rotation_deg{-180.0, 180.0};
    Interval scale_factor{0.5, 1.5};
    Rect translation_center_px{32.0, 96.0, 32.0, 96.0};
    Interval brightness_factor{0.4, 1.6};
    Interval contrast_factor{0.4, 1.6};
    CameraGridSpec viewpoint;
};

// One realized transformation. `value` holds the scalar theta for rotation
// (degrees), scale, brightness and contrast; translation uses (cx, cy);
// viewpoint uses `camera`.
struct TransformInstance {
    TransformKind kind = TransformKind::none;
    double value = 0.0;
    double cx = 0.0, cy = 0.0;
    Camera camera;

    bool operator==(const TransformInstance& o) const {
        return kind == o.kind && value == o.value && cx == o.cx && cy == o.cy &&
               camera == o.camera;
    }
};

std::string transform_to_json(const TransformInstance& inst);
TransformInstance transform_from_json(const std::string& json_text);

// Theta drawn uniformly from the kind's range (viewpoint: uniform over the
// camera grid). Deterministic given the rng state.
TransformInstance sample_transform(TransformKind kind, const TransformRanges& ranges, Rng& rng);

// The baseline parameters: scale/brightness/contrast 1, rotation 0 deg,
// translation (64, 64), viewpoint camera (80 deg, 36 deg). ConfigError for
// kind none.
TransformInstance baseline_instance(TransformKind kind);

// The camera used whenever the transformation under study is not viewpoint.
Camera fixed_pose_camera();

// Applies a 2D instance (not viewpoint) to a 128x128x3 image. Baselines are
// bitwise identities. Throws OutOfCanvasError when the requested theta would
// push the foreground outside the canvas.
Image apply_2d(const Image& image, const TransformInstance& instance);

} // namespace invar
