// Viewpoints on the camera sphere. Every camera points at the origin, where
// the normalized object sits.
#pragma once

#include <vector>

#include "invar/geometry.hpp"

namespace invar {

struct Camera {
    double inclination_deg = 80.0; // angle from the +z pole
    double azimuth_deg = 36.0;     // angle around the pole, [0, 360)
    double distance = 5.0;         // model-space units from the origin
    double vertical_fov_deg = 45.0;

    Vec3 position() const {
        const double inc = deg_to_rad(inclination_deg);
        const double az = deg_to_rad(azimuth_deg);
        return {distance * std::sin(inc) * std::cos(az),
                distance * std::sin(inc) * std::sin(az),
                distance * std::cos(inc)};
    }

    bool operator==(const Camera& o) const {
        return inclination_deg == o.inclination_deg && azimuth_deg == o.azimuth_deg &&
               distance == o.distance && vertical_fov_deg == o.vertical_fov_deg;
    }
};

// Inclusive inclination endpoints, azimuth covering [0, 360) exclusive of
// 360. Cameras are returned inclination-outer, azimuth-inner (row-major).
// Throws ConfigError when a step is <= 0 or does not divide its range.
std::vector<Camera> camera_grid(double incl_min_deg, double incl_max_deg,
                                double incl_step_deg, double azim_step_deg);

} // namespace invar
