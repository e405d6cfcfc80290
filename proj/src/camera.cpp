#include "invar/camera.hpp"

#include <cmath>

#include "invar/errors.hpp"

namespace invar {

std::vector<Camera> camera_grid(double incl_min_deg, double incl_max_deg,
                                double incl_step_deg, double azim_step_deg) {
    if (incl_step_deg <= 0.0 || azim_step_deg <= 0.0)
        throw ConfigError("camera_grid: steps must be positive");
    if (incl_max_deg < incl_min_deg)
        throw ConfigError("camera_grid: inclination range is inverted");

    const double incl_span = incl_max_deg - incl_min_deg;
    const double n_incl_f = incl_span / incl_step_deg;
    const double n_azim_f = 360.0 / azim_step_deg;
    const long n_incl = std::lround(n_incl_f);
    const long n_azim = std::lround(n_azim_f);
    if (std::abs(n_incl_f - n_incl) > 1e-9)
        throw ConfigError("camera_grid: inclination step does not divide the range");
    if (std::abs(n_azim_f - n_azim) > 1e-9)
        throw ConfigError("camera_grid: azimuth step does not divide 360");

    std::vector<Camera> cams;
    cams.reserve(static_cast<std::size_t>(n_incl + 1) * n_azim);
    for (long i = 0; i <= n_incl; ++i) {
        for (long j = 0; j < n_azim; ++j) {
            Camera cam;
            cam.inclination_deg = incl_min_deg + static_cast<double>(i) * incl_step_deg;
            cam.azimuth_deg = static_cast<double>(j) * azim_step_deg;
            cams.push_back(cam);
        }
    }
    return cams;
}

} // namespace invar
