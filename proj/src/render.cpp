#include "invar/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "invar/errors.hpp"

namespace invar {

namespace {

struct CameraBasis {
    Vec3 eye, right, up, forward;
};

CameraBasis make_basis(const Camera& cam) {
    CameraBasis b;
    b.eye = cam.position();
    b.forward = normalized(b.eye * -1.0); // look at the origin
    const Vec3 world_up{0.0, 0.0, 1.0};
    b.right = normalized(cross(b.forward, world_up));
    b.up = cross(b.right, b.forward);
    return b;
}

struct ScreenVertex {
    double x, y, depth;
};

} // namespace

Image render(const Mesh& mesh, const Camera& camera, const DirectionalLight& light) {
    if (mesh.empty()) throw EmptyGeometryError("render: mesh has no faces");

    const CameraBasis basis = make_basis(camera);
    const double focal = (Image::kSize / 2.0) / std::tan(deg_to_rad(camera.vertical_fov_deg) * 0.5);
    const Vec3 light_world = normalized(basis.right * light.direction_cam.x +
                                        basis.up * light.direction_cam.y +
                                        basis.forward * light.direction_cam.z);

    std::vector<ScreenVertex> screen(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Vec3 q = mesh.vertices[i] - basis.eye;
        const double zc = dot(q, basis.forward);
        const double xc = dot(q, basis.right);
        const double yc = dot(q, basis.up);
        // The normalized mesh sits well inside the frustum (distance >> 1),
        // so zc stays positive; guard anyway.
        const double z = std::max(zc, 1e-6);
        screen[i] = {Image::kSize / 2.0 + focal * xc / z,
                     Image::kSize / 2.0 - focal * yc / z, z};
    }

    Image im;
    std::vector<double> zbuf(static_cast<std::size_t>(Image::kSize) * Image::kSize,
                             std::numeric_limits<double>::max());

    for (const auto& f : mesh.faces) {
        const ScreenVertex& a = screen[f[0]];
        const ScreenVertex& b = screen[f[1]];
        const ScreenVertex& c = screen[f[2]];

        const double area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        if (area == 0.0) continue;

        // Flat Lambertian shade from the face normal; two-sided so open
        // meshes light correctly from either side.
        const Vec3& v0 = mesh.vertices[f[0]];
        const Vec3 n = normalized(cross(mesh.vertices[f[1]] - v0, mesh.vertices[f[2]] - v0));
        const double diffuse = std::abs(dot(n, light_world));
        const double intensity = light.ambient + (1.0 - light.ambient) * diffuse;
        const auto shade = static_cast<std::uint8_t>(
            std::lround(255.0 * std::min(std::max(intensity, 0.0), 1.0)));

        const int x0 = std::max(0, static_cast<int>(std::floor(std::min({a.x, b.x, c.x}))));
        const int x1 = std::min(Image::kSize - 1, static_cast<int>(std::ceil(std::max({a.x, b.x, c.x}))));
        const int y0 = std::max(0, static_cast<int>(std::floor(std::min({a.y, b.y, c.y}))));
        const int y1 = std::min(Image::kSize - 1, static_cast<int>(std::ceil(std::max({a.y, b.y, c.y}))));
        if (x0 > x1 || y0 > y1) continue;

        const double inv_area = 1.0 / area;
        for (int y = y0; y <= y1; ++y) {
            const double py = y + 0.5;
            for (int x = x0; x <= x1; ++x) {
                const double px = x + 0.5;
                // wa/wb/wc are the barycentric weights of vertices a/b/c.
                const double wc = ((b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x)) * inv_area;
                const double wa = ((c.x - b.x) * (py - b.y) - (c.y - b.y) * (px - b.x)) * inv_area;
                const double wb = 1.0 - wa - wc;
                if (wa < 0.0 || wb < 0.0 || wc < 0.0) continue;
                const double depth = wa * a.depth + wb * b.depth + wc * c.depth;
                const std::size_t idx = static_cast<std::size_t>(y) * Image::kSize + x;
                if (depth < zbuf[idx]) {
                    zbuf[idx] = depth;
                    im.at(y, x, 0) = shade;
                    im.at(y, x, 1) = shade;
                    im.at(y, x, 2) = shade;
                }
            }
        }
    }

    // Re-center the silhouette centroid onto the canvas center so the base
    // view is the translation anchor.
    if (foreground_count(im) > 0) {
        const auto cen = foreground_centroid(im);
        const int dx = static_cast<int>(std::llround(Image::kSize / 2.0 - cen[0]));
        const int dy = static_cast<int>(std::llround(Image::kSize / 2.0 - cen[1]));
        if (dx != 0 || dy != 0) im = shifted(im, dx, dy);
    }
    return im;
}

} // namespace invar
