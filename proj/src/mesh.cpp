#include "invar/mesh.hpp"

#include <algorithm>
#include <limits>

#include "invar/errors.hpp"

namespace invar {

void normalize_to_unit_sphere(Mesh& mesh) {
    if (mesh.vertices.empty()) return;
    Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
            std::numeric_limits<double>::max()};
    Vec3 hi{-std::numeric_limits<double>::max(), -std::numeric_limits<double>::max(),
            -std::numeric_limits<double>::max()};
    for (const Vec3& v : mesh.vertices) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        lo.z = std::min(lo.z, v.z);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
        hi.z = std::max(hi.z, v.z);
    }
    const Vec3 center = (lo + hi) * 0.5;
    double radius = 0.0;
    for (const Vec3& v : mesh.vertices) radius = std::max(radius, norm(v - center));
    if (radius <= 0.0) radius = 1.0; // all vertices coincide
    const double inv = 1.0 / radius;
    for (Vec3& v : mesh.vertices) v = (v - center) * inv;
}

double bounding_radius(const Mesh& mesh) {
    double r = 0.0;
    for (const Vec3& v : mesh.vertices) r = std::max(r, norm(v));
    return r;
}

void drop_degenerate_faces(Mesh& mesh, double min_area) {
    std::vector<std::array<int, 3>> kept;
    kept.reserve(mesh.faces.size());
    for (const auto& f : mesh.faces) {
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
            ++mesh.degenerate_dropped;
            continue;
        }
        const Vec3& a = mesh.vertices[f[0]];
        const Vec3& b = mesh.vertices[f[1]];
        const Vec3& c = mesh.vertices[f[2]];
        if (norm(cross(b - a, c - a)) < min_area) {
            ++mesh.degenerate_dropped;
            continue;
        }
        kept.push_back(f);
    }
    mesh.faces = std::move(kept);
}

void validate_mesh(const Mesh& mesh) {
    const int n = static_cast<int>(mesh.vertices.size());
    for (const auto& f : mesh.faces)
        for (int idx : f)
            if (idx < 0 || idx >= n)
                throw FormatError("face references vertex " + std::to_string(idx) +
                                  " outside [0, " + std::to_string(n) + ")");
}

void append_mesh(Mesh& base, const Mesh& extra) {
    const int offset = static_cast<int>(base.vertices.size());
    base.vertices.insert(base.vertices.end(), extra.vertices.begin(), extra.vertices.end());
    for (const auto& f : extra.faces)
        base.faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
}

} // namespace invar
