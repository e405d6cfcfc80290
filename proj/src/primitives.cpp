#include "invar/primitives.hpp"

#include <cmath>
#include <cstdio>

#include "invar/errors.hpp"
#include "invar/rng.hpp"

namespace invar {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double get(const PrimitiveParams& p, const std::string& key, double fallback) {
    const auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

// Grid-subdivided cuboid with welded vertices so jitter never opens cracks.
Mesh build_box(double ax, double ay, double az, int subdiv) {
    Mesh m;
    const int n = std::max(1, subdiv);
    std::map<std::array<int, 3>, int> weld; // lattice coordinate -> vertex index

    auto vertex_at = [&](int ix, int iy, int iz) {
        const std::array<int, 3> key{ix, iy, iz};
        const auto it = weld.find(key);
        if (it != weld.end()) return it->second;
        const Vec3 v{ax * (2.0 * ix / n - 1.0), ay * (2.0 * iy / n - 1.0),
                     az * (2.0 * iz / n - 1.0)};
        m.vertices.push_back(v);
        const int idx = static_cast<int>(m.vertices.size()) - 1;
        weld.emplace(key, idx);
        return idx;
    };

    // Each face is an n x n quad grid; (u, v) map onto lattice coordinates.
    auto emit_face = [&](auto&& to_lattice) {
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                const auto p00 = to_lattice(u, v);
                const auto p10 = to_lattice(u + 1, v);
                const auto p01 = to_lattice(u, v + 1);
                const auto p11 = to_lattice(u + 1, v + 1);
                const int a = vertex_at(p00[0], p00[1], p00[2]);
                const int b = vertex_at(p10[0], p10[1], p10[2]);
                const int c = vertex_at(p11[0], p11[1], p11[2]);
                const int d = vertex_at(p01[0], p01[1], p01[2]);
                m.faces.push_back({a, b, c});
                m.faces.push_back({a, c, d});
            }
        }
    };

    emit_face([&](int u, int v) { return std::array<int, 3>{u, v, 0}; }); // z-
    emit_face([&](int u, int v) { return std::array<int, 3>{u, v, n}; }); // z+
    emit_face([&](int u, int v) { return std::array<int, 3>{u, 0, v}; }); // y-
    emit_face([&](int u, int v) { return std::array<int, 3>{u, n, v}; }); // y+
    emit_face([&](int u, int v) { return std::array<int, 3>{0, u, v}; }); // x-
    emit_face([&](int u, int v) { return std::array<int, 3>{n, u, v}; }); // x+
    return m;
}

Mesh build_cylinder(double radius, double height, int segments, int rings) {
    Mesh m;
    const int ns = std::max(3, segments);
    const int nr = std::max(1, rings);
    // Side rings.
    for (int r = 0; r <= nr; ++r) {
        const double z = height * (static_cast<double>(r) / nr - 0.5);
        for (int s = 0; s < ns; ++s) {
            const double a = kTau * s / ns;
            m.vertices.push_back({radius * std::cos(a), radius * std::sin(a), z});
        }
    }
    for (int r = 0; r < nr; ++r) {
        for (int s = 0; s < ns; ++s) {
            const int s2 = (s + 1) % ns;
            const int a = r * ns + s, b = r * ns + s2;
            const int c = (r + 1) * ns + s2, d = (r + 1) * ns + s;
            m.faces.push_back({a, b, c});
            m.faces.push_back({a, c, d});
        }
    }
    // Caps: fan from center vertices.
    const int bottom_center = static_cast<int>(m.vertices.size());
    m.vertices.push_back({0.0, 0.0, -height * 0.5});
    const int top_center = static_cast<int>(m.vertices.size());
    m.vertices.push_back({0.0, 0.0, height * 0.5});
    for (int s = 0; s < ns; ++s) {
        const int s2 = (s + 1) % ns;
        m.faces.push_back({bottom_center, s2, s});
        m.faces.push_back({top_center, nr * ns + s, nr * ns + s2});
    }
    return m;
}

Mesh build_cone(double radius, double height, int segments) {
    Mesh m;
    const int ns = std::max(3, segments);
    for (int s = 0; s < ns; ++s) {
        const double a = kTau * s / ns;
        m.vertices.push_back({radius * std::cos(a), radius * std::sin(a), -height * 0.5});
    }
    const int apex = static_cast<int>(m.vertices.size());
    m.vertices.push_back({0.0, 0.0, height * 0.5});
    const int base_center = static_cast<int>(m.vertices.size());
    m.vertices.push_back({0.0, 0.0, -height * 0.5});
    for (int s = 0; s < ns; ++s) {
        const int s2 = (s + 1) % ns;
        m.faces.push_back({apex, s, s2});
        m.faces.push_back({base_center, s2, s});
    }
    return m;
}

Mesh build_torus(double major, double minor, int nmaj, int nmin) {
    Mesh m;
    const int na = std::max(3, nmaj);
    const int nb = std::max(3, nmin);
    for (int i = 0; i < na; ++i) {
        const double u = kTau * i / na;
        for (int j = 0; j < nb; ++j) {
            const double v = kTau * j / nb;
            const double r = major + minor * std::cos(v);
            m.vertices.push_back({r * std::cos(u), r * std::sin(u), minor * std::sin(v)});
        }
    }
    for (int i = 0; i < na; ++i) {
        const int i2 = (i + 1) % na;
        for (int j = 0; j < nb; ++j) {
            const int j2 = (j + 1) % nb;
            const int a = i * nb + j, b = i2 * nb + j;
            const int c = i2 * nb + j2, d = i * nb + j2;
            m.faces.push_back({a, b, c});
            m.faces.push_back({a, c, d});
        }
    }
    return m;
}

// L-shaped prism. Cross-section vertices in xz, extruded along y. The fan
// from the reflex corner tiles the L exactly.
Mesh build_lshape(double arm_a, double arm_b, double thickness, double depth) {
    Mesh m;
    const double t = thickness;
    const std::array<std::array<double, 2>, 6> poly{{{0.0, 0.0},
                                                     {arm_a, 0.0},
                                                     {arm_a, t},
                                                     {t, t},
                                                     {t, arm_b},
                                                     {0.0, arm_b}}};
    for (int side = 0; side <= 1; ++side) {
        const double y = depth * (side - 0.5);
        for (const auto& p : poly) m.vertices.push_back({p[0], y, p[1]});
    }
    // Caps: fan from the reflex corner (index 3).
    const std::array<std::array<int, 3>, 4> cap{{{3, 4, 5}, {3, 5, 0}, {3, 0, 1}, {3, 1, 2}}};
    for (const auto& tri : cap) {
        m.faces.push_back({tri[0], tri[2], tri[1]});             // y- cap
        m.faces.push_back({tri[0] + 6, tri[1] + 6, tri[2] + 6}); // y+ cap
    }
    // Side walls.
    for (int i = 0; i < 6; ++i) {
        const int j = (i + 1) % 6;
        m.faces.push_back({i, j, j + 6});
        m.faces.push_back({i, j + 6, i + 6});
    }
    return m;
}

void jitter_vertices(Mesh& m, double amount, Rng& rng) {
    if (amount <= 0.0) return;
    for (Vec3& v : m.vertices)
        v += Vec3{rng.normal(), rng.normal(), rng.normal()} * amount;
}

Mesh build_kind(const std::string& kind, const PrimitiveParams& p, Rng& rng);

Mesh build_compound(const PrimitiveParams& p, Rng& rng) {
    const int requested = static_cast<int>(get(p, "parts", 0.0));
    const int parts = requested >= 2 && requested <= 4 ? requested : 2 + rng.uniform_int(3);
    static const char* kKinds[4] = {"box", "cylinder", "cone", "torus"};
    Mesh m;
    for (int i = 0; i < parts; ++i) {
        const std::string kind = kKinds[rng.uniform_int(4)];
        Mesh part = build_kind(kind, {}, rng);
        normalize_to_unit_sphere(part);
        const double scale = rng.uniform(0.35, 0.8);
        const Vec3 offset{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
        for (Vec3& v : part.vertices) v = v * scale + offset;
        append_mesh(m, part);
    }
    return m;
}

Mesh build_kind(const std::string& kind, const PrimitiveParams& p, Rng& rng) {
    if (kind == "box") {
        return build_box(get(p, "ax", 1.0), get(p, "ay", 1.0), get(p, "az", 1.0),
                         static_cast<int>(get(p, "subdiv", 3.0)));
    }
    if (kind == "cylinder") {
        return build_cylinder(get(p, "radius", 0.5), get(p, "height", 1.6),
                              static_cast<int>(get(p, "segments", 24.0)),
                              static_cast<int>(get(p, "rings", 4.0)));
    }
    if (kind == "cone") {
        return build_cone(get(p, "radius", 0.7), get(p, "height", 1.5),
                          static_cast<int>(get(p, "segments", 24.0)));
    }
    if (kind == "torus") {
        return build_torus(get(p, "major", 1.0), get(p, "minor", 0.3),
                           static_cast<int>(get(p, "segments_major", 24.0)),
                           static_cast<int>(get(p, "segments_minor", 12.0)));
    }
    if (kind == "lshape") {
        return build_lshape(get(p, "arm_a", 1.4), get(p, "arm_b", 1.0),
                            get(p, "thickness", 0.45), get(p, "depth", 0.5));
    }
    if (kind == "compound") {
        return build_compound(p, rng);
    }
    throw ConfigError("make_primitive: unknown kind '" + kind + "'");
}

} // namespace

Mesh make_primitive(const std::string& kind, const PrimitiveParams& params, std::uint64_t seed) {
    Rng rng(Rng::mix(seed, "primitive:" + kind));
    Mesh m = build_kind(kind, params, rng);
    jitter_vertices(m, get(params, "jitter", 0.0), rng);
    drop_degenerate_faces(m);
    normalize_to_unit_sphere(m);
    m.class_id = kind;
    return m;
}

std::vector<Mesh> sample_class_objects(const ProceduralClassSpec& spec, int count,
                                       std::uint64_t seed) {
    if (count < 1) throw ConfigError("sample_class_objects: count must be >= 1");
    std::vector<Mesh> out;
    out.reserve(count);
    for (int n = 0; n < count; ++n) {
        char tag[64];
        std::snprintf(tag, sizeof(tag), "%s:%d", spec.name.c_str(), n);
        const std::uint64_t obj_seed = Rng::mix(seed, tag);
        Rng rng(obj_seed);
        PrimitiveParams params;
        for (const auto& [key, range] : spec.param_ranges)
            params[key] = rng.uniform(range.first, range.second);
        Mesh m = make_primitive(spec.kind, params, obj_seed);
        char oid[96];
        std::snprintf(oid, sizeof(oid), "%s_%03d", spec.name.c_str(), n);
        m.object_id = oid;
        m.class_id = spec.name;
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace invar
