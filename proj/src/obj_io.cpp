#include "invar/obj_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "invar/errors.hpp"

namespace invar {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

// Resolve a 1-based or negative OBJ index against the current vertex count.
int resolve_index(long long raw, int n_vertices, int line) {
    if (raw == 0) fail(line, "vertex index 0 is invalid (indices are 1-based)");
    long long idx = raw > 0 ? raw - 1 : n_vertices + raw;
    if (idx < 0 || idx >= n_vertices)
        fail(line, "vertex index " + std::to_string(raw) + " out of range");
    return static_cast<int>(idx);
}

} // namespace

Mesh load_obj(const std::string& path) {
    if (!std::filesystem::exists(path)) throw IoError("no such file: " + path);
    std::ifstream in(path);
    if (!in) throw IoError("cannot read: " + path);

    Mesh mesh;
    mesh.object_id = std::filesystem::path(path).stem().string();

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag.empty() || tag[0] == '#') continue;

        if (tag == "v") {
            Vec3 v;
            if (!(ss >> v.x >> v.y >> v.z)) fail(line_no, "vertex needs 3 coordinates");
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> poly;
            std::string tok;
            while (ss >> tok) {
                // Take the position index before any '/'.
                const auto slash = tok.find('/');
                const std::string head = slash == std::string::npos ? tok : tok.substr(0, slash);
                long long raw = 0;
                try {
                    raw = std::stoll(head);
                } catch (const std::exception&) {
                    fail(line_no, "bad face token '" + tok + "'");
                }
                poly.push_back(resolve_index(raw, static_cast<int>(mesh.vertices.size()), line_no));
            }
            if (poly.size() < 3) fail(line_no, "face needs at least 3 vertices");
            for (std::size_t i = 1; i + 1 < poly.size(); ++i)
                mesh.faces.push_back({poly[0], poly[static_cast<int>(i)], poly[static_cast<int>(i) + 1]});
        }
        // vn / vt / o / g / s / mtllib / usemtl: ignored
    }

    validate_mesh(mesh);
    drop_degenerate_faces(mesh);
    normalize_to_unit_sphere(mesh);
    return mesh;
}

} // namespace invar
