// Triangle mesh container. Meshes are normalized to the unit bounding sphere
// before rendering; faces are triangles only (polygon input is fan-
// triangulated by the OBJ loader).
#pragma once

#include <array>
#include <string>
#include <vector>

#include "invar/geometry.hpp"

namespace invar {

struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces; // 0-based vertex indices
    std::string object_id;
    std::string class_id;
    int degenerate_dropped = 0; // zero-area / repeated-index faces removed

    bool empty() const { return faces.empty(); }
};

// Center on the axis-aligned bounding-box midpoint and scale so the farthest
// vertex sits at distance exactly 1 from the origin.
void normalize_to_unit_sphere(Mesh& mesh);

// Radius of the bounding sphere about the origin.
double bounding_radius(const Mesh& mesh);

// Remove faces with repeated vertex indices or (near-)zero area; increments
// mesh.degenerate_dropped for each removal.
void drop_degenerate_faces(Mesh& mesh, double min_area = 1e-14);

// Throws FormatError if any face references a vertex out of range.
void validate_mesh(const Mesh& mesh);

// Append `extra` (vertices re-indexed) onto `base`.
void append_mesh(Mesh& base, const Mesh& extra);

} // namespace invar
