// Wavefront-style OBJ reader: v/f records, 1-based (optionally negative)
// indices, fan triangulation for polygons. Everything else is ignored.
#pragma once

#include <string>

#include "invar/mesh.hpp"

namespace invar {

// Loads, triangulates, drops degenerate faces, and normalizes to the unit
// bounding sphere. Throws IoError for a missing file and FormatError (with
// the offending line number) for malformed records.
Mesh load_obj(const std::string& path);

} // namespace invar
