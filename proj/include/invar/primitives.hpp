// Procedural desk-scale stimuli. One primitive kind plus a parameter range
// plays the role of an object class; one sampled parameter set plays the
// role of an object.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "invar/mesh.hpp"

namespace invar {

// Kind-specific parameters, by name. Unset names fall back to per-kind
// defaults:
//   box:      ax, ay, az (half extents), subdiv, jitter
//   cylinder: radius, height, segments, rings, jitter
//   cone:     radius, height, segments, jitter
//   torus:    major, minor, segments_major, segments_minor, jitter
//   lshape:   arm_a, arm_b, thickness, depth, jitter
//   compound: parts (2..4), jitter
using PrimitiveParams = std::map<std::string, double>;

// Deterministic for fixed (kind, params, seed); output normalized to the
// unit bounding sphere. `jitter` > 0 adds seeded vertex noise so objects of
// one class differ in surface detail as well as proportions.
// Throws ConfigError for an unknown kind.
Mesh make_primitive(const std::string& kind, const PrimitiveParams& params, std::uint64_t seed);

// A class recipe: a kind plus per-parameter sampling intervals.
struct ProceduralClassSpec {
    std::string name;
    std::string kind;
    std::map<std::string, std::pair<double, double>> param_ranges;
};

// Samples `count` objects for the class. Object n gets object_id
// "<class>_<n>" and a parameter set drawn from Rng(mix(seed, name, n)).
std::vector<Mesh> sample_class_objects(const ProceduralClassSpec& spec, int count,
                                       std::uint64_t seed);

} // namespace invar
