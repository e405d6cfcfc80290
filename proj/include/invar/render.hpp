// Deterministic software rasterizer: z-buffered triangle fill with flat
// Lambertian shading from a single directional headlight, on a black
// background. No textures, no shadows, no anti-aliasing.
#pragma once

#include "invar/camera.hpp"
#include "invar/image.hpp"
#include "invar/mesh.hpp"

namespace invar {

// Light direction expressed in the camera basis (x right, y up, z forward
// into the scene), so the light stays fixed relative to the camera as the
// viewpoint changes. `ambient` is the intensity floor so silhouettes are
// never pure black against the background.
struct DirectionalLight {
    Vec3 direction_cam{0.0, 0.0, 1.0};
    double ambient = 0.15;
};

// Renders a normalized mesh to the 128x128x3 canvas. The foreground
// silhouette centroid is re-centered onto the canvas center by an integer
// shift, so the fixed-pose view is the anchor every 2D transform measures
// against. Bit-exact for identical inputs. Throws EmptyGeometryError for a
// mesh without faces.
Image render(const Mesh& mesh, const Camera& camera, const DirectionalLight& light = {});

} // namespace invar
