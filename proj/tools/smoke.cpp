// Temporary smoke harness while the library grows.
#include <cstdio>

#include "invar/primitives.hpp"
#include "invar/png_io.hpp"
#include "invar/render.hpp"
#include "invar/transforms.hpp"

int main() {
    using namespace invar;
    for (const char* kind : {"box", "cylinder", "cone", "torus", "lshape", "compound"}) {
        Mesh m = make_primitive(kind, {{"jitter", 0.02}}, 7);
        Image im = render(m, fixed_pose_camera());
        const auto cen = foreground_centroid(im);
        const auto bbox = foreground_bbox(im);
        std::printf("%-9s verts=%5zu faces=%5zu fg=%5d centroid=(%.2f,%.2f) bbox=%dx%d\n", kind,
                    m.vertices.size(), m.faces.size(), foreground_count(im), cen[0], cen[1],
                    bbox.width(), bbox.height());
        write_png(std::string("/tmp/smoke_") + kind + ".png", im);
    }
    // A rotated and a translated variant.
    Mesh m = make_primitive("lshape", {}, 3);
    Image base = render(m, fixed_pose_camera());
    TransformInstance rot;
    rot.kind = TransformKind::rotation;
    rot.value = 42.0;
    write_png("/tmp/smoke_rot.png", apply_2d(base, rot));
    TransformInstance tr;
    tr.kind = TransformKind::translation;
    tr.cx = 90;
    tr.cy = 40;
    Image moved = apply_2d(base, tr);
    const auto cen = foreground_centroid(moved);
    std::printf("translated centroid=(%.2f,%.2f)\n", cen[0], cen[1]);
    write_png("/tmp/smoke_tr.png", moved);
    return 0;
}
