#include "lrsaa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrsaa/kernels/box_kernels.hpp"

namespace lrsaa {

bool box_valid(const Box& b) {
    if (!std::isfinite(b.xmin) || !std::isfinite(b.ymin) || !std::isfinite(b.xmax) ||
        !std::isfinite(b.ymax)) {
        return false;
    }
    return b.xmax > b.xmin && b.ymax > b.ymin;
}

Box make_box(double xmin, double ymin, double xmax, double ymax) {
    Box b{xmin, ymin, xmax, ymax};
    if (!box_valid(b)) {
        fail("InvalidBox", "box [" + std::to_string(xmin) + "," + std::to_string(ymin) + "," +
                               std::to_string(xmax) + "," + std::to_string(ymax) +
                               "] must be finite with positive extent");
    }
    return b;
}

double area(const Box& b) {
    return (b.xmax - b.xmin) * (b.ymax - b.ymin);
}

double iou(const Box& a, const Box& b) {
    return kernels::iou_core(a.xmin, a.ymin, a.xmax, a.ymax, b.xmin, b.ymin, b.xmax, b.ymax);
}

Box enclosing(const Box& a, const Box& b) {
    return Box{std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin), std::max(a.xmax, b.xmax),
               std::max(a.ymax, b.ymax)};
}

double eiou(const Box& a, const Box& b) {
    return kernels::eiou_core(a.xmin, a.ymin, a.xmax, a.ymax, b.xmin, b.ymin, b.xmax, b.ymax);
}

Box remap_to_global(const TileWindow& tile, const Box& b, int image_w, int image_h) {
    Box g{b.xmin + tile.x0, b.ymin + tile.y0, b.xmax + tile.x0, b.ymax + tile.y0};
    g.xmin = std::max(g.xmin, 0.0);
    g.ymin = std::max(g.ymin, 0.0);
    g.xmax = std::min(g.xmax, static_cast<double>(image_w));
    g.ymax = std::min(g.ymax, static_cast<double>(image_h));
    if (!(g.xmax > g.xmin) || !(g.ymax > g.ymin)) {
        fail("ClippedToNothing", "box from tile " + std::to_string(tile.id) +
                                     " lies outside the " + std::to_string(image_w) + "x" +
                                     std::to_string(image_h) + " image");
    }
    return g;
}

} // namespace lrsaa
