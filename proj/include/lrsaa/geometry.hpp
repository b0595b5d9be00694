#pragma once

#include "lrsaa/error.hpp"

namespace lrsaa {

// Axis-aligned box in continuous pixel coordinates. Origin at the top-left
// corner of the image, x grows rightward, y grows downward. A valid box has
// finite coordinates and strictly positive extent; parsers reject anything
// else, so the operations below never see degenerate input.
struct Box {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }

    bool operator==(const Box&) const = default;
};

bool box_valid(const Box& b);

// Validating constructor; throws InvalidBox.
Box make_box(double xmin, double ymin, double xmax, double ymax);

// Integer pixel window of a tile plan, fully inside its image:
// x0,y0 >= 0, w,h >= 1, x0+w <= image_w, y0+h <= image_h.
struct TileWindow {
    int id = 0;
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;

    bool operator==(const TileWindow&) const = default;
};

double area(const Box& b);

// Intersection over union, in [0,1]; 0 for disjoint boxes.
double iou(const Box& a, const Box& b);

// Smallest axis-aligned box containing both.
Box enclosing(const Box& a, const Box& b);

// IoU minus center/width/height penalties normalized by the enclosing box.
// Range (-3, 1]; equals iou(a,b) iff a == b.
double eiou(const Box& a, const Box& b);

// Translates a tile-local box by the tile origin and clips it to the image.
// Throws ClippedToNothing when nothing with positive extent remains, which
// signals a corrupt detection.
Box remap_to_global(const TileWindow& tile, const Box& b, int image_w, int image_h);

} // namespace lrsaa
