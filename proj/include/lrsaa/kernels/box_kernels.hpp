#pragma once

#include <cstddef>
#include <vector>

namespace lrsaa::kernels {

// Canonical IoU / EIOU operation sequences on raw coordinates.
//
// Every implementation lane (the scalar reference below, the AVX2 variant,
// and the single-pair helpers in geometry) performs exactly these operations
// in exactly this order. Together with -ffp-contract=off that makes the
// lanes bit-identical, which the kernel equivalence tests assert and which
// keeps pipeline output independent of the machine the code runs on.

inline double iou_core(double axmin, double aymin, double axmax, double aymax,
                       double bxmin, double bymin, double bxmax, double bymax) {
    const double iw = (axmax < bxmax ? axmax : bxmax) - (axmin > bxmin ? axmin : bxmin);
    const double ih = (aymax < bymax ? aymax : bymax) - (aymin > bymin ? aymin : bymin);
    const double iwc = iw > 0.0 ? iw : 0.0;
    const double ihc = ih > 0.0 ? ih : 0.0;
    const double inter = iwc * ihc;
    const double area_a = (axmax - axmin) * (aymax - aymin);
    const double area_b = (bxmax - bxmin) * (bymax - bymin);
    return inter / ((area_a + area_b) - inter);
}

// IoU minus three penalties, each normalized by the enclosing box: squared
// center distance over squared diagonal, squared width difference over
// squared width, squared height difference over squared height. Valid boxes
// give a strictly positive enclosing extent, so the denominators are safe.
inline double eiou_core(double axmin, double aymin, double axmax, double aymax,
                        double bxmin, double bymin, double bxmax, double bymax) {
    const double iou = iou_core(axmin, aymin, axmax, aymax, bxmin, bymin, bxmax, bymax);

    const double cw = (axmax > bxmax ? axmax : bxmax) - (axmin < bxmin ? axmin : bxmin);
    const double ch = (aymax > bymax ? aymax : bymax) - (aymin < bymin ? aymin : bymin);
    const double cw2 = cw * cw;
    const double ch2 = ch * ch;
    const double diag2 = cw2 + ch2;

    const double dcx = (axmin + axmax) * 0.5 - (bxmin + bxmax) * 0.5;
    const double dcy = (aymin + aymax) * 0.5 - (bymin + bymax) * 0.5;
    const double center2 = dcx * dcx + dcy * dcy;

    const double dw = (axmax - axmin) - (bxmax - bxmin);
    const double dh = (aymax - aymin) - (bymax - bymin);

    return ((iou - center2 / diag2) - (dw * dw) / cw2) - (dh * dh) / ch2;
}

// Struct-of-arrays box storage for the row kernels.
struct BoxSoA {
    std::vector<double> xmin, ymin, xmax, ymax;

    std::size_t size() const { return xmin.size(); }

    void push(double x0, double y0, double x1, double y1) {
        xmin.push_back(x0);
        ymin.push_back(y0);
        xmax.push_back(x1);
        ymax.push_back(y1);
    }
};

// One box against n boxes; out must hold n doubles.
using IouRowFn = void (*)(double axmin, double aymin, double axmax, double aymax,
                          const double* bxmin, const double* bymin,
                          const double* bxmax, const double* bymax,
                          std::size_t n, double* out);
using EiouRowFn = IouRowFn;

struct Backend {
    const char* name;
    IouRowFn iou_row;
    EiouRowFn eiou_row;
};

const Backend& scalar_backend();

// AVX2 lane; nullptr when the build or the CPU does not support it.
const Backend* avx2_backend();

// Best lane for this process. LRSAA_KERNELS=scalar|avx2 overrides the choice;
// an unavailable request falls back to scalar.
const Backend& active_backend();

} // namespace lrsaa::kernels
