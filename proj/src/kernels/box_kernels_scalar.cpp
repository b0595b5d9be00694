#include "lrsaa/kernels/box_kernels.hpp"

namespace lrsaa::kernels {

namespace {

void iou_row_scalar(double axmin, double aymin, double axmax, double aymax,
                    const double* bxmin, const double* bymin, const double* bxmax,
                    const double* bymax, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = iou_core(axmin, aymin, axmax, aymax, bxmin[i], bymin[i], bxmax[i], bymax[i]);
    }
}

void eiou_row_scalar(double axmin, double aymin, double axmax, double aymax,
                     const double* bxmin, const double* bymin, const double* bxmax,
                     const double* bymax, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = eiou_core(axmin, aymin, axmax, aymax, bxmin[i], bymin[i], bxmax[i], bymax[i]);
    }
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", &iou_row_scalar, &eiou_row_scalar};
    return backend;
}

} // namespace lrsaa::kernels
