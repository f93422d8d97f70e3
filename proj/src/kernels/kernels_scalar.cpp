#include "kernel_set.hpp"

namespace lipedge::kernels {

namespace {

void encode_span_scalar(const std::uint16_t* src, double* dst, std::size_t n, double m, int a) {
    const double amax = static_cast<double>(a);
    const double denom = amax + 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = m * (2.0 * static_cast<double>(src[i]) - amax) / denom;
    }
}

void conv3x3_row_scalar(const double* r0, const double* r1, const double* r2, double* out,
                        int width, const double* k) {
    for (int x = 0; x < width; ++x) {
        out[x] = conv3x3_at(r0, r1, r2, x, width, k);
    }
}

void grad_mag_row_scalar(const double* r0, const double* r1, const double* r2, double* out,
                         int width) {
    for (int x = 0; x < width; ++x) {
        out[x] = grad_mag_at(r0, r1, r2, x, width);
    }
}

void laplace_abs_row_scalar(const double* r0, const double* r1, const double* r2, double* out,
                            int width) {
    for (int x = 0; x < width; ++x) {
        out[x] = laplace_abs_at(r0, r1, r2, x, width);
    }
}

void contrast8_span_scalar(const double* up, const double* mid, const double* down, double* out,
                           int x0, int x1, double m) {
    for (int x = x0; x < x1; ++x) {
        out[x] = contrast8_at(up, mid, down, x, m);
    }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{
        encode_span_scalar, conv3x3_row_scalar, grad_mag_row_scalar,
        laplace_abs_row_scalar, contrast8_span_scalar,
    };
    return set;
}

}  // namespace lipedge::kernels
