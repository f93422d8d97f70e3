#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "lipedge/kernels.hpp"
#include "lipedge/lip_algebra.hpp"

// Row-level compute kernels behind the public image operations. Each lane
// (scalar, AVX2) fills in one KernelSet; the scalar lane is the semantic
// reference. The linear kernels (encode, convolution, gradient, Laplacian)
// are bit-identical across lanes: same operations in the same order, no FMA
// contraction. The contrast kernel involves pow and matches the reference to
// a small multiple of machine epsilon (see tests).

namespace lipedge::kernels {

struct KernelSet {
    // dst[i] = m * (2 * src[i] - a) / (a + 1)
    void (*encode_span)(const std::uint16_t* src, double* dst, std::size_t n, double m, int a);

    // 3x3 correlation (no kernel flip) over one output row. r0/r1/r2 are the
    // source rows above/at/below, already clamped vertically by the caller;
    // columns are clamped (edge-replicated) inside the kernel.
    void (*conv3x3_row)(const double* r0, const double* r1, const double* r2, double* out,
                        int width, const double* k /* 9, row-major */);

    // sqrt(gx^2 + gy^2) with the fixed gradient kernel pair.
    void (*grad_mag_row)(const double* r0, const double* r1, const double* r2, double* out,
                         int width);

    // |L * f| with the fixed Laplacian kernel.
    void (*laplace_abs_row)(const double* r0, const double* r1, const double* r2, double* out,
                            int width);

    // Pixel contrast over the standard 8-neighborhood for x in [x0, x1) of an
    // interior row (both vertical neighbors present; caller guarantees
    // 1 <= x0 and x1 <= width - 1 so all eight neighbors are in bounds).
    void (*contrast8_span)(const double* up, const double* mid, const double* down, double* out,
                           int x0, int x1, double m);
};

const KernelSet& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const KernelSet& avx2_kernels();
#endif
const KernelSet& kernels_for(Backend b);

// Shared per-pixel helpers. The scalar lane is built from these, and the
// SIMD lanes reuse them for borders and vector tails so that a pixel's code
// path depends only on the image geometry, never on thread count.

inline double conv3x3_at(const double* r0, const double* r1, const double* r2, int x, int width,
                         const double* k) {
    const int xm = x > 0 ? x - 1 : 0;
    const int xp = x < width - 1 ? x + 1 : width - 1;
    double acc = 0.0;
    acc += k[0] * r0[xm];
    acc += k[1] * r0[x];
    acc += k[2] * r0[xp];
    acc += k[3] * r1[xm];
    acc += k[4] * r1[x];
    acc += k[5] * r1[xp];
    acc += k[6] * r2[xm];
    acc += k[7] * r2[x];
    acc += k[8] * r2[xp];
    return acc;
}

// The paper's comparison kernels, row-major.
inline constexpr double kGradX[9] = {-1, 0, 1, -1, 0, 1, -1, 0, 1};
inline constexpr double kGradY[9] = {-1, -1, -1, 0, 0, 0, 1, 1, 1};
inline constexpr double kLaplace[9] = {2, -1, 2, -1, -4, -1, 2, -1, 2};

inline double grad_mag_at(const double* r0, const double* r1, const double* r2, int x,
                          int width) {
    const double gx = conv3x3_at(r0, r1, r2, x, width, kGradX);
    const double gy = conv3x3_at(r0, r1, r2, x, width, kGradY);
    return std::sqrt(gx * gx + gy * gy);
}

inline double laplace_abs_at(const double* r0, const double* r1, const double* r2, int x,
                             int width) {
    return std::abs(conv3x3_at(r0, r1, r2, x, width, kLaplace));
}

// One interior pixel of the 8-neighborhood contrast. Mirrors the generic
// neighborhood fold exactly: offsets in row-major order, per-neighbor
// |(1/d) <*> (u <-> v)|, folded with <+> from the neutral element, then
// <*> by 1/8.
inline double contrast8_at(const double* up, const double* mid, const double* down, int x,
                           double m) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double u = mid[x];
    double acc = 0.0;
    const auto pair = [&](double v, double inv_d) {
        const double c = std::abs(
            detail::scalar_mul_raw(inv_d, detail::sub_raw(u, v, m), m));
        acc = detail::add_raw(acc, c, m);
    };
    pair(up[x - 1], inv_sqrt2);
    pair(up[x], 1.0);
    pair(up[x + 1], inv_sqrt2);
    pair(mid[x - 1], 1.0);
    pair(mid[x + 1], 1.0);
    pair(down[x - 1], inv_sqrt2);
    pair(down[x], 1.0);
    pair(down[x + 1], inv_sqrt2);
    return detail::scalar_mul_raw(1.0 / 8.0, acc, m);
}

}  // namespace lipedge::kernels
