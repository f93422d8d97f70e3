#include <immintrin.h>

#include "avx2_math.hpp"
#include "kernel_set.hpp"

// AVX2 lane. The linear kernels run the exact operation sequence of the
// scalar reference, four pixels per step, so their results are bit-identical
// to it. The contrast kernel evaluates pow through avx2::ln/exp and agrees
// with the reference to a few ulp; border columns and vector tails fall back
// to the shared scalar helpers.

namespace lipedge::kernels {

namespace {

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

void encode_span_avx2(const std::uint16_t* src, double* dst, std::size_t n, double m, int a) {
    const double amax = static_cast<double>(a);
    const double denom = amax + 1.0;
    const __m256d va = _mm256_set1_pd(amax);
    const __m256d vm = _mm256_set1_pd(m);
    const __m256d vd = _mm256_set1_pd(denom);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i u16 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(src + i));
        const __m256d s = _mm256_cvtepi32_pd(_mm_cvtepu16_epi32(u16));
        const __m256d t = _mm256_sub_pd(_mm256_mul_pd(two, s), va);
        _mm256_storeu_pd(dst + i, _mm256_div_pd(_mm256_mul_pd(vm, t), vd));
    }
    for (; i < n; ++i) {
        dst[i] = m * (2.0 * static_cast<double>(src[i]) - amax) / denom;
    }
}

// acc over the nine taps in row-major order, matching conv3x3_at
inline __m256d conv_taps(const double* r0, const double* r1, const double* r2, int x,
                         const __m256d k[9]) {
    __m256d acc = _mm256_mul_pd(k[0], _mm256_loadu_pd(r0 + x - 1));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[1], _mm256_loadu_pd(r0 + x)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[2], _mm256_loadu_pd(r0 + x + 1)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[3], _mm256_loadu_pd(r1 + x - 1)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[4], _mm256_loadu_pd(r1 + x)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[5], _mm256_loadu_pd(r1 + x + 1)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[6], _mm256_loadu_pd(r2 + x - 1)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[7], _mm256_loadu_pd(r2 + x)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(k[8], _mm256_loadu_pd(r2 + x + 1)));
    return acc;
}

void conv3x3_row_avx2(const double* r0, const double* r1, const double* r2, double* out,
                      int width, const double* k) {
    if (width < 6) {
        for (int x = 0; x < width; ++x) out[x] = conv3x3_at(r0, r1, r2, x, width, k);
        return;
    }
    out[0] = conv3x3_at(r0, r1, r2, 0, width, k);
    __m256d vk[9];
    for (int i = 0; i < 9; ++i) vk[i] = _mm256_set1_pd(k[i]);
    int x = 1;
    for (; x + 4 <= width - 1; x += 4) {
        _mm256_storeu_pd(out + x, conv_taps(r0, r1, r2, x, vk));
    }
    for (; x < width; ++x) out[x] = conv3x3_at(r0, r1, r2, x, width, k);
}

void grad_mag_row_avx2(const double* r0, const double* r1, const double* r2, double* out,
                       int width) {
    if (width < 6) {
        for (int x = 0; x < width; ++x) out[x] = grad_mag_at(r0, r1, r2, x, width);
        return;
    }
    out[0] = grad_mag_at(r0, r1, r2, 0, width);
    __m256d vgx[9], vgy[9];
    for (int i = 0; i < 9; ++i) {
        vgx[i] = _mm256_set1_pd(kGradX[i]);
        vgy[i] = _mm256_set1_pd(kGradY[i]);
    }
    int x = 1;
    for (; x + 4 <= width - 1; x += 4) {
        const __m256d gx = conv_taps(r0, r1, r2, x, vgx);
        const __m256d gy = conv_taps(r0, r1, r2, x, vgy);
        const __m256d sum = _mm256_add_pd(_mm256_mul_pd(gx, gx), _mm256_mul_pd(gy, gy));
        _mm256_storeu_pd(out + x, _mm256_sqrt_pd(sum));
    }
    for (; x < width; ++x) out[x] = grad_mag_at(r0, r1, r2, x, width);
}

void laplace_abs_row_avx2(const double* r0, const double* r1, const double* r2, double* out,
                          int width) {
    if (width < 6) {
        for (int x = 0; x < width; ++x) out[x] = laplace_abs_at(r0, r1, r2, x, width);
        return;
    }
    out[0] = laplace_abs_at(r0, r1, r2, 0, width);
    __m256d vk[9];
    for (int i = 0; i < 9; ++i) vk[i] = _mm256_set1_pd(kLaplace[i]);
    int x = 1;
    for (; x + 4 <= width - 1; x += 4) {
        _mm256_storeu_pd(out + x, abs_pd(conv_taps(r0, r1, r2, x, vk)));
    }
    for (; x < width; ++x) out[x] = laplace_abs_at(r0, r1, r2, x, width);
}

struct ContrastConsts {
    __m256d m, m2, lo, hi, one;
    __m256d nudge;  // largest magnitude below m
};

inline __m256d clamp_open_pd(__m256d v, const ContrastConsts& c) {
    const __m256d neg = _mm256_sub_pd(_mm256_setzero_pd(), c.nudge);
    v = _mm256_blendv_pd(v, c.nudge, _mm256_cmp_pd(v, c.m, _CMP_GE_OQ));
    v = _mm256_blendv_pd(v, neg, _mm256_cmp_pd(v, _mm256_sub_pd(_mm256_setzero_pd(), c.m),
                                               _CMP_LE_OQ));
    return v;
}

// (u - v) / (1 - u v / m^2), boundary pushed into the open interval
inline __m256d sub_raw_pd(__m256d u, __m256d v, const ContrastConsts& c) {
    const __m256d num = _mm256_sub_pd(u, v);
    const __m256d den =
        _mm256_sub_pd(c.one, _mm256_div_pd(_mm256_mul_pd(u, v), c.m2));
    return clamp_open_pd(_mm256_div_pd(num, den), c);
}

inline __m256d add_raw_pd(__m256d u, __m256d v, const ContrastConsts& c) {
    const __m256d num = _mm256_add_pd(u, v);
    const __m256d den =
        _mm256_add_pd(c.one, _mm256_div_pd(_mm256_mul_pd(u, v), c.m2));
    return clamp_open_pd(_mm256_div_pd(num, den), c);
}

// m ((m+u)^l - (m-u)^l) / ((m+u)^l + (m-u)^l); bases stay in (0, 2m]
inline __m256d scalar_mul_raw_pd(__m256d lam, __m256d u, const ContrastConsts& c) {
    const __m256d a = avx2::pow(_mm256_add_pd(c.m, u), lam);
    const __m256d b = avx2::pow(_mm256_sub_pd(c.m, u), lam);
    const __m256d r =
        _mm256_div_pd(_mm256_mul_pd(c.m, _mm256_sub_pd(a, b)), _mm256_add_pd(a, b));
    return clamp_open_pd(r, c);
}

// lambda = 1: pow(x, 1) == x, so this matches the scalar route bit for bit
inline __m256d scalar_mul_one_pd(__m256d u, const ContrastConsts& c) {
    const __m256d a = _mm256_add_pd(c.m, u);
    const __m256d b = _mm256_sub_pd(c.m, u);
    const __m256d r =
        _mm256_div_pd(_mm256_mul_pd(c.m, _mm256_sub_pd(a, b)), _mm256_add_pd(a, b));
    return clamp_open_pd(r, c);
}

void contrast8_span_avx2(const double* up, const double* mid, const double* down, double* out,
                         int x0, int x1, double m) {
    ContrastConsts c;
    c.m = _mm256_set1_pd(m);
    c.m2 = _mm256_set1_pd(m * m);
    c.one = _mm256_set1_pd(1.0);
    c.nudge = _mm256_set1_pd(std::nextafter(m, 0.0));
    const __m256d inv_sqrt2 = _mm256_set1_pd(1.0 / std::sqrt(2.0));
    const __m256d eighth = _mm256_set1_pd(1.0 / 8.0);

    int x = x0;
    for (; x + 4 <= x1; x += 4) {
        const __m256d u = _mm256_loadu_pd(mid + x);
        __m256d acc = _mm256_setzero_pd();
        const auto axial = [&](const double* row, int dx) {
            const __m256d v = _mm256_loadu_pd(row + x + dx);
            const __m256d cc = abs_pd(scalar_mul_one_pd(sub_raw_pd(u, v, c), c));
            acc = add_raw_pd(acc, cc, c);
        };
        const auto diagonal = [&](const double* row, int dx) {
            const __m256d v = _mm256_loadu_pd(row + x + dx);
            const __m256d cc =
                abs_pd(scalar_mul_raw_pd(inv_sqrt2, sub_raw_pd(u, v, c), c));
            acc = add_raw_pd(acc, cc, c);
        };
        diagonal(up, -1);
        axial(up, 0);
        diagonal(up, 1);
        axial(mid, -1);
        axial(mid, 1);
        diagonal(down, -1);
        axial(down, 0);
        diagonal(down, 1);
        _mm256_storeu_pd(out + x, scalar_mul_raw_pd(eighth, acc, c));
    }
    for (; x < x1; ++x) {
        out[x] = contrast8_at(up, mid, down, x, m);
    }
}

}  // namespace

const KernelSet& avx2_kernels() {
    static const KernelSet set{
        encode_span_avx2, conv3x3_row_avx2, grad_mag_row_avx2,
        laplace_abs_row_avx2, contrast8_span_avx2,
    };
    return set;
}

}  // namespace lipedge::kernels
