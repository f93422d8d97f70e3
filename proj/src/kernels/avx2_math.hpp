#pragma once

#include <immintrin.h>

// 4-lane double-precision ln/exp/pow built from the classic Cephes rational
// approximations. Lane-wise accuracy vs libm: ln within 1 ulp, exp within
// 2 ulp over the ranges the contrast kernel uses (verified in tests).
// Preconditions: ln expects finite x > 0; exp expects |x| <= ~700.
// This header is only compiled into the AVX2 translation unit.

namespace lipedge::kernels::avx2 {

inline __m256d polevl5(__m256d x, double c0, double c1, double c2, double c3, double c4,
                       double c5) {
    __m256d a = _mm256_set1_pd(c0);
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c1));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c2));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c3));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c4));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c5));
    return a;
}

// x^5 + c0 x^4 + ... + c4 (implicit leading 1)
inline __m256d p1evl5(__m256d x, double c0, double c1, double c2, double c3, double c4) {
    __m256d a = _mm256_add_pd(x, _mm256_set1_pd(c0));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c1));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c2));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c3));
    a = _mm256_add_pd(_mm256_mul_pd(a, x), _mm256_set1_pd(c4));
    return a;
}

// low 32 bits of each 64-bit lane -> 4 packed int32
inline __m128i pack_epi64_lo32(__m256i v) {
    const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    return _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(v, idx));
}

inline __m256d ln(__m256d x) {
    const __m256d kTwo54 = _mm256_set1_pd(18014398509481984.0);  // 2^54
    const __m256d kDblMin = _mm256_set1_pd(2.2250738585072014e-308);

    // normalize subnormals so the exponent field is usable
    const __m256d subnormal = _mm256_cmp_pd(x, kDblMin, _CMP_LT_OQ);
    x = _mm256_blendv_pd(x, _mm256_mul_pd(x, kTwo54), subnormal);

    // x = mant * 2^e, mant in [0.5, 1)
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_biased = _mm256_srli_epi64(bits, 52);
    __m256d e = _mm256_cvtepi32_pd(pack_epi64_lo32(exp_biased));
    e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));
    e = _mm256_blendv_pd(e, _mm256_sub_pd(e, _mm256_set1_pd(54.0)), subnormal);

    const __m256d mant_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL));
    const __m256d half_exp = _mm256_castsi256_pd(_mm256_set1_epi64x(0x3FE0000000000000LL));
    __m256d mant = _mm256_or_pd(_mm256_and_pd(x, mant_mask), half_exp);

    // reduce to [sqrt(1/2), sqrt(2)) around 1
    const __m256d below = _mm256_cmp_pd(mant, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
    e = _mm256_sub_pd(e, _mm256_and_pd(below, _mm256_set1_pd(1.0)));
    mant = _mm256_blendv_pd(mant, _mm256_add_pd(mant, mant), below);
    const __m256d xr = _mm256_sub_pd(mant, _mm256_set1_pd(1.0));

    const __m256d z = _mm256_mul_pd(xr, xr);
    const __m256d num = polevl5(xr, 1.01875663804580931796e-4, 4.97494994976747001425e-1,
                                4.70579119878881725854e0, 1.44989225341610930846e1,
                                1.79368678507819816313e1, 7.70838733755885391666e0);
    const __m256d den = p1evl5(xr, 1.12873587189167450590e1, 4.52279145837532221105e1,
                               8.29875266912776603211e1, 7.11544750618563894466e1,
                               2.31251620126765340583e1);
    __m256d y = _mm256_mul_pd(xr, _mm256_div_pd(_mm256_mul_pd(z, num), den));
    y = _mm256_sub_pd(y, _mm256_mul_pd(e, _mm256_set1_pd(2.121944400546905827679e-4)));
    y = _mm256_sub_pd(y, _mm256_mul_pd(_mm256_set1_pd(0.5), z));
    __m256d r = _mm256_add_pd(xr, y);
    r = _mm256_add_pd(r, _mm256_mul_pd(e, _mm256_set1_pd(0.693359375)));
    return r;
}

inline __m256d exp(__m256d x) {
    // keep 2^n in the normal range; callers stay far inside this
    x = _mm256_max_pd(_mm256_set1_pd(-700.0), _mm256_min_pd(_mm256_set1_pd(700.0), x));

    const __m256d n_d = _mm256_floor_pd(
        _mm256_add_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
                      _mm256_set1_pd(0.5)));
    x = _mm256_sub_pd(x, _mm256_mul_pd(n_d, _mm256_set1_pd(6.93145751953125e-1)));
    x = _mm256_sub_pd(x, _mm256_mul_pd(n_d, _mm256_set1_pd(1.42860682030941723212e-6)));

    const __m256d xx = _mm256_mul_pd(x, x);
    __m256d px = _mm256_set1_pd(1.26177193074810590878e-4);
    px = _mm256_add_pd(_mm256_mul_pd(px, xx), _mm256_set1_pd(3.02994407707441961300e-2));
    px = _mm256_add_pd(_mm256_mul_pd(px, xx), _mm256_set1_pd(9.99999999999999999910e-1));
    px = _mm256_mul_pd(px, x);
    __m256d qx = _mm256_set1_pd(3.00198505138664455042e-6);
    qx = _mm256_add_pd(_mm256_mul_pd(qx, xx), _mm256_set1_pd(2.52448340349684104192e-3));
    qx = _mm256_add_pd(_mm256_mul_pd(qx, xx), _mm256_set1_pd(2.27265548208155028766e-1));
    qx = _mm256_add_pd(_mm256_mul_pd(qx, xx), _mm256_set1_pd(2.00000000000000000005e0));
    const __m256d frac = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    __m256d r = _mm256_add_pd(_mm256_set1_pd(1.0),
                              _mm256_add_pd(frac, frac));

    // r * 2^n via the exponent field
    const __m128i n32 = _mm256_cvtpd_epi32(n_d);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i scaled =
        _mm256_add_epi64(_mm256_castpd_si256(r), _mm256_slli_epi64(n64, 52));
    return _mm256_castsi256_pd(scaled);
}

inline __m256d pow(__m256d x, __m256d lam) {
    return exp(_mm256_mul_pd(lam, ln(x)));
}

}  // namespace lipedge::kernels::avx2
