#pragma once

#include <array>

#include "lipedge/gray_codec.hpp"
#include "lipedge/image.hpp"

namespace lipedge {

// 3x3 operator coefficients, row-major.
struct Kernel3x3 {
    std::array<double, 9> k{};

    double at(int kx, int ky) const { return k[static_cast<std::size_t>(ky) * 3 + kx]; }
};

// The comparison operators' kernels.
Kernel3x3 gradient_x_kernel();  // columns -1 0 +1
Kernel3x3 gradient_y_kernel();  // rows    -1 0 +1
Kernel3x3 laplace_kernel();     // 2 -1 2 / -1 -4 -1 / 2 -1 2

// Correlation-style 3x3 application (no kernel flip), centered at each
// pixel, out-of-bounds samples edge-replicated. Output has the input's
// shape.
RealMap convolve3x3(const RealMap& img, const Kernel3x3& k, int threads = 1);

// Integer samples as reals.
RealMap to_real(const GrayImage& img);

// Per pixel sqrt(gx^2 + gy^2) of the two gradient convolutions.
ResponseMap gradient_magnitude(const GrayImage& img, int threads = 1);

// Per pixel |L * f|.
ResponseMap laplace_response(const GrayImage& img, int threads = 1);

enum class NormalizeMode {
    max,       // level = round(max_level * v / v_max); all-zero input stays zero
    absolute,  // level = round(max_level * v / m_bound); contrast maps only
};

// Scale a response or contrast map to a displayable image, rounding half
// away from zero and clamping to [0, max_level]. absolute mode is rejected
// for ResponseMap inputs (their scale is unbounded).
GrayImage normalize_for_display(const ResponseMap& r, NormalizeMode mode, const GrayCodec& codec);
GrayImage normalize_for_display(const ContrastMap& c, NormalizeMode mode, const GrayCodec& codec);

}  // namespace lipedge
