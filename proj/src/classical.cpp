#include "lipedge/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lipedge/parallel.hpp"
#include "kernels/kernel_set.hpp"

namespace lipedge {

namespace {

Kernel3x3 from_raw(const double* k) {
    Kernel3x3 out;
    std::copy(k, k + 9, out.k.begin());
    return out;
}

const double* clamped_row(const std::vector<double>& v, int w, int h, int y) {
    const int yy = std::clamp(y, 0, h - 1);
    return v.data() + static_cast<std::size_t>(yy) * w;
}

void check_map(int width, int height, std::size_t size, const char* what) {
    if (width < 1 || height < 1 ||
        size != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument(std::string(what) + ": inconsistent map dimensions");
    }
}

}  // namespace

Kernel3x3 gradient_x_kernel() { return from_raw(kernels::kGradX); }
Kernel3x3 gradient_y_kernel() { return from_raw(kernels::kGradY); }
Kernel3x3 laplace_kernel() { return from_raw(kernels::kLaplace); }

RealMap convolve3x3(const RealMap& img, const Kernel3x3& k, int threads) {
    check_map(img.width, img.height, img.values.size(), "convolve3x3");
    const int w = img.width;
    const int h = img.height;
    RealMap out{w, h, std::vector<double>(img.values.size())};
    const auto& ks = kernels::kernels_for(kernels::active());
    parallel_rows(h, threads, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            ks.conv3x3_row(clamped_row(img.values, w, h, y - 1),
                           clamped_row(img.values, w, h, y),
                           clamped_row(img.values, w, h, y + 1),
                           out.values.data() + static_cast<std::size_t>(y) * w, w, k.k.data());
        }
    });
    return out;
}

RealMap to_real(const GrayImage& img) {
    RealMap out{img.width(), img.height(), {}};
    out.values.reserve(img.samples().size());
    for (std::uint16_t s : img.samples()) out.values.push_back(static_cast<double>(s));
    return out;
}

ResponseMap gradient_magnitude(const GrayImage& img, int threads) {
    const RealMap real = to_real(img);
    const int w = real.width;
    const int h = real.height;
    ResponseMap out{w, h, std::vector<double>(real.values.size())};
    const auto& ks = kernels::kernels_for(kernels::active());
    parallel_rows(h, threads, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            ks.grad_mag_row(clamped_row(real.values, w, h, y - 1),
                            clamped_row(real.values, w, h, y),
                            clamped_row(real.values, w, h, y + 1),
                            out.values.data() + static_cast<std::size_t>(y) * w, w);
        }
    });
    return out;
}

ResponseMap laplace_response(const GrayImage& img, int threads) {
    const RealMap real = to_real(img);
    const int w = real.width;
    const int h = real.height;
    ResponseMap out{w, h, std::vector<double>(real.values.size())};
    const auto& ks = kernels::kernels_for(kernels::active());
    parallel_rows(h, threads, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            ks.laplace_abs_row(clamped_row(real.values, w, h, y - 1),
                               clamped_row(real.values, w, h, y),
                               clamped_row(real.values, w, h, y + 1),
                               out.values.data() + static_cast<std::size_t>(y) * w, w);
        }
    });
    return out;
}

namespace {

// round half away from zero, clamp to [0, max_level]
std::uint16_t to_level(double v, int max_level) {
    const double r = std::round(v);
    const double c = std::clamp(r, 0.0, static_cast<double>(max_level));
    return static_cast<std::uint16_t>(c);
}

GrayImage scale_map(std::span<const double> values, int w, int h, double divisor,
                    int max_level) {
    std::vector<std::uint16_t> out(values.size());
    const double a = static_cast<double>(max_level);
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = to_level(a * values[i] / divisor, max_level);
    }
    return GrayImage(w, h, max_level, std::move(out));
}

double max_value(std::span<const double> values) {
    double vmax = 0.0;
    for (double v : values) vmax = std::max(vmax, v);
    return vmax;
}

}  // namespace

GrayImage normalize_for_display(const ResponseMap& r, NormalizeMode mode, const GrayCodec& codec) {
    check_map(r.width, r.height, r.values.size(), "normalize_for_display");
    if (mode == NormalizeMode::absolute) {
        throw std::invalid_argument(
            "normalize_for_display: absolute mode requires a bounded contrast map");
    }
    const double vmax = max_value(r.values);
    if (vmax <= 0.0) {
        return GrayImage(r.width, r.height, codec.params().max_level);
    }
    return scale_map(r.values, r.width, r.height, vmax, codec.params().max_level);
}

GrayImage normalize_for_display(const ContrastMap& c, NormalizeMode mode, const GrayCodec& codec) {
    if (mode == NormalizeMode::absolute) {
        return scale_map(c.values(), c.width(), c.height(), c.params().m_bound,
                         codec.params().max_level);
    }
    const double vmax = max_value(c.values());
    if (vmax <= 0.0) {
        return GrayImage(c.width(), c.height(), codec.params().max_level);
    }
    return scale_map(c.values(), c.width(), c.height(), vmax, codec.params().max_level);
}

}  // namespace lipedge
