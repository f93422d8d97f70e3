#include "lipedge/gray_codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lipedge/parallel.hpp"
#include "kernels/kernel_set.hpp"

namespace lipedge {

GrayCodec::GrayCodec(LipParams params) : params_(params) {
    params_.validate();
}

LogLevel GrayCodec::encode(int level) const {
    if (level < 0 || level > params_.max_level) {
        throw std::out_of_range("encode: level " + std::to_string(level) + " outside [0, " +
                                std::to_string(params_.max_level) + "]");
    }
    const double a = static_cast<double>(params_.max_level);
    return LogLevel(params_.m_bound * (2.0 * level - a) / (a + 1.0));
}

int GrayCodec::decode(LogLevel v) const {
    const double a = static_cast<double>(params_.max_level);
    const double raw = (v.value() * (a + 1.0) / params_.m_bound + a) / 2.0;
    const double rounded = std::round(raw);  // half away from zero
    const double clamped = std::clamp(rounded, 0.0, a);
    return static_cast<int>(clamped);
}

LogImage GrayCodec::encode_image(const GrayImage& img, int threads) const {
    if (img.maxval() != params_.max_level) {
        throw std::invalid_argument("encode_image: image maxval " + std::to_string(img.maxval()) +
                                    " does not match max_level " +
                                    std::to_string(params_.max_level));
    }
    const int w = img.width();
    const int h = img.height();
    std::vector<double> out(static_cast<std::size_t>(w) * h);
    const auto& ks = kernels::kernels_for(kernels::active());
    const std::uint16_t* src = img.samples().data();
    double* dst = out.data();
    const double m = params_.m_bound;
    const int a = params_.max_level;
    parallel_rows(h, threads, [&](int y0, int y1) {
        ks.encode_span(src + static_cast<std::size_t>(y0) * w,
                       dst + static_cast<std::size_t>(y0) * w,
                       static_cast<std::size_t>(y1 - y0) * w, m, a);
    });
    return LogImage(w, h, params_, std::move(out));
}

}  // namespace lipedge
