#pragma once

#include "lipedge/image.hpp"
#include "lipedge/lip_algebra.hpp"

namespace lipedge {

// Linear map between physical levels {0, ..., max_level} and the open
// interval of logarithmic levels:
//
//   encode(l) = m_bound * (2l - max_level) / (max_level + 1)
//
// The denominator max_level + 1 keeps every level strictly inside the
// interval with margin m_bound / (max_level + 1), so phi never sees its
// singularities. decode rounds half away from zero and clamps; it inverts
// encode exactly on integer levels.
class GrayCodec {
public:
    explicit GrayCodec(LipParams params);

    const LipParams& params() const { return params_; }

    // Throws std::out_of_range unless 0 <= level <= max_level.
    LogLevel encode(int level) const;

    // Total: clamps to [0, max_level] after rounding.
    int decode(LogLevel v) const;

    // Whole-image encode. The image's maxval must equal max_level
    // (std::invalid_argument otherwise).
    LogImage encode_image(const GrayImage& img, int threads = 1) const;

private:
    LipParams params_;
};

}  // namespace lipedge
