#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lipedge/lip_algebra.hpp"

namespace lipedge {

// Column x, row y. (0, 0) is the top-left pixel.
struct PixelCoord {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(PixelCoord a, PixelCoord b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Physical grayscale raster: integer levels in [0, maxval], row-major.
class GrayImage {
public:
    GrayImage(int width, int height, int maxval);
    GrayImage(int width, int height, int maxval, std::vector<std::uint16_t> samples);

    int width() const { return width_; }
    int height() const { return height_; }
    int maxval() const { return maxval_; }

    bool in_bounds(PixelCoord p) const {
        return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
    }

    std::uint16_t at(int x, int y) const;
    void set(int x, int y, std::uint16_t level);

    std::span<const std::uint16_t> samples() const { return samples_; }

    friend bool operator==(const GrayImage& a, const GrayImage& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.maxval_ == b.maxval_ &&
               a.samples_ == b.samples_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    int maxval_ = 0;
    std::vector<std::uint16_t> samples_;
};

// Logarithmic image: row-major grid of levels strictly inside
// (-m_bound, m_bound). Zero-filled on construction.
class LogImage {
public:
    LogImage(int width, int height, LipParams params);
    // Validates every value against the open interval.
    LogImage(int width, int height, LipParams params, std::vector<double> values);

    int width() const { return width_; }
    int height() const { return height_; }
    const LipParams& params() const { return params_; }

    bool in_bounds(PixelCoord p) const {
        return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
    }

    LogLevel at(int x, int y) const;
    void set(int x, int y, LogLevel v);

    std::span<const double> values() const { return values_; }

private:
    int width_ = 0;
    int height_ = 0;
    LipParams params_;
    std::vector<double> values_;
};

// Per-pixel contrast image: values in [0, m_bound). The shape of the input
// image is preserved.
class ContrastMap {
public:
    ContrastMap(int width, int height, LipParams params, std::vector<double> values);

    int width() const { return width_; }
    int height() const { return height_; }
    const LipParams& params() const { return params_; }

    LogLevel at(int x, int y) const;
    std::span<const double> values() const { return values_; }

private:
    int width_ = 0;
    int height_ = 0;
    LipParams params_;
    std::vector<double> values_;
};

// Scratch plane of signed reals (convolution input/output).
struct RealMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major, width * height
};

// Non-negative operator response (gradient magnitude, |Laplacian|);
// unbounded scale until display normalization.
struct ResponseMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;
};

}  // namespace lipedge
