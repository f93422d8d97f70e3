#include "lipedge/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lipedge {

namespace {

void check_shape(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

std::size_t checked_index(int x, int y, int width, int height) {
    if (x < 0 || x >= width || y < 0 || y >= height) {
        throw std::out_of_range("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside " + std::to_string(width) + "x" +
                                std::to_string(height) + " image");
    }
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(x);
}

}  // namespace

GrayImage::GrayImage(int width, int height, int maxval)
    : GrayImage(width, height, maxval,
                std::vector<std::uint16_t>(static_cast<std::size_t>(width) *
                                           static_cast<std::size_t>(height))) {}

GrayImage::GrayImage(int width, int height, int maxval, std::vector<std::uint16_t> samples)
    : width_(width), height_(height), maxval_(maxval), samples_(std::move(samples)) {
    check_shape(width, height);
    if (maxval_ < 1 || maxval_ > 65535) {
        throw std::invalid_argument("maxval must be in [1, 65535], got " +
                                    std::to_string(maxval_));
    }
    if (samples_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
        throw std::invalid_argument("sample count does not match image dimensions");
    }
    for (std::uint16_t s : samples_) {
        if (s > maxval_) {
            throw std::invalid_argument("sample " + std::to_string(s) + " exceeds maxval " +
                                        std::to_string(maxval_));
        }
    }
}

std::uint16_t GrayImage::at(int x, int y) const {
    return samples_[checked_index(x, y, width_, height_)];
}

void GrayImage::set(int x, int y, std::uint16_t level) {
    if (level > maxval_) {
        throw std::invalid_argument("level " + std::to_string(level) + " exceeds maxval " +
                                    std::to_string(maxval_));
    }
    samples_[checked_index(x, y, width_, height_)] = level;
}

LogImage::LogImage(int width, int height, LipParams params)
    : LogImage(width, height, params,
               std::vector<double>(static_cast<std::size_t>(width) *
                                   static_cast<std::size_t>(height))) {}

LogImage::LogImage(int width, int height, LipParams params, std::vector<double> values)
    : width_(width), height_(height), params_(params), values_(std::move(values)) {
    check_shape(width, height);
    params_.validate();
    if (values_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
        throw std::invalid_argument("value count does not match image dimensions");
    }
    for (double v : values_) {
        if (!(std::abs(v) < params_.m_bound)) {
            throw std::domain_error("logarithmic level " + std::to_string(v) +
                                    " outside (-" + std::to_string(params_.m_bound) + ", " +
                                    std::to_string(params_.m_bound) + ")");
        }
    }
}

LogLevel LogImage::at(int x, int y) const {
    return LogLevel(values_[checked_index(x, y, width_, height_)]);
}

void LogImage::set(int x, int y, LogLevel v) {
    if (!(std::abs(v.value()) < params_.m_bound)) {
        throw std::domain_error("logarithmic level " + std::to_string(v.value()) +
                                " outside (-" + std::to_string(params_.m_bound) + ", " +
                                std::to_string(params_.m_bound) + ")");
    }
    values_[checked_index(x, y, width_, height_)] = v.value();
}

ContrastMap::ContrastMap(int width, int height, LipParams params, std::vector<double> values)
    : width_(width), height_(height), params_(params), values_(std::move(values)) {
    check_shape(width, height);
    params_.validate();
    if (values_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
        throw std::invalid_argument("value count does not match image dimensions");
    }
    for (double v : values_) {
        if (!(v >= 0.0 && v < params_.m_bound)) {
            throw std::domain_error("contrast value " + std::to_string(v) +
                                    " outside [0, " + std::to_string(params_.m_bound) + ")");
        }
    }
}

LogLevel ContrastMap::at(int x, int y) const {
    return LogLevel(values_[checked_index(x, y, width_, height_)]);
}

}  // namespace lipedge
