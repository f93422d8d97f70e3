#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "lipedge/image.hpp"

namespace lipedge {

enum class PgmFormat {
    plain,  // P2, ASCII samples
    raw,    // P5, binary samples (big-endian pairs when maxval > 255)
};

// Parse or serialization failure; the message states which rule was broken.
class PgmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses a P2 or P5 graymap. Header whitespace and '#' comments are accepted
// anywhere tokens are; trailing bytes after the raster are ignored.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Canonical serialization: "P?\n<w> <h>\n<maxval>\n" and then the samples,
// one text row per image row for P2, packed big-endian for P5.
std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmFormat format);

// File convenience wrappers. Reading a missing/unreadable file throws
// std::ios_base::failure; parse failures throw PgmError.
GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const GrayImage& img, const std::filesystem::path& path, PgmFormat format);

}  // namespace lipedge
