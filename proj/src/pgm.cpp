#include "lipedge/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <string>

namespace lipedge {

namespace {

constexpr long long kMaxDimension = 1 << 20;
constexpr long long kMaxSamples = 1LL << 28;

bool is_pgm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Scanner {
public:
    explicit Scanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments, then reads a non-negative integer.
    long long next_int(const char* what) {
        skip_separators();
        if (pos_ >= bytes_.size()) {
            throw PgmError(std::string("malformed header: missing ") + what);
        }
        if (!std::isdigit(bytes_[pos_])) {
            throw PgmError(std::string("malformed header: expected integer for ") + what);
        }
        long long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > std::numeric_limits<int>::max()) {
                throw PgmError(std::string("malformed header: ") + what + " out of range");
            }
            ++pos_;
        }
        return v;
    }

    // P5: exactly one whitespace byte separates the maxval from the raster.
    void expect_single_space() {
        if (pos_ >= bytes_.size() || !is_pgm_space(bytes_[pos_])) {
            throw PgmError("malformed header: missing whitespace before raster data");
        }
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

    bool has_token() {
        skip_separators();
        return pos_ < bytes_.size();
    }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_pgm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw PgmError("malformed header: not a P2/P5 graymap");
    }
    const bool raw = bytes[1] == '5';
    Scanner sc(bytes.subspan(2));

    const long long w = sc.next_int("width");
    const long long h = sc.next_int("height");
    const long long maxval = sc.next_int("maxval");
    if (w < 1 || h < 1 || w > kMaxDimension || h > kMaxDimension || w * h > kMaxSamples) {
        throw PgmError("malformed header: bad image dimensions " + std::to_string(w) + "x" +
                       std::to_string(h));
    }
    if (maxval == 0) {
        throw PgmError("invalid maxval: must be positive");
    }
    if (maxval > 65535) {
        throw PgmError("invalid maxval: " + std::to_string(maxval) + " exceeds 65535");
    }

    const std::size_t count = static_cast<std::size_t>(w * h);
    std::vector<std::uint16_t> samples(count);

    if (raw) {
        sc.expect_single_space();
        const auto data = sc.rest();
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        if (data.size() < count * bytes_per_sample) {
            throw PgmError("truncated raster: expected " +
                           std::to_string(count * bytes_per_sample) + " bytes, got " +
                           std::to_string(data.size()));
        }
        if (bytes_per_sample == 1) {
            for (std::size_t i = 0; i < count; ++i) samples[i] = data[i];
        } else {
            for (std::size_t i = 0; i < count; ++i) {
                samples[i] = static_cast<std::uint16_t>((data[2 * i] << 8) | data[2 * i + 1]);
            }
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            if (!sc.has_token()) {
                throw PgmError("truncated raster: expected " + std::to_string(count) +
                               " samples, got " + std::to_string(i));
            }
            samples[i] = static_cast<std::uint16_t>(sc.next_int("sample"));
        }
    }

    for (std::size_t i = 0; i < count; ++i) {
        if (samples[i] > maxval) {
            throw PgmError("sample " + std::to_string(samples[i]) + " exceeds maxval " +
                           std::to_string(maxval));
        }
    }

    return GrayImage(static_cast<int>(w), static_cast<int>(h), static_cast<int>(maxval),
                     std::move(samples));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmFormat format) {
    std::string header = format == PgmFormat::raw ? "P5" : "P2";
    header += '\n';
    header += std::to_string(img.width()) + " " + std::to_string(img.height()) + '\n';
    header += std::to_string(img.maxval()) + '\n';

    std::vector<std::uint8_t> out(header.begin(), header.end());
    const auto samples = img.samples();

    if (format == PgmFormat::raw) {
        if (img.maxval() > 255) {
            out.reserve(out.size() + samples.size() * 2);
            for (std::uint16_t s : samples) {
                out.push_back(static_cast<std::uint8_t>(s >> 8));
                out.push_back(static_cast<std::uint8_t>(s & 0xFF));
            }
        } else {
            out.reserve(out.size() + samples.size());
            for (std::uint16_t s : samples) out.push_back(static_cast<std::uint8_t>(s));
        }
    } else {
        std::string body;
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                if (x > 0) body += ' ';
                body += std::to_string(samples[static_cast<std::size_t>(y) * img.width() + x]);
            }
            body += '\n';
        }
        out.insert(out.end(), body.begin(), body.end());
    }
    return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path.string() + "' for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::ios_base::failure("error while reading '" + path.string() + "'");
    }
    return read_pgm(bytes);
}

void write_pgm_file(const GrayImage& img, const std::filesystem::path& path, PgmFormat format) {
    const auto bytes = write_pgm(img, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::ios_base::failure("error while writing '" + path.string() + "'");
    }
}

}  // namespace lipedge
