#include "lipedge/contrast.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lipedge/parallel.hpp"
#include "kernels/kernel_set.hpp"

namespace lipedge {

namespace {

void check_coord(const LogImage& f, PixelCoord p, const char* what) {
    if (!f.in_bounds(p)) {
        throw std::out_of_range(std::string(what) + ": pixel (" + std::to_string(p.x) + ", " +
                                std::to_string(p.y) + ") outside " + std::to_string(f.width()) +
                                "x" + std::to_string(f.height()) + " image");
    }
}

// Generic per-pixel contrast over any neighborhood; the fold order is the
// neighborhood's offset order, starting from the neutral element.
double pixel_contrast_raw(const double* data, int w, int h, int x, int y,
                          std::span<const NeighborOffset> offs, double m) {
    const double u = data[static_cast<std::size_t>(y) * w + x];
    double acc = 0.0;
    int n = 0;
    for (const NeighborOffset& off : offs) {
        const int nx = x + off.dx;
        const int ny = y + off.dy;
        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
        const double v = data[static_cast<std::size_t>(ny) * w + nx];
        const double c = std::abs(
            detail::scalar_mul_raw(1.0 / off.distance, detail::sub_raw(u, v, m), m));
        acc = detail::add_raw(acc, c, m);
        ++n;
    }
    if (n == 0) return 0.0;
    return detail::scalar_mul_raw(1.0 / n, acc, m);
}

}  // namespace

LogLevel relative_contrast(const LogImage& f, PixelCoord p1, PixelCoord p2) {
    check_coord(f, p1, "relative_contrast");
    check_coord(f, p2, "relative_contrast");
    if (p1 == p2) {
        throw std::invalid_argument("relative_contrast: pixels must be distinct");
    }
    const double dx = static_cast<double>(p1.x) - p2.x;
    const double dy = static_cast<double>(p1.y) - p2.y;
    const double d = std::sqrt(dx * dx + dy * dy);
    const double m = f.params().m_bound;
    return LogLevel(detail::scalar_mul_raw(
        1.0 / d, detail::sub_raw(f.at(p1.x, p1.y).value(), f.at(p2.x, p2.y).value(), m), m));
}

LogLevel absolute_contrast(const LogImage& f, PixelCoord p1, PixelCoord p2) {
    return LogLevel(std::abs(relative_contrast(f, p1, p2).value()));
}

LogLevel pixel_contrast(const LogImage& f, PixelCoord p, const Neighborhood& nbhd) {
    check_coord(f, p, "pixel_contrast");
    return LogLevel(pixel_contrast_raw(f.values().data(), f.width(), f.height(), p.x, p.y,
                                       nbhd.offsets(), f.params().m_bound));
}

ContrastMap contrast_map(const LogImage& f, const Neighborhood& nbhd, int threads) {
    const int w = f.width();
    const int h = f.height();
    const double m = f.params().m_bound;
    const double* data = f.values().data();
    std::vector<double> out(static_cast<std::size_t>(w) * h);
    const auto offs = nbhd.offsets();
    const bool fast8 = nbhd.is_standard_eight() && w >= 3;
    const auto& ks = kernels::kernels_for(kernels::active());

    parallel_rows(h, threads, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            double* out_row = out.data() + static_cast<std::size_t>(y) * w;
            if (fast8 && y > 0 && y < h - 1) {
                const double* up = data + static_cast<std::size_t>(y - 1) * w;
                const double* mid = data + static_cast<std::size_t>(y) * w;
                const double* down = data + static_cast<std::size_t>(y + 1) * w;
                out_row[0] = pixel_contrast_raw(data, w, h, 0, y, offs, m);
                ks.contrast8_span(up, mid, down, out_row, 1, w - 1, m);
                out_row[w - 1] = pixel_contrast_raw(data, w, h, w - 1, y, offs, m);
            } else {
                for (int x = 0; x < w; ++x) {
                    out_row[x] = pixel_contrast_raw(data, w, h, x, y, offs, m);
                }
            }
        }
    });
    return ContrastMap(w, h, f.params(), std::move(out));
}

ContrastMap contrast_map_by_transport(const LogImage& f, const Neighborhood& nbhd) {
    const int w = f.width();
    const int h = f.height();
    const double m = f.params().m_bound;
    const double* data = f.values().data();
    const auto offs = nbhd.offsets();

    // work once in the transported domain
    std::vector<double> transported(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < transported.size(); ++i) {
        transported[i] = m * std::atanh(data[i] / m);
    }

    std::vector<double> out(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double pu = transported[static_cast<std::size_t>(y) * w + x];
            double sum = 0.0;
            int n = 0;
            for (const NeighborOffset& off : offs) {
                const int nx = x + off.dx;
                const int ny = y + off.dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const double pv = transported[static_cast<std::size_t>(ny) * w + nx];
                sum += std::abs(pu - pv) / off.distance;
                ++n;
            }
            double c = 0.0;
            if (n > 0) {
                c = m * std::tanh((sum / n) / m);
                if (c >= m) c = std::nextafter(m, 0.0);
            }
            out[static_cast<std::size_t>(y) * w + x] = c;
        }
    }
    return ContrastMap(w, h, f.params(), std::move(out));
}

}  // namespace lipedge
