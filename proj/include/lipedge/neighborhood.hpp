#pragma once

#include <span>
#include <utility>
#include <vector>

namespace lipedge {

struct NeighborOffset {
    int dx = 0;
    int dy = 0;
    double distance = 0.0;  // sqrt(dx^2 + dy^2), fixed at construction
};

// The set of neighbor offsets a pixel's contrast is averaged over.
// Offsets must be distinct and must not include (0, 0).
class Neighborhood {
public:
    explicit Neighborhood(const std::vector<std::pair<int, int>>& offsets);

    // The 3x3 window around the pixel: 8 offsets in row-major order,
    // distances 1 (axial) and sqrt(2) (diagonal).
    static const Neighborhood& eight();

    std::span<const NeighborOffset> offsets() const { return offsets_; }
    int size() const { return static_cast<int>(offsets_.size()); }

    // True for the standard 3x3 window in canonical order; the contrast
    // kernels have a fast path for it.
    bool is_standard_eight() const;

private:
    std::vector<NeighborOffset> offsets_;
};

}  // namespace lipedge
