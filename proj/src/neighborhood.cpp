#include "lipedge/neighborhood.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace lipedge {

Neighborhood::Neighborhood(const std::vector<std::pair<int, int>>& offsets) {
    if (offsets.empty()) {
        throw std::invalid_argument("neighborhood must contain at least one offset");
    }
    std::set<std::pair<int, int>> seen;
    offsets_.reserve(offsets.size());
    for (const auto& [dx, dy] : offsets) {
        if (dx == 0 && dy == 0) {
            throw std::invalid_argument("neighborhood must not contain the (0, 0) offset");
        }
        if (!seen.insert({dx, dy}).second) {
            throw std::invalid_argument("duplicate neighborhood offset");
        }
        const double d = std::sqrt(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy);
        offsets_.push_back({dx, dy, d});
    }
}

const Neighborhood& Neighborhood::eight() {
    static const Neighborhood n({{-1, -1}, {0, -1}, {1, -1},
                                 {-1, 0},           {1, 0},
                                 {-1, 1},  {0, 1},  {1, 1}});
    return n;
}

bool Neighborhood::is_standard_eight() const {
    const auto& std8 = eight().offsets_;
    if (offsets_.size() != std8.size()) return false;
    for (std::size_t i = 0; i < std8.size(); ++i) {
        if (offsets_[i].dx != std8[i].dx || offsets_[i].dy != std8[i].dy) return false;
    }
    return true;
}

}  // namespace lipedge
