#pragma once

#include "lipedge/image.hpp"
#include "lipedge/neighborhood.hpp"

namespace lipedge {

// Distance-scaled difference of two pixels' levels,
// (1/d) <*> (f(p1) <-> f(p2)); signed, antisymmetric in p1/p2.
// Throws std::invalid_argument if p1 == p2 and std::out_of_range if a
// coordinate is outside the image.
LogLevel relative_contrast(const LogImage& f, PixelCoord p1, PixelCoord p2);

// |relative_contrast|; symmetric, in [0, m_bound).
LogLevel absolute_contrast(const LogImage& f, PixelCoord p1, PixelCoord p2);

// The <*>-by-1/n mean of the <+>-sum of absolute contrasts between p and its
// in-bounds neighbors, folded in the neighborhood's offset order. n counts
// in-bounds neighbors only (3 at the corners and 5 along the edges of the
// 3x3 window); a pixel with no in-bounds neighbor has contrast 0.
LogLevel pixel_contrast(const LogImage& f, PixelCoord p, const Neighborhood& nbhd);

// pixel_contrast at every pixel: the contour image. Embarrassingly parallel;
// the result is independent of the thread count.
ContrastMap contrast_map(const LogImage& f, const Neighborhood& nbhd, int threads = 1);

// The same map computed through the isomorphism instead of the interval
// operations: C(p) = phi_inv((1/n) sum_i |phi(f(p)) - phi(f(p_i))| / d_i).
// Mathematically identical to contrast_map but shares no code with it;
// each is a check on the other.
ContrastMap contrast_map_by_transport(const LogImage& f, const Neighborhood& nbhd);

}  // namespace lipedge
