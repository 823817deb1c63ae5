#pragma once

#include <vector>

#include "ratpoly/polygon.hpp"

namespace ratpoly {

struct RationalPoint {
    Rat x, y;
    bool is_integral() const { return x.is_integer() && y.is_integer(); }
    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const RationalPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// Vertices of the intersection of closed half-planes, counterclockwise.
// Sizes: 0 (empty), 1, 2 (lower-dimensional), or >= 3. Throws
// std::invalid_argument when the region is unbounded.
std::vector<RationalPoint> region_vertices(const std::vector<HalfPlane>& hs);

// Edge half-planes of the scaled polygon, each relaxed by lattice distance 1
// in scaled units (lattice distance 1/k on the unscaled polygon).
std::vector<HalfPlane> moved_out(const ScaledPolygon& p);

// All integer points on the boundary of the (bounded, nonempty) region cut
// out by the half-planes, sorted. Throws when the region is unbounded.
std::vector<Pt> region_boundary_lattice_points(const std::vector<HalfPlane>& hs);

// True iff no k-rational polygon strictly contains P with the same number of
// interior lattice points, decided by the moved-out boundary probe criterion.
bool is_k_maximal(const ScaledPolygon& p);

// Convex hull of the interior lattice points, in lattice (unscaled)
// coordinates. dim: -1 empty, 0 point, 1 segment, 2 polygon.
struct InteriorHull {
    int dim = -1;
    std::vector<Pt> points;  // hull vertices; CCW when dim == 2
};

InteriorHull interior_hull(const ScaledPolygon& p);

// For a lattice polygon with two-dimensional interior hull: maximality via
// the round trip P == moved_out(hull of interior points). Throws
// std::invalid_argument if p.k != 1 or the interior hull is not 2D.
bool is_one_maximal_lattice(const ScaledPolygon& p);

// True iff the lattice polygon q arises as the interior hull of some lattice
// polygon. Decided via the largest candidate witness conv(moved_out(q) cap Z^2).
bool is_internal(const ScaledPolygon& q);

}  // namespace ratpoly
