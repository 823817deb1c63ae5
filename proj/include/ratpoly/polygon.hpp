#pragma once

#include <optional>
#include <vector>

#include "ratpoly/point.hpp"

namespace ratpoly {

// Lattice point counts of a polygon: interior, boundary, and total.
// For lattice polygons Pick's identity Vol = 2*interior + boundary - 2 holds.
struct LatticeTally {
    i64 interior = 0;
    i64 boundary = 0;
    i64 total() const { return interior + boundary; }
};

// Closed half-plane {x : <normal, x> >= offset} in scaled coordinates.
// normal is primitive; offset is an integer because all data is scaled by k.
struct HalfPlane {
    Pt normal;
    i64 offset = 0;

    bool contains(const Pt& p) const { return dot(normal, p) >= offset; }
    bool strictly_contains(const Pt& p) const { return dot(normal, p) > offset; }

    bool operator==(const HalfPlane& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const HalfPlane& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

// Affine unimodular map x -> U x + t in scaled coordinates. |det U| = 1.
// Translations t in k*Z^2 correspond to integral translations of the
// unscaled polygon.
struct AffineMap {
    i64 a = 1, b = 0, c = 0, d = 1;  // U = [[a, b], [c, d]]
    Pt t;

    Pt apply(const Pt& p) const {
        return {checked_add(checked_add(checked_mul(a, p.x), checked_mul(b, p.y)), t.x),
                checked_add(checked_add(checked_mul(c, p.x), checked_mul(d, p.y)), t.y)};
    }
    i64 det() const { return narrow(i128(a) * d - i128(b) * c); }

    static AffineMap identity() { return {}; }
};

// A k-rational polygon stored as the integer vertices of kP.
// Invariants: counterclockwise order, strict turns at every vertex
// (no duplicates, no three collinear), rotation anchored at the
// lexicographically smallest vertex.
struct ScaledPolygon {
    i64 k = 1;
    std::vector<Pt> verts;

    size_t size() const { return verts.size(); }
    bool operator==(const ScaledPolygon& o) const { return k == o.k && verts == o.verts; }
};

// Convex hull, counterclockwise, starting at the lexicographically smallest
// point, collinear non-vertices removed. Degenerate inputs (all points on a
// line) return the 1 or 2 extreme points; callers decide how to handle them.
std::vector<Pt> convex_hull(std::vector<Pt> points);

// Builds a polygon from an arbitrary point set; nullopt if the hull is not
// two-dimensional.
std::optional<ScaledPolygon> polygon_from_points(i64 k, const std::vector<Pt>& points);

// Wraps an already-ordered CCW vertex list, validating the invariants and
// normalizing the starting vertex. Throws std::invalid_argument on bad input.
ScaledPolygon polygon_from_ccw(i64 k, std::vector<Pt> verts);

// Twice the euclidean area of the scaled polygon kP (the k-normalized volume);
// always a nonnegative integer for valid polygons.
i64 normalized_volume(const ScaledPolygon& p);

// Counts points of Z^2 (unscaled lattice) in the interior and boundary of P,
// i.e. points of k*Z^2 against the scaled vertex data.
LatticeTally tally(const ScaledPolygon& p);

// All integer points of the scaled polygon kP (the k-rational points of P in
// scaled coordinates), row-major sorted: by y, then x.
std::vector<Pt> k_rational_points(const ScaledPolygon& p);

// Number of integer points of kP without materializing them.
i64 count_k_rational_points(const ScaledPolygon& p);

// Inward edge half-planes of the scaled polygon, one per edge, in edge order
// (edge j joins vertex j to vertex j+1).
std::vector<HalfPlane> edge_halfplanes(const ScaledPolygon& p);

// Points of k*Z^2 strictly between a and b.
i64 lattice_points_inside_edge(const Pt& a, const Pt& b, i64 k);

// Point location against the scaled polygon. Points are scaled coordinates.
bool contains_point(const ScaledPolygon& p, const Pt& q);
bool strictly_contains_point(const ScaledPolygon& p, const Pt& q);

// Counts interior points of k*Z^2; stops early once the count exceeds `limit`
// (returns limit+1 in that case). Used by the classification sweeps.
i64 interior_lattice_count(const ScaledPolygon& p, i64 limit);

struct WidthResult {
    i64 width = 0;                // width of kP, i.e. k * lw(P)
    std::vector<Pt> directions;   // all primitive minimizers, sign-canonical, sorted
};

// max <v,w> - min <v,w> over the scaled vertices.
i64 width_in_direction(const ScaledPolygon& p, const Pt& w);

// Lattice width of the scaled polygon with all minimizing directions.
// Exhaustive over a certified finite direction box; see lattice_width_candidates.
WidthResult lattice_width(const ScaledPolygon& p);

// All primitive directions w (sign-canonical) with width_w(kP) <= bound,
// certified complete via two independent vertex-difference vectors.
std::vector<Pt> directions_with_width_at_most(const ScaledPolygon& p, i64 bound);

// A map sending P into the horizontal strip R x [c, c+n] (unscaled) for some
// integer c, when one exists. The returned map achieves c = 0. Translations
// are in k*Z^2.
std::optional<AffineMap> fits_in_strip(const ScaledPolygon& p, i64 n);

// Vertex-wise image under an affine unimodular map, re-oriented CCW when
// det U = -1.
ScaledPolygon apply_map(const ScaledPolygon& p, const AffineMap& m);

// Least positive d such that d*P is integral, i.e. the true denominator of P;
// always divides k.
i64 denominator(const ScaledPolygon& p);

// Exact x-interval [lo, hi] of the polygon at height y (scaled coordinates),
// or nullopt if the horizontal line misses the polygon.
std::optional<std::pair<Rat, Rat>> row_span(const ScaledPolygon& p, i64 y);

}  // namespace ratpoly
