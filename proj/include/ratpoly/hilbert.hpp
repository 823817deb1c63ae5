#pragma once

#include <optional>
#include <vector>

#include "ratpoly/polygon.hpp"

namespace ratpoly {

// Coefficients [b1,...,br] of the negative-regular continued fraction
// b1 - 1/(b2 - 1/(...)), all entries >= 2. Empty for the smooth cone (d = 1).
using ContinuedFraction = std::vector<i64>;

// Minimal expansion of d/a with all coefficients >= 2, via the modified
// euclidean algorithm. Requires 0 <= a < d and gcd(a, d) = 1; a = 0 forces
// d = 1 (smooth case) and yields the empty expansion.
ContinuedFraction continued_fraction(i64 d, i64 a);

// Exact value of a nonempty expansion.
Rat continued_fraction_value(const ContinuedFraction& cf);

// Minimal generating set of cone(ray1, ray2) intersected with Z^2, ordered
// naturally along the bounded edges of conv((cone cap Z^2) minus origin),
// from ray1 to ray2. is_vertex marks the extreme points of that hull chain
// (both endpoints always are).
struct HilbertBasis {
    std::vector<Pt> points;
    std::vector<bool> is_vertex;
};

HilbertBasis hilbert_basis(const Pt& ray1, const Pt& ray2);

// conv((P cap (1/k)Z^2) minus vertex j), computed by splicing the Hilbert
// basis of the vertex cone in place of the removed vertex. polygon is empty
// when the result drops below dimension 2. boundary_hit is true exactly when
// an interior lattice point of P lands on the boundary of the result, i.e.
// i(result) < i(P).
struct ShaveResult {
    std::optional<ScaledPolygon> polygon;
    bool boundary_hit = false;
};

ShaveResult shave_vertex(const ScaledPolygon& p, size_t j);

}  // namespace ratpoly
