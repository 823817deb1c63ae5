#pragma once

#include <vector>

#include "ratpoly/normal_form.hpp"
#include "ratpoly/storage.hpp"

namespace ratpoly {

// Closed half-plane of all points to the right of the directed line v -> w
// (direction w - v); the normal is the clockwise rotation of w - v, primitive.
HalfPlane halfplane_through(const Pt& v, const Pt& w);

struct StripOptions {
    int workers = 1;
    const CheckpointConfig* checkpoint = nullptr;
};

// k-maximal polygons with i interior lattice points realizable in R x [-1,1],
// by the anchored two-line sweep over the bounding trapezoid.
std::vector<CanonicalForm> classify_strip_height2(i64 k, i64 i, const StripOptions& opts = {});

// k-maximal polygons without interior lattice points, split by realizability:
// strip1 in R x [-1,1], strip2 only in R x [-1,2].
struct NoInteriorClassification {
    std::vector<CanonicalForm> strip1;
    std::vector<CanonicalForm> strip2;
    i64 total() const { return (i64)strip1.size() + (i64)strip2.size(); }
};

NoInteriorClassification classify_no_interior(i64 k, const StripOptions& opts = {});

// k-maximal polygons with exactly one interior lattice point, split by the
// smallest realizing strip: R x [-1,1], R x [-1,2], R x [-2,2].
struct OneInteriorClassification {
    std::vector<CanonicalForm> strip1;
    std::vector<CanonicalForm> strip2;
    std::vector<CanonicalForm> strip3;
    i64 total() const { return (i64)(strip1.size() + strip2.size() + strip3.size()); }
};

OneInteriorClassification classify_one_interior(i64 k, const StripOptions& opts = {});

// All k-rational polygons with exactly i collinear interior lattice points,
// up to k-affine equivalence. Requires i > k (below that the strip embedding
// is not guaranteed and the input is rejected).
std::vector<CanonicalForm> classify_collinear(i64 k, i64 i, const StripOptions& opts = {});

// Conjectured count of half-integral polygons with i >= 3 collinear interior
// lattice points; exact evaluation, integrality asserted.
i64 collinear_count_formula(i64 i);

}  // namespace ratpoly
