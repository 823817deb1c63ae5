#pragma once

#include <vector>

#include "ratpoly/polygon.hpp"

namespace ratpoly {

// A canonical vertex matrix: the dedup key of every enumeration. Columns are
// the matrix columns in canonical order (which may wind clockwise; polygon()
// restores the CCW invariant). Comparison is by the row-major flattened
// sequence (all x entries left to right, then all y entries), the total order
// under which normal forms are maximized.
struct CanonicalForm {
    i64 k = 1;
    std::vector<Pt> cols;

    ScaledPolygon polygon() const;

    bool operator==(const CanonicalForm& o) const { return k == o.k && cols == o.cols; }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
    bool operator<(const CanonicalForm& o) const;
};

// Row-style Hermite normal form of a rank-2 integral 2xn matrix under left
// GL(2,Z) action: pivot columns j1 < j2 with H[0][j1] > 0, H[1][j1] = 0,
// H[1][j2] > 0 and 0 <= H[0][j2] < H[1][j2]. Unique per orbit.
// Throws std::invalid_argument when rank < 2.
std::vector<Pt> hermite_normal_form(const std::vector<Pt>& cols);

// Same, also reporting a witness U with U * M = H (not unique across
// implementations, but deterministic here).
std::vector<Pt> hermite_normal_form(const std::vector<Pt>& cols, Mat2& witness);

// Lexicographic maximum of the Hermite forms over all 2n vertex orders
// (rotations and the reversal). Equal values decide unimodular equivalence.
CanonicalForm unimodular_normal_form(const ScaledPolygon& p);

// Like the unimodular form but each candidate is translated so its anchor
// vertex sits at the origin; decides equivalence under GL(2,Z) together with
// arbitrary integer translations of the scaled matrix.
CanonicalForm affine_normal_form1(const ScaledPolygon& p);

// The k-affine normal form: affine_normal_form1 shifted by the
// lexicographically smallest residue (x,y) in {0..k-1}^2 that stays in the
// k-affine class (translations restricted to k*Z^2, i.e. integral
// translations of the unscaled polygon). This is the persisted dedup key.
CanonicalForm affine_normal_form(const ScaledPolygon& p);

// Unimodular form restricted to candidates anchored at vertices maximizing
// det(v[i+1]-v[i], v[i]-v[i-1]); cheaper on asymmetric polygons and induces
// the same equivalence verdicts as unimodular_normal_form.
CanonicalForm special_normal_form(const ScaledPolygon& p);

// Number of anchored vertex orders attaining the maximum in affine_normal_form1.
struct AutomorphismGroup {
    i64 order = 1;
    bool dihedral = false;  // true: D_{order/2}; false: cyclic C_order
};

AutomorphismGroup automorphism_group(const ScaledPolygon& p);

}  // namespace ratpoly
