#pragma once

#include <string>
#include <vector>

#include "ratpoly/polygon.hpp"

namespace ratpoly {

// Exact representation of t -> |tP cap Z^2| = A t^2 + c1(t) t + c2(t), with
// coefficient tables indexed by t mod period; period is minimal and divides
// the denominator scale.
struct QuasiPolynomial {
    Rat area;                // the euclidean area A
    i64 period = 1;
    std::vector<Rat> c1, c2; // length == period, index t % period

    bool operator==(const QuasiPolynomial& o) const {
        return area == o.area && period == o.period && c1 == o.c1 && c2 == o.c2;
    }
};

// Interpolated from exact lattice point counts of small dilations, verified
// on a third sample per residue, reduced to the minimal period.
QuasiPolynomial ehrhart(const ScaledPolygon& p);

// Exact evaluation at t >= 1; a non-integral or negative value raises
// arithmetic_error (it would mean a counting bug).
i64 evaluate(const QuasiPolynomial& q, i64 t);

// Stable serialization; equal functions get equal keys.
std::string quasi_key(const QuasiPolynomial& q);

// Number of distinct Ehrhart quasipolynomials in a collection, optionally
// restricted to polygons with at least min_boundary boundary lattice points.
i64 distinct_ehrhart_count(const std::vector<ScaledPolygon>& polys, i64 min_boundary = 0,
                           int workers = 1);

// Conjectured count of distinct Ehrhart quasipolynomials of half-integral
// polygons with i >= 2 interior lattice points and >= 2 boundary points.
i64 ehrhart_count_formula(i64 i);

}  // namespace ratpoly
