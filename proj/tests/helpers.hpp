#pragma once

#include <random>
#include <vector>

#include "ratpoly/normal_form.hpp"
#include "ratpoly/polygon.hpp"

namespace ratpoly::testing {

using Rng = std::mt19937_64;

inline Pt random_point(Rng& rng, i64 lo, i64 hi) {
    std::uniform_int_distribution<i64> d(lo, hi);
    return {d(rng), d(rng)};
}

// Random 2D polygon with vertex coordinates in [lo, hi].
inline ScaledPolygon random_polygon(Rng& rng, i64 k, i64 lo, i64 hi, int npoints = 8) {
    for (;;) {
        std::vector<Pt> pts;
        for (int i = 0; i < npoints; i++) pts.push_back(random_point(rng, lo, hi));
        auto p = polygon_from_points(k, pts);
        if (p) return *p;
    }
}

// Random U in GL(2,Z) as a short word in the standard generators.
inline Mat2 random_unimodular(Rng& rng, int words = 6) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<i64> small(-3, 3);
    Mat2 u;
    auto mul = [&](const Mat2& m) {
        u = Mat2{narrow(i128(m.a) * u.a + i128(m.b) * u.c), narrow(i128(m.a) * u.b + i128(m.b) * u.d),
                 narrow(i128(m.c) * u.a + i128(m.d) * u.c), narrow(i128(m.c) * u.b + i128(m.d) * u.d)};
    };
    for (int i = 0; i < words; i++) {
        switch (pick(rng)) {
            case 0: mul(Mat2{1, small(rng), 0, 1}); break;
            case 1: mul(Mat2{1, 0, small(rng), 1}); break;
            case 2: mul(Mat2{0, 1, 1, 0}); break;
            default: mul(Mat2{-1, 0, 0, 1}); break;
        }
    }
    return u;
}

// Random affine unimodular map with translation in k*Z^2.
inline AffineMap random_affine_map(Rng& rng, i64 k, i64 span = 4) {
    Mat2 u = random_unimodular(rng);
    std::uniform_int_distribution<i64> d(-span, span);
    AffineMap m;
    m.a = u.a; m.b = u.b; m.c = u.c; m.d = u.d;
    m.t = Pt{d(rng) * k, d(rng) * k};
    return m;
}

}  // namespace ratpoly::testing
