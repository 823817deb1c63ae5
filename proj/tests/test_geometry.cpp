#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "ratpoly/polygon.hpp"

using namespace ratpoly;
using ratpoly::testing::Rng;

namespace {

ScaledPolygon poly(i64 k, std::vector<Pt> verts) { return polygon_from_ccw(k, std::move(verts)); }

// O(n^3) extremality check: p is a hull vertex iff it is not in the hull of
// the others, tested by "some line through p has all other points strictly on
// one side" via all pairs.
bool is_extreme_bruteforce(const std::vector<Pt>& pts, const Pt& p) {
    std::vector<Pt> others;
    for (const Pt& q : pts)
        if (q != p) others.push_back(q);
    if (others.empty()) return true;
    for (size_t i = 0; i < others.size(); i++) {
        // direction candidate: edge from p
        Pt d = others[i] - p;
        bool left = false, right = false, behind = false;
        for (const Pt& q : others) {
            i128 c = cross(d, q - p);
            if (c > 0) left = true;
            if (c < 0) right = true;
            if (c == 0 && dot(d, q - p) < 0) behind = true;
        }
        if ((!left || !right) && !behind) {
            // all points weakly on one side of the line p + R*d; p extreme
            // unless it lies strictly between collinear neighbors
            bool strictly_inside_edge = false;
            for (const Pt& q : others)
                for (const Pt& r : others)
                    if (cross(q - p, r - p) == 0 && dot(q - p, r - p) < 0) strictly_inside_edge = true;
            if (!strictly_inside_edge) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("convex hull basics") {
    auto h = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(h == std::vector<Pt>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    h = convex_hull({{0, 0}, {2, 0}, {1, 0}, {0, 2}});
    CHECK(h == std::vector<Pt>{{0, 0}, {2, 0}, {0, 2}});

    // degenerate inputs return the extremes
    CHECK(convex_hull({{1, 1}}) == std::vector<Pt>{{1, 1}});
    CHECK(convex_hull({{0, 0}, {2, 2}, {1, 1}}) == std::vector<Pt>{{0, 0}, {2, 2}});
}

TEST_CASE("convex hull matches brute-force extremality on random sets") {
    Rng rng(7);
    for (int iter = 0; iter < 60; iter++) {
        std::vector<Pt> pts;
        for (int i = 0; i < 50; i++) pts.push_back(testing::random_point(rng, -12, 12));
        auto hull = convex_hull(pts);
        std::set<Pt> hull_set(hull.begin(), hull.end());
        std::set<Pt> uniq(pts.begin(), pts.end());
        for (const Pt& p : uniq) {
            bool extreme = is_extreme_bruteforce(pts, p);
            CHECK(hull_set.count(p) == (extreme ? 1u : 0u));
        }
        // idempotent and order-insensitive
        auto again = convex_hull(hull);
        CHECK(again == hull);
        std::reverse(pts.begin(), pts.end());
        CHECK(convex_hull(pts) == hull);
    }
}

TEST_CASE("tally and Pick") {
    auto t = tally(poly(1, {{0, 0}, {2, 0}, {0, 2}}));
    CHECK(t.interior == 0);
    CHECK(t.boundary == 6);
    CHECK(t.total() == 6);
    CHECK(normalized_volume(poly(1, {{0, 0}, {2, 0}, {0, 2}})) == 2 * t.interior + t.boundary - 2);

    t = tally(poly(1, {{0, 0}, {3, 0}, {0, 3}}));
    CHECK(t.interior == 1);
    CHECK(t.boundary == 9);
    CHECK(t.total() == 10);

    t = tally(poly(2, {{0, 0}, {1, 0}, {0, 1}}));
    CHECK(t.interior == 0);
    CHECK(t.boundary == 1);
    CHECK(t.total() == 1);
}

TEST_CASE("tally equals direct enumeration on random polygons") {
    Rng rng(11);
    for (int iter = 0; iter < 200; iter++) {
        i64 k = 1 + iter % 3;
        auto p = testing::random_polygon(rng, k, -9, 9);
        auto pts = k_rational_points(p);
        i64 total = 0, boundary = 0;
        for (const Pt& q : pts) {
            if (mod_floor(q.x, k) != 0 || mod_floor(q.y, k) != 0) continue;
            total++;
            if (!strictly_contains_point(p, q)) boundary++;
        }
        auto t = tally(p);
        CHECK(t.total() == total);
        CHECK(t.boundary == boundary);
        // Pick on lattice polygons
        if (denominator(p) == k) { /* nothing extra */ }
        if (k == 1) CHECK(normalized_volume(p) == 2 * t.interior + t.boundary - 2);
    }
}

TEST_CASE("k-rational points") {
    CHECK(k_rational_points(poly(1, {{0, 0}, {1, 0}, {1, 1}, {0, 1}})).size() == 4);
    CHECK(k_rational_points(poly(2, {{0, 0}, {2, 0}, {2, 2}, {0, 2}})).size() == 9);
    auto p = poly(1, {{0, 0}, {3, 0}, {0, 3}});
    CHECK((i64)k_rational_points(p).size() == tally(p).total());
    CHECK(count_k_rational_points(p) == 10);
    // row-major order
    auto pts = k_rational_points(p);
    CHECK(std::is_sorted(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }));
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(poly(1, {{0, 0}, {1, 0}, {0, 1}})) == 1);
    CHECK(normalized_volume(poly(1, {{0, 0}, {2, 0}, {0, 2}})) == 4);
    CHECK(normalized_volume(poly(2, {{0, 0}, {1, 0}, {0, 1}})) == 1);
}

TEST_CASE("lattice width") {
    for (i64 m = 1; m <= 5; m++) {
        auto r = lattice_width(poly(1, {{0, 0}, {m, 0}, {m, m}, {0, m}}));
        CHECK(r.width == m);
        CHECK(r.directions == std::vector<Pt>{{0, 1}, {1, 0}});
    }
    CHECK(lattice_width(poly(1, {{0, 0}, {2, 0}, {0, 2}})).width == 2);
    CHECK(lattice_width(poly(1, {{0, 0}, {3, 0}, {0, 3}})).width == 3);
}

TEST_CASE("lattice width agrees with brute force") {
    Rng rng(23);
    for (int iter = 0; iter < 1000; iter++) {
        auto p = testing::random_polygon(rng, 1 + iter % 2, -20, 20, 6);
        auto r = lattice_width(p);
        i64 best = INT64_MAX;
        std::vector<Pt> dirs;
        for (i64 x = 0; x <= 60; x++) {
            for (i64 y = (x == 0 ? 1 : -60); y <= 60; y++) {
                Pt w{x, y};
                if (!is_primitive(w)) continue;
                i64 width = width_in_direction(p, w);
                if (width < best) {
                    best = width;
                    dirs.clear();
                }
                if (width == best) dirs.push_back(w);
            }
        }
        std::sort(dirs.begin(), dirs.end());
        CHECK(r.width == best);
        // impl directions must lie inside the oracle scan range
        for (const Pt& w : r.directions) CHECK(std::max(std::abs(w.x), std::abs(w.y)) <= 60);
        CHECK(r.directions == dirs);
    }
}

TEST_CASE("fits_in_strip") {
    auto p = poly(1, {{0, 0}, {2, 0}, {0, 2}});
    auto m = fits_in_strip(p, 2);
    REQUIRE(m.has_value());
    auto img = apply_map(p, *m);
    i64 ymin = INT64_MAX, ymax = INT64_MIN;
    for (const Pt& v : img.verts) { ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y); }
    CHECK(ymin >= 0);
    CHECK(ymax <= 2);

    CHECK(!fits_in_strip(poly(1, {{0, 0}, {3, 0}, {0, 3}}), 2).has_value());

    // width 1 but misaligned: [1/2, 3/2] fits no integral strip of height 1
    auto q = poly(2, {{1, 1}, {3, 1}, {3, 3}, {1, 3}});
    CHECK(!fits_in_strip(q, 1).has_value());
    CHECK(fits_in_strip(q, 2).has_value());

    Rng rng(5);
    for (int iter = 0; iter < 100; iter++) {
        auto r = testing::random_polygon(rng, 1 + iter % 2, -8, 8);
        auto wr = lattice_width(r);
        // strip of height >= width, when the width direction aligns integrally
        i64 n = wr.width / r.k + 2;
        auto fit = fits_in_strip(r, n);
        CHECK(fit.has_value());
    }
}

TEST_CASE("apply_map preserves invariants") {
    Rng rng(31);
    auto p = poly(1, {{0, 0}, {1, 0}, {0, 2}});
    AffineMap swap_xy{0, 1, 1, 0, {0, 0}};
    auto img = apply_map(p, swap_xy);
    CHECK(img == poly(1, {{0, 0}, {2, 0}, {0, 1}}));
    CHECK(apply_map(p, AffineMap::identity()) == p);

    for (int iter = 0; iter < 100; iter++) {
        auto q = testing::random_polygon(rng, 1 + iter % 3, -10, 10);
        auto m = testing::random_affine_map(rng, q.k);
        auto qi = apply_map(q, m);
        auto t0 = tally(q), t1 = tally(qi);
        CHECK(t0.interior == t1.interior);
        CHECK(t0.boundary == t1.boundary);
        CHECK(normalized_volume(q) == normalized_volume(qi));
        CHECK(lattice_width(q).width == lattice_width(qi).width);
        CHECK(denominator(q) == denominator(qi));
    }
}

TEST_CASE("degenerate point sets are rejected where required") {
    CHECK(!polygon_from_points(1, {{0, 0}, {1, 1}, {2, 2}}).has_value());
    CHECK_THROWS_AS(polygon_from_ccw(1, {{0, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_ccw(1, {{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
    // clockwise input rejected
    CHECK_THROWS_AS(polygon_from_ccw(1, {{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("overflow is reported, not wrapped") {
    i64 big = i64(1) << 62;
    CHECK_THROWS_AS(checked_mul(big, 4), arithmetic_error);
    CHECK_THROWS_AS(Pt(big, 0) + Pt(big, 0), arithmetic_error);
}
