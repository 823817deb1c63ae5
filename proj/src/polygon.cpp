#include "ratpoly/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratpoly {

std::vector<Pt> convex_hull(std::vector<Pt> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const size_t n = points.size();
    if (n <= 2) return points;

    // Andrew's monotone chain; strict turns drop collinear non-vertices.
    std::vector<Pt> hull(2 * n);
    size_t h = 0;
    for (size_t i = 0; i < n; i++) {  // lower hull
        while (h >= 2 && orient(hull[h - 2], hull[h - 1], points[i]) <= 0) h--;
        hull[h++] = points[i];
    }
    for (size_t i = n - 1, lower = h + 1; i-- > 0;) {  // upper hull
        while (h >= lower && orient(hull[h - 2], hull[h - 1], points[i]) <= 0) h--;
        hull[h++] = points[i];
    }
    hull.resize(h - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;  // starts at the lex-smallest point by construction
}

static void rotate_to_lex_min(std::vector<Pt>& verts) {
    auto it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), it, verts.end());
}

std::optional<ScaledPolygon> polygon_from_points(i64 k, const std::vector<Pt>& points) {
    std::vector<Pt> hull = convex_hull(points);
    if (hull.size() < 3) return std::nullopt;
    return ScaledPolygon{k, std::move(hull)};
}

ScaledPolygon polygon_from_ccw(i64 k, std::vector<Pt> verts) {
    if (k < 1) throw std::invalid_argument("polygon scale must be positive");
    const size_t n = verts.size();
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; i++) {
        if (orient(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) != 1)
            throw std::invalid_argument("vertex list is not strictly convex counterclockwise");
    }
    rotate_to_lex_min(verts);
    return ScaledPolygon{k, std::move(verts)};
}

i64 normalized_volume(const ScaledPolygon& p) {
    i128 s = 0;
    const size_t n = p.verts.size();
    for (size_t i = 0; i < n; i++) s += cross(p.verts[i], p.verts[(i + 1) % n]);
    return narrow(s);
}

std::optional<std::pair<Rat, Rat>> row_span(const ScaledPolygon& p, i64 y) {
    bool found = false;
    Rat lo, hi;
    const size_t n = p.verts.size();
    auto take = [&](const Rat& x) {
        if (!found) { lo = hi = x; found = true; return; }
        if (x < lo) lo = x;
        if (hi < x) hi = x;
    };
    for (size_t i = 0; i < n; i++) {
        const Pt& a = p.verts[i];
        const Pt& b = p.verts[(i + 1) % n];
        if (a.y == y) take(Rat(a.x));
        if (a.y == b.y) continue;
        i64 ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
        if (y <= ylo || y >= yhi) continue;
        // x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y), exact
        i128 num = i128(a.x) * (b.y - a.y) + i128(y - a.y) * (b.x - a.x);
        take(Rat::from128(num, b.y - a.y));
    }
    if (!found) return std::nullopt;
    return std::make_pair(lo, hi);
}

namespace {

// t*c == e (mod m); returns residue/modulus of the solution set, or nullopt.
std::optional<std::pair<i64, i64>> solve_congruence(i64 c, i64 e, i64 m) {
    c = mod_floor(c, m);
    e = mod_floor(e, m);
    i64 g = gcd64(c, m);
    if (g == 0) return std::make_pair<i64, i64>(0, 1);  // m == 1
    if (e % g != 0) return std::nullopt;
    i64 m2 = m / g;
    if (m2 == 1) return std::make_pair<i64, i64>(0, 1);
    i64 x, yy;
    ext_gcd(c / g, m2, x, yy);
    i64 r = mod_floor(narrow(i128(mod_floor(x, m2)) * ((e / g) % m2)), m2);
    return std::make_pair(r, m2);
}

std::optional<std::pair<i64, i64>> combine_congruences(std::pair<i64, i64> a, std::pair<i64, i64> b) {
    auto [r1, m1] = a;
    auto [r2, m2] = b;
    i64 g = gcd64(m1, m2);
    if ((r2 - r1) % g != 0) return std::nullopt;
    i64 lcm = m1 / g * m2;
    i64 x, yy;
    ext_gcd(m1 / g, m2 / g, x, yy);
    i64 s = mod_floor(narrow(i128(mod_floor(x, m2 / g)) * (((r2 - r1) / g) % (m2 / g))), m2 / g);
    i64 r = mod_floor(narrow(i128(r1) + i128(m1) * s), lcm);
    return std::make_pair(r, lcm);
}

// Points of k*Z^2 on the half-open segment [a, b).
i64 count_multiples_on_edge(const Pt& a, const Pt& b, i64 k) {
    Pt d = b - a;
    i64 g = gcd64(d.x, d.y);
    Pt step{d.x / g, d.y / g};
    auto cx = solve_congruence(step.x, -a.x, k);
    if (!cx) return 0;
    auto cy = solve_congruence(step.y, -a.y, k);
    if (!cy) return 0;
    auto both = combine_congruences(*cx, *cy);
    if (!both) return 0;
    auto [r, m] = *both;
    if (r > g - 1) return 0;
    return (g - 1 - r) / m + 1;
}

// Multiples of k in the closed interval [lo, hi].
i64 multiples_in_closed(const Rat& lo, const Rat& hi, i64 k) {
    i64 a = (lo / Rat(k)).ceil();
    i64 b = (hi / Rat(k)).floor();
    return b >= a ? b - a + 1 : 0;
}

// Multiples of k in the open interval (lo, hi).
i64 multiples_in_open(const Rat& lo, const Rat& hi, i64 k) {
    i64 a = (lo / Rat(k)).floor() + 1;
    i64 b = (hi / Rat(k)).ceil() - 1;
    return b >= a ? b - a + 1 : 0;
}

}  // namespace

i64 lattice_points_inside_edge(const Pt& a, const Pt& b, i64 k) {
    i64 on_halfopen = count_multiples_on_edge(a, b, k);
    bool a_is_lattice = mod_floor(a.x, k) == 0 && mod_floor(a.y, k) == 0;
    return on_halfopen - (a_is_lattice ? 1 : 0);
}

LatticeTally tally(const ScaledPolygon& p) {
    const size_t n = p.verts.size();
    if (n < 3) throw std::invalid_argument("tally: polygon must be two-dimensional");
    i64 boundary = 0;
    for (size_t i = 0; i < n; i++)
        boundary += count_multiples_on_edge(p.verts[i], p.verts[(i + 1) % n], p.k);

    i64 ymin = p.verts[0].y, ymax = p.verts[0].y;
    for (const Pt& v : p.verts) { ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y); }
    i64 total = 0;
    for (i64 m = ceil_div(ymin, p.k); m <= floor_div(ymax, p.k); m++) {
        auto span = row_span(p, m * p.k);
        if (span) total += multiples_in_closed(span->first, span->second, p.k);
    }
    LatticeTally t;
    t.boundary = boundary;
    t.interior = total - boundary;
    return t;
}

i64 interior_lattice_count(const ScaledPolygon& p, i64 limit) {
    i64 ymin = p.verts[0].y, ymax = p.verts[0].y;
    for (const Pt& v : p.verts) { ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y); }
    i64 count = 0;
    for (i64 m = floor_div(ymin, p.k) + 1; m * p.k < ymax; m++) {
        auto span = row_span(p, m * p.k);
        if (!span) continue;
        count += multiples_in_open(span->first, span->second, p.k);
        if (count > limit) return limit + 1;
    }
    return count;
}

std::vector<Pt> k_rational_points(const ScaledPolygon& p) {
    std::vector<Pt> pts;
    i64 ymin = p.verts[0].y, ymax = p.verts[0].y;
    for (const Pt& v : p.verts) { ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y); }
    for (i64 y = ymin; y <= ymax; y++) {
        auto span = row_span(p, y);
        if (!span) continue;
        for (i64 x = span->first.ceil(); x <= span->second.floor(); x++) pts.push_back({x, y});
    }
    return pts;
}

i64 count_k_rational_points(const ScaledPolygon& p) {
    i64 total = 0;
    i64 ymin = p.verts[0].y, ymax = p.verts[0].y;
    for (const Pt& v : p.verts) { ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y); }
    for (i64 y = ymin; y <= ymax; y++) {
        auto span = row_span(p, y);
        if (span) total += span->second.floor() - span->first.ceil() + 1;
    }
    return total;
}

std::vector<HalfPlane> edge_halfplanes(const ScaledPolygon& p) {
    const size_t n = p.verts.size();
    std::vector<HalfPlane> hs;
    hs.reserve(n);
    for (size_t i = 0; i < n; i++) {
        Pt d = p.verts[(i + 1) % n] - p.verts[i];
        Pt normal = primitive(Pt{-d.y, d.x});  // inward for CCW order
        hs.push_back({normal, narrow(dot(normal, p.verts[i]))});
    }
    return hs;
}

bool contains_point(const ScaledPolygon& p, const Pt& q) {
    const size_t n = p.verts.size();
    for (size_t i = 0; i < n; i++)
        if (orient(p.verts[i], p.verts[(i + 1) % n], q) < 0) return false;
    return true;
}

bool strictly_contains_point(const ScaledPolygon& p, const Pt& q) {
    const size_t n = p.verts.size();
    for (size_t i = 0; i < n; i++)
        if (orient(p.verts[i], p.verts[(i + 1) % n], q) <= 0) return false;
    return true;
}

i64 width_in_direction(const ScaledPolygon& p, const Pt& w) {
    i128 mn = dot(p.verts[0], w), mx = mn;
    for (const Pt& v : p.verts) {
        i128 d = dot(v, w);
        mn = std::min(mn, d);
        mx = std::max(mx, d);
    }
    return narrow(mx - mn);
}

namespace {

// Two linearly independent vertex-difference vectors; any direction w has
// width_w >= max(|<D1,w>|, |<D2,w>|), which certifies the candidate box below.
std::pair<Pt, Pt> spread_vectors(const ScaledPolygon& p) {
    const auto& v = p.verts;
    size_t xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    for (size_t i = 1; i < v.size(); i++) {
        if (v[i].x < v[xlo].x) xlo = i;
        if (v[i].x > v[xhi].x) xhi = i;
        if (v[i].y < v[ylo].y) ylo = i;
        if (v[i].y > v[yhi].y) yhi = i;
    }
    Pt d1 = v[xhi] - v[xlo];
    if (d1.is_zero()) d1 = v[yhi] - v[ylo];
    Pt d2 = v[yhi] - v[ylo];
    if (cross(d1, d2) == 0) {
        for (size_t i = 1; i < v.size() && cross(d1, d2) == 0; i++)
            for (size_t j = 0; j < i; j++)
                if (cross(d1, v[i] - v[j]) != 0) { d2 = v[i] - v[j]; break; }
    }
    if (cross(d1, d2) == 0) throw std::invalid_argument("polygon is degenerate");
    return {d1, d2};
}

}  // namespace

std::vector<Pt> directions_with_width_at_most(const ScaledPolygon& p, i64 bound) {
    auto [d1, d2] = spread_vectors(p);
    i128 det = cross(d1, d2);
    if (det < 0) det = -det;
    auto box = [&](i64 a, i64 b) {
        i128 num = i128(bound) * (std::abs(a) + std::abs(b));
        return narrow(num / det);
    };
    i64 bx = box(d1.y, d2.y), by = box(d1.x, d2.x);
    std::vector<Pt> out;
    for (i64 x = 0; x <= bx; x++) {
        for (i64 y = (x == 0 ? 1 : -by); y <= by; y++) {
            Pt w{x, y};
            if (!is_primitive(w)) continue;
            if (width_in_direction(p, w) <= bound) out.push_back(w);
        }
    }
    return out;
}

WidthResult lattice_width(const ScaledPolygon& p) {
    if (p.verts.size() < 3) throw std::invalid_argument("lattice_width: polygon must be two-dimensional");
    // Greedy basis reduction just shrinks the certified scan box.
    Pt u{1, 0}, v{0, 1};
    i64 wu = width_in_direction(p, u), wv = width_in_direction(p, v);
    for (;;) {
        if (wu > wv) { std::swap(u, v); std::swap(wu, wv); }
        auto f = [&](i64 m) { return width_in_direction(p, v + u * m); };
        i64 best_m = 0, best = wv;
        for (i64 dir : {i64(1), i64(-1)}) {
            i64 m = dir, fm;
            while ((fm = f(m)) < best) { best = fm; best_m = m; m += dir; }
        }
        if (best >= wv) break;
        v = v + u * best_m;
        wv = best;
    }
    i64 upper = std::min(wu, wv);

    WidthResult r;
    r.width = upper;
    for (const Pt& w : directions_with_width_at_most(p, upper)) {
        i64 width = width_in_direction(p, w);
        if (width < r.width) {
            r.width = width;
            r.directions.clear();
        }
        if (width == r.width) r.directions.push_back(w);
    }
    std::sort(r.directions.begin(), r.directions.end());
    return r;
}

std::optional<AffineMap> fits_in_strip(const ScaledPolygon& p, i64 n) {
    if (n < 0) return std::nullopt;
    i64 bound = checked_mul(n, p.k);
    for (const Pt& cand : directions_with_width_at_most(p, bound)) {
        for (const Pt& w : {cand, -cand}) {
            i128 mn = dot(p.verts[0], w), mx = mn;
            for (const Pt& v : p.verts) {
                i128 d = dot(v, w);
                mn = std::min(mn, d);
                mx = std::max(mx, d);
            }
            i64 lo = narrow(mn), hi = narrow(mx);
            i64 c = floor_div(lo, p.k);
            if (hi - c * p.k > bound) continue;
            i64 s, t;
            ext_gcd(w.y, w.x, s, t);
            AffineMap m;
            m.a = s; m.b = -t; m.c = w.x; m.d = w.y;
            m.t = Pt{0, -c * p.k};
            return m;
        }
    }
    return std::nullopt;
}

ScaledPolygon apply_map(const ScaledPolygon& p, const AffineMap& m) {
    i64 det = m.det();
    if (det != 1 && det != -1) throw std::invalid_argument("apply_map: matrix must be unimodular");
    std::vector<Pt> verts;
    verts.reserve(p.verts.size());
    for (const Pt& v : p.verts) verts.push_back(m.apply(v));
    if (det == -1) std::reverse(verts.begin(), verts.end());
    return polygon_from_ccw(p.k, std::move(verts));
}

i64 denominator(const ScaledPolygon& p) {
    i64 g = p.k;
    for (const Pt& v : p.verts) {
        g = gcd64(g, v.x);
        g = gcd64(g, v.y);
    }
    return p.k / g;
}

}  // namespace ratpoly
