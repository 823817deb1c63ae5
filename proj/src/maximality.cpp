#include "ratpoly/maximality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ratpoly {

namespace {

// Normals must positively span the plane for the cut-out region to be
// bounded: sorted by angle, every gap must be strictly less than pi.
bool positively_spanning(const std::vector<HalfPlane>& hs) {
    std::vector<Pt> dirs;
    for (const auto& h : hs) dirs.push_back(h.normal);
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    if (dirs.size() < 3) return false;
    auto half = [](const Pt& v) { return v.y < 0 || (v.y == 0 && v.x < 0) ? 1 : 0; };
    std::sort(dirs.begin(), dirs.end(), [&](const Pt& a, const Pt& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return cross(a, b) > 0;
    });
    for (size_t i = 0; i < dirs.size(); i++) {
        const Pt& a = dirs[i];
        const Pt& b = dirs[(i + 1) % dirs.size()];
        i128 c = cross(a, b);
        if (c < 0) return false;
        if (c == 0 && dot(a, b) < 0) return false;  // gap of exactly pi
    }
    return true;
}

int orient_rational(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.num > 0 ? 1 : v.num < 0 ? -1 : 0;
}

std::vector<RationalPoint> hull_rational(std::vector<RationalPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<RationalPoint> hull(2 * n);
    size_t h = 0;
    for (size_t i = 0; i < n; i++) {
        while (h >= 2 && orient_rational(hull[h - 2], hull[h - 1], pts[i]) <= 0) h--;
        hull[h++] = pts[i];
    }
    for (size_t i = n - 1, lower = h + 1; i-- > 0;) {
        while (h >= lower && orient_rational(hull[h - 2], hull[h - 1], pts[i]) <= 0) h--;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

}  // namespace

std::vector<RationalPoint> region_vertices(const std::vector<HalfPlane>& hs) {
    if (!positively_spanning(hs)) throw std::invalid_argument("region_vertices: unbounded region");
    std::vector<RationalPoint> candidates;
    for (size_t i = 0; i < hs.size(); i++) {
        for (size_t j = i + 1; j < hs.size(); j++) {
            i128 det = cross(hs[i].normal, hs[j].normal);
            if (det == 0) continue;
            i128 xn = i128(hs[i].offset) * hs[j].normal.y - i128(hs[j].offset) * hs[i].normal.y;
            i128 yn = i128(hs[i].normal.x) * hs[j].offset - i128(hs[j].normal.x) * hs[i].offset;
            RationalPoint p{Rat::from128(xn, det), Rat::from128(yn, det)};
            bool inside = true;
            for (const auto& h : hs) {
                Rat v = Rat(h.normal.x) * p.x + Rat(h.normal.y) * p.y;
                if (v < Rat(h.offset)) { inside = false; break; }
            }
            if (inside) candidates.push_back(p);
        }
    }
    return hull_rational(std::move(candidates));
}

std::vector<HalfPlane> moved_out(const ScaledPolygon& p) {
    std::vector<HalfPlane> hs = edge_halfplanes(p);
    for (auto& h : hs) h.offset -= 1;
    return hs;
}

std::vector<Pt> region_boundary_lattice_points(const std::vector<HalfPlane>& hs) {
    if (!positively_spanning(hs)) throw std::invalid_argument("boundary points: unbounded region");
    std::set<Pt> out;
    for (size_t e = 0; e < hs.size(); e++) {
        // integer parametrization of the carrier line
        i64 s, t;
        ext_gcd(hs[e].normal.x, hs[e].normal.y, s, t);
        Pt x0{checked_mul(s, hs[e].offset), checked_mul(t, hs[e].offset)};
        Pt dir{-hs[e].normal.y, hs[e].normal.x};
        bool has_lo = false, has_hi = false, empty = false;
        i64 tlo = 0, thi = 0;
        for (size_t f = 0; f < hs.size() && !empty; f++) {
            if (f == e) continue;
            i64 along = narrow(dot(hs[f].normal, dir));
            i64 at0 = narrow(dot(hs[f].normal, x0));
            i64 need = hs[f].offset - at0;
            if (along == 0) {
                if (need > 0) empty = true;
            } else if (along > 0) {
                i64 bound = ceil_div(need, along);
                if (!has_lo || bound > tlo) { tlo = bound; has_lo = true; }
            } else {
                i64 bound = floor_div(need, along);
                if (!has_hi || bound < thi) { thi = bound; has_hi = true; }
            }
        }
        if (empty) continue;
        if (!has_lo || !has_hi) throw std::invalid_argument("boundary points: unbounded edge");
        for (i64 tt = tlo; tt <= thi; tt++) out.insert(x0 + dir * tt);
    }
    return {out.begin(), out.end()};
}

bool is_k_maximal(const ScaledPolygon& p) {
    const size_t n = p.verts.size();
    std::vector<HalfPlane> edges = edge_halfplanes(p);
    std::vector<HalfPlane> moved = edges;
    for (auto& h : moved) h.offset -= 1;

    std::vector<char> edge_has_inner(n), vertex_on_lattice(n);
    for (size_t j = 0; j < n; j++) {
        edge_has_inner[j] = lattice_points_inside_edge(p.verts[j], p.verts[(j + 1) % n], p.k) > 0;
        vertex_on_lattice[j] = mod_floor(p.verts[j].x, p.k) == 0 && mod_floor(p.verts[j].y, p.k) == 0;
    }

    for (const Pt& v : region_boundary_lattice_points(moved)) {
        std::vector<char> violated(n);
        bool ok = false;
        for (size_t j = 0; j < n && !ok; j++) {
            violated[j] = dot(edges[j].normal, v) < edges[j].offset;
            if (violated[j] && edge_has_inner[j]) ok = true;
        }
        for (size_t j = 0; j < n && !ok; j++) {
            // vertex j is flanked by edges j-1 and j
            if (vertex_on_lattice[j] && violated[(j + n - 1) % n] && violated[j]) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

InteriorHull interior_hull(const ScaledPolygon& p) {
    std::vector<Pt> inner;
    i64 ymin = p.verts[0].y, ymax = p.verts[0].y;
    for (const Pt& v : p.verts) { ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y); }
    for (i64 m = floor_div(ymin, p.k) + 1; m * p.k < ymax; m++) {
        auto span = row_span(p, m * p.k);
        if (!span) continue;
        i64 xlo = (span->first / Rat(p.k)).floor() + 1;
        i64 xhi = (span->second / Rat(p.k)).ceil() - 1;
        for (i64 x = xlo; x <= xhi; x++) inner.push_back({x, m});
    }
    InteriorHull ih;
    if (inner.empty()) return ih;
    ih.points = convex_hull(std::move(inner));
    ih.dim = ih.points.size() >= 3 ? 2 : static_cast<int>(ih.points.size()) - 1;
    return ih;
}

bool is_one_maximal_lattice(const ScaledPolygon& p) {
    if (p.k != 1) throw std::invalid_argument("is_one_maximal_lattice: lattice polygons only");
    InteriorHull ih = interior_hull(p);
    if (ih.dim != 2) throw std::invalid_argument("is_one_maximal_lattice: interior hull must be 2D");
    ScaledPolygon q = polygon_from_ccw(1, ih.points);
    std::vector<RationalPoint> rv = region_vertices(moved_out(q));
    if (rv.size() != p.verts.size()) return false;
    std::vector<Pt> got;
    for (const auto& v : rv) {
        if (!v.is_integral()) return false;
        got.push_back({v.x.num, v.y.num});
    }
    std::vector<Pt> want = p.verts;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

namespace {

std::optional<std::pair<Rat, Rat>> row_span_region(const std::vector<RationalPoint>& ccw, i64 y) {
    bool found = false;
    Rat lo, hi, ry(y);
    const size_t n = ccw.size();
    auto take = [&](const Rat& x) {
        if (!found) { lo = hi = x; found = true; return; }
        if (x < lo) lo = x;
        if (hi < x) hi = x;
    };
    for (size_t i = 0; i < n; i++) {
        const RationalPoint& a = ccw[i];
        const RationalPoint& b = ccw[(i + 1) % n];
        if (a.y == ry) take(a.x);
        if (a.y == b.y) continue;
        Rat ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
        if (ry <= ylo || ry >= yhi) continue;
        take(a.x + (ry - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    if (!found) return std::nullopt;
    return std::make_pair(lo, hi);
}

}  // namespace

bool is_internal(const ScaledPolygon& q) {
    if (q.k != 1) throw std::invalid_argument("is_internal: lattice polygons only");
    std::vector<RationalPoint> rv = region_vertices(moved_out(q));
    Rat ymin = rv[0].y, ymax = rv[0].y;
    for (const auto& v : rv) {
        if (v.y < ymin) ymin = v.y;
        if (ymax < v.y) ymax = v.y;
    }
    std::vector<Pt> pts;
    for (i64 y = ymin.ceil(); y <= ymax.floor(); y++) {
        auto span = row_span_region(rv, y);
        if (!span) continue;
        for (i64 x = span->first.ceil(); x <= span->second.floor(); x++) pts.push_back({x, y});
    }
    auto witness = polygon_from_points(1, pts);
    if (!witness) return false;
    InteriorHull ih = interior_hull(*witness);
    if (ih.dim != 2 || ih.points.size() != q.verts.size()) return false;
    ScaledPolygon back = polygon_from_ccw(1, ih.points);
    return back.verts == q.verts;
}

}  // namespace ratpoly
