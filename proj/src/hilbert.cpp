#include "ratpoly/hilbert.hpp"

#include <stdexcept>

namespace ratpoly {

ContinuedFraction continued_fraction(i64 d, i64 a) {
    if (d < 1 || a < 0 || a >= d || gcd64(d, a) != 1)
        throw std::invalid_argument("continued_fraction: need 0 <= a < d coprime");
    ContinuedFraction cf;
    while (a > 0) {
        i64 b = ceil_div(d, a);
        cf.push_back(b);
        i64 next = checked_sub(checked_mul(b, a), d);
        d = a;
        a = next;
    }
    return cf;
}

Rat continued_fraction_value(const ContinuedFraction& cf) {
    if (cf.empty()) throw std::invalid_argument("continued_fraction_value: empty expansion");
    Rat val(cf.back());
    for (size_t i = cf.size() - 1; i-- > 0;) val = Rat(cf[i]) - Rat(1) / val;
    return val;
}

HilbertBasis hilbert_basis(const Pt& ray1, const Pt& ray2) {
    Pt p1 = primitive(ray1), p2 = primitive(ray2);
    if (cross(p1, p2) == 0) throw std::invalid_argument("hilbert_basis: collinear rays");

    // Normalize to cone(e2, d*e1 - a*e2) with 0 <= a < d coprime.
    i64 x, y;
    ext_gcd(p1.x, p1.y, x, y);
    Mat2 u{-p1.y, p1.x, x, y};  // u * p1 = e2
    Pt q = u.apply(p2);
    if (q.x < 0) {
        u = Mat2{-u.a, -u.b, u.c, u.d};
        q.x = -q.x;
    }
    i64 d = q.x;
    i64 shear = -ceil_div(q.y, d);
    u = Mat2{u.a, u.b, narrow(i128(shear) * u.a + u.c), narrow(i128(shear) * u.b + u.d)};
    i64 a = -(q.y + shear * d);

    ContinuedFraction cf = continued_fraction(d, a);
    std::vector<Pt> pts;
    pts.push_back({0, 1});
    pts.push_back({1, 0});
    for (size_t i = 0; i < cf.size(); i++) pts.push_back(pts.back() * cf[i] - pts[pts.size() - 2]);
    if (cf.empty()) pts.resize(2);
    if (pts.back() != Pt{d, -a}) throw arithmetic_error("hilbert_basis: recursion check failed");

    HilbertBasis hb;
    hb.is_vertex.assign(pts.size(), true);
    for (size_t i = 1; i + 1 < pts.size(); i++) hb.is_vertex[i] = cf[i - 1] != 2;

    // Map back through the inverse of the normalizing transform.
    i64 det = u.det();
    Mat2 inv{det * u.d, -det * u.b, -det * u.c, det * u.a};
    hb.points.reserve(pts.size());
    for (const Pt& p : pts) hb.points.push_back(inv.apply(p));
    return hb;
}

ShaveResult shave_vertex(const ScaledPolygon& p, size_t j) {
    const size_t n = p.verts.size();
    if (j >= n) throw std::invalid_argument("shave_vertex: index out of range");
    const Pt vj = p.verts[j];
    const Pt prev = p.verts[(j + n - 1) % n];
    const Pt next = p.verts[(j + 1) % n];

    HilbertBasis hb = hilbert_basis(prev - vj, next - vj);

    ShaveResult result;
    for (size_t i = 1; i + 1 < hb.points.size(); i++) {
        Pt pt = vj + hb.points[i];
        if (mod_floor(pt.x, p.k) == 0 && mod_floor(pt.y, p.k) == 0 &&
            strictly_contains_point(p, pt)) {
            result.boundary_hit = true;
            break;
        }
    }

    std::vector<Pt> candidates;
    candidates.reserve(n + hb.points.size());
    for (size_t i = 0; i < n; i++)
        if (i != j) candidates.push_back(p.verts[i]);
    for (size_t i = 0; i < hb.points.size(); i++)
        if (hb.is_vertex[i]) candidates.push_back(vj + hb.points[i]);

    std::vector<Pt> hull = convex_hull(std::move(candidates));
    if (hull.size() >= 3) result.polygon = ScaledPolygon{p.k, std::move(hull)};
    return result;
}

}  // namespace ratpoly
