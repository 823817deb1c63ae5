#include "ratpoly/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratpoly {

ScaledPolygon CanonicalForm::polygon() const {
    i128 area2 = 0;
    const size_t n = cols.size();
    for (size_t i = 0; i < n; i++) area2 += cross(cols[i], cols[(i + 1) % n]);
    std::vector<Pt> verts = cols;
    if (area2 < 0) std::reverse(verts.begin(), verts.end());
    return polygon_from_ccw(k, std::move(verts));
}

bool CanonicalForm::operator<(const CanonicalForm& o) const {
    if (k != o.k) return k < o.k;
    if (cols.size() != o.cols.size()) return cols.size() < o.cols.size();
    for (size_t i = 0; i < cols.size(); i++) {
        if (cols[i].x != o.cols[i].x) return cols[i].x < o.cols[i].x;
    }
    for (size_t i = 0; i < cols.size(); i++) {
        if (cols[i].y != o.cols[i].y) return cols[i].y < o.cols[i].y;
    }
    return false;
}

namespace {

// -1 / 0 / 1 on the row-major flattened sequences.
int compare_matrix(const std::vector<Pt>& a, const std::vector<Pt>& b) {
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].x != b[i].x) return a[i].x < b[i].x ? -1 : 1;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].y != b[i].y) return a[i].y < b[i].y ? -1 : 1;
    }
    return 0;
}

void left_multiply(std::vector<Pt>& cols, Mat2& acc, const Mat2& u) {
    for (Pt& p : cols) p = u.apply(p);
    acc = Mat2{narrow(i128(u.a) * acc.a + i128(u.b) * acc.c),
               narrow(i128(u.a) * acc.b + i128(u.b) * acc.d),
               narrow(i128(u.c) * acc.a + i128(u.d) * acc.c),
               narrow(i128(u.c) * acc.b + i128(u.d) * acc.d)};
}

// One vertex order of the cycle: start at `start`, step forward (sign=+1) or
// backward (sign=-1).
std::vector<Pt> vertex_order(const std::vector<Pt>& verts, size_t start, int sign) {
    const size_t n = verts.size();
    std::vector<Pt> cols(n);
    for (size_t j = 0; j < n; j++)
        cols[j] = verts[sign > 0 ? (start + j) % n : (start + n - j % n) % n];
    return cols;
}

}  // namespace

std::vector<Pt> hermite_normal_form(const std::vector<Pt>& cols, Mat2& witness) {
    std::vector<Pt> h = cols;
    witness = Mat2{};
    size_t j1 = 0;
    while (j1 < h.size() && h[j1].is_zero()) j1++;
    if (j1 == h.size()) throw std::invalid_argument("hermite_normal_form: zero matrix");

    i64 s, t;
    i64 g = ext_gcd(h[j1].x, h[j1].y, s, t);
    left_multiply(h, witness, Mat2{s, t, -h[j1].y / g, h[j1].x / g});

    size_t j2 = j1 + 1;
    while (j2 < h.size() && h[j2].y == 0) j2++;
    if (j2 == h.size()) throw std::invalid_argument("hermite_normal_form: rank < 2");
    if (h[j2].y < 0) left_multiply(h, witness, Mat2{1, 0, 0, -1});
    i64 q = floor_div(h[j2].x, h[j2].y);
    if (q != 0) left_multiply(h, witness, Mat2{1, -q, 0, 1});
    return h;
}

std::vector<Pt> hermite_normal_form(const std::vector<Pt>& cols) {
    Mat2 u;
    return hermite_normal_form(cols, u);
}

CanonicalForm unimodular_normal_form(const ScaledPolygon& p) {
    const size_t n = p.verts.size();
    std::vector<Pt> best;
    for (size_t i = 0; i < n; i++) {
        for (int sign : {1, -1}) {
            std::vector<Pt> h = hermite_normal_form(vertex_order(p.verts, i, sign));
            if (best.empty() || compare_matrix(h, best) > 0) best = std::move(h);
        }
    }
    return CanonicalForm{p.k, std::move(best)};
}

namespace {

struct Anchored {
    std::vector<Pt> matrix;                      // max of translated Hermite forms
    std::vector<std::pair<Mat2, Pt>> witnesses;  // (U, anchor vertex) per argmax order
};

// Shared engine of the translated normal forms: every candidate order is
// shifted so its anchor vertex is the origin before taking the Hermite form.
Anchored anchored_normal_form(const ScaledPolygon& p) {
    const size_t n = p.verts.size();
    Anchored out;
    for (size_t i = 0; i < n; i++) {
        for (int sign : {1, -1}) {
            std::vector<Pt> cols = vertex_order(p.verts, i, sign);
            Pt anchor = cols[0];
            for (Pt& c : cols) c = c - anchor;
            Mat2 u;
            std::vector<Pt> h = hermite_normal_form(cols, u);
            int cmp = out.matrix.empty() ? 1 : compare_matrix(h, out.matrix);
            if (cmp > 0) {
                out.matrix = std::move(h);
                out.witnesses.clear();
                out.witnesses.emplace_back(u, anchor);
            } else if (cmp == 0) {
                out.witnesses.emplace_back(u, anchor);
            }
        }
    }
    return out;
}

}  // namespace

CanonicalForm affine_normal_form1(const ScaledPolygon& p) {
    return CanonicalForm{p.k, anchored_normal_form(p).matrix};
}

CanonicalForm affine_normal_form(const ScaledPolygon& p) {
    Anchored a = anchored_normal_form(p);
    if (p.k == 1) return CanonicalForm{1, std::move(a.matrix)};

    // W + (x,y) is k-affine equivalent to the input exactly when (x,y) is
    // congruent mod k to U*anchor for one of the argmax witnesses; take the
    // lexicographically smallest residue.
    Pt best{-1, -1};
    for (const auto& [u, anchor] : a.witnesses) {
        Pt img = u.apply(anchor);
        Pt res{mod_floor(img.x, p.k), mod_floor(img.y, p.k)};
        if (best.x < 0 || res < best) best = res;
    }
    for (Pt& c : a.matrix) c = c + best;
    return CanonicalForm{p.k, std::move(a.matrix)};
}

CanonicalForm special_normal_form(const ScaledPolygon& p) {
    const size_t n = p.verts.size();
    i128 best_det = 0;
    std::vector<size_t> special;
    for (size_t i = 0; i < n; i++) {
        const Pt& prev = p.verts[(i + n - 1) % n];
        const Pt& next = p.verts[(i + 1) % n];
        // twice the triangle area spanned at vertex i; positive for CCW
        i128 d = cross(p.verts[i] - prev, next - p.verts[i]);
        if (d > best_det) {
            best_det = d;
            special.clear();
        }
        if (d == best_det) special.push_back(i);
    }
    std::vector<Pt> best;
    for (size_t i : special) {
        for (int sign : {1, -1}) {
            std::vector<Pt> h = hermite_normal_form(vertex_order(p.verts, i, sign));
            if (best.empty() || compare_matrix(h, best) > 0) best = std::move(h);
        }
    }
    return CanonicalForm{p.k, std::move(best)};
}

AutomorphismGroup automorphism_group(const ScaledPolygon& p) {
    Anchored a = anchored_normal_form(p);
    // Reconstruct the sign of each argmax order from its witness: U maps the
    // CCW orientation to the candidate's, so det U tells the direction.
    AutomorphismGroup g;
    g.order = static_cast<i64>(a.witnesses.size());
    bool has_pos = false, has_neg = false;
    for (const auto& [u, anchor] : a.witnesses) (u.det() == 1 ? has_pos : has_neg) = true;
    g.dihedral = has_pos && has_neg;
    return g;
}

}  // namespace ratpoly
