#include "ratpoly/ehrhart.hpp"

#include <unordered_set>

#include "ratpoly/parallel.hpp"

namespace ratpoly {

namespace {

i64 dilation_count(const ScaledPolygon& p, i64 t) {
    ScaledPolygon dilated{p.k, {}};
    dilated.verts.reserve(p.verts.size());
    for (const Pt& v : p.verts) dilated.verts.push_back(v * t);
    return tally(dilated).total();
}

}  // namespace

QuasiPolynomial ehrhart(const ScaledPolygon& p) {
    const i64 k = p.k;
    QuasiPolynomial q;
    q.area = Rat(normalized_volume(p), 2 * k * k);
    q.period = k;
    q.c1.resize(k);
    q.c2.resize(k);
    for (i64 r = 0; r < k; r++) {
        i64 t1 = r == 0 ? k : r;
        i64 t2 = t1 + k;
        Rat g1 = Rat(dilation_count(p, t1)) - q.area * Rat(t1 * t1);
        Rat g2 = Rat(dilation_count(p, t2)) - q.area * Rat(t2 * t2);
        q.c1[r] = (g2 - g1) / Rat(k);
        q.c2[r] = g1 - q.c1[r] * Rat(t1);
        // mandatory third sample; a mismatch means the counts are not
        // quadratic-with-period-k, i.e. a bug upstream
        i64 t3 = t2 + k;
        if (evaluate(q, t3) != dilation_count(p, t3))
            throw arithmetic_error("ehrhart: verification sample failed");
    }
    for (i64 period = 1; period < k; period++) {
        if (k % period != 0) continue;
        bool ok = true;
        for (i64 r = period; r < k && ok; r++)
            ok = q.c1[r] == q.c1[r % period] && q.c2[r] == q.c2[r % period];
        if (ok) {
            q.c1.resize(period);
            q.c2.resize(period);
            q.period = period;
            break;
        }
    }
    return q;
}

i64 evaluate(const QuasiPolynomial& q, i64 t) {
    if (t < 1) throw std::invalid_argument("evaluate: t >= 1");
    i64 r = t % q.period;
    Rat v = q.area * Rat(t) * Rat(t) + q.c1[r] * Rat(t) + q.c2[r];
    if (!v.is_integer() || v.num < 0) throw arithmetic_error("evaluate: non-integral value");
    return v.num;
}

std::string quasi_key(const QuasiPolynomial& q) {
    std::string s = to_string(q.area);
    s += '|';
    s += std::to_string(q.period);
    for (const Rat& c : q.c1) {
        s += '|';
        s += to_string(c);
    }
    for (const Rat& c : q.c2) {
        s += '|';
        s += to_string(c);
    }
    return s;
}

i64 distinct_ehrhart_count(const std::vector<ScaledPolygon>& polys, i64 min_boundary, int workers) {
    std::vector<std::string> keys(polys.size());
    parallel_for(polys.size(), workers, [&](size_t i, int) {
        if (min_boundary > 0 && tally(polys[i]).boundary < min_boundary) return;
        keys[i] = quasi_key(ehrhart(polys[i]));
    });
    std::unordered_set<std::string> distinct;
    for (auto& s : keys)
        if (!s.empty()) distinct.insert(std::move(s));
    return (i64)distinct.size();
}

i64 ehrhart_count_formula(i64 i) {
    if (i < 2) throw std::invalid_argument("ehrhart_count_formula: i >= 2");
    i128 v = 9 * i128(i) * i * i + 72 * i128(i) * i + 175 * i + 106;
    if (v % 2 != 0) throw arithmetic_error("ehrhart_count_formula: unexpected non-integral value");
    return narrow(v / 2);
}

}  // namespace ratpoly
