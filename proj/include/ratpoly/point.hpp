#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "ratpoly/arith.hpp"

namespace ratpoly {

struct Pt {
    i64 x = 0;
    i64 y = 0;

    Pt() = default;
    Pt(i64 xi, i64 yi) : x(xi), y(yi) {}

    Pt operator+(const Pt& o) const { return {checked_add(x, o.x), checked_add(y, o.y)}; }
    Pt operator-(const Pt& o) const { return {checked_sub(x, o.x), checked_sub(y, o.y)}; }
    Pt operator-() const { return {-x, -y}; }
    Pt operator*(i64 s) const { return {checked_mul(x, s), checked_mul(y, s)}; }

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    // Lexicographic by (x, y); the tie-break order used everywhere.
    bool operator<(const Pt& o) const { return x != o.x ? x < o.x : y < o.y; }

    bool is_zero() const { return x == 0 && y == 0; }
};

inline i128 cross(const Pt& a, const Pt& b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
inline i128 dot(const Pt& a, const Pt& b) { return i128(a.x) * b.x + i128(a.y) * b.y; }

// Orientation of the turn a -> b -> c: >0 left (counterclockwise), <0 right, 0 collinear.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    i128 v = cross(b - a, c - a);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

// v / gcd(v.x, v.y); the primitive vector in the same direction.
inline Pt primitive(const Pt& v) {
    if (v.is_zero()) throw arithmetic_error("primitive() of zero vector");
    i64 g = gcd64(v.x, v.y);
    return {v.x / g, v.y / g};
}

inline bool is_primitive(const Pt& v) { return !v.is_zero() && gcd64(v.x, v.y) == 1; }

// Sign-canonical representative of {v, -v}: first nonzero coordinate positive.
inline Pt canonical_direction(const Pt& v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) return -v;
    return v;
}

// 90-degree clockwise rotation; for a directed line this is the normal
// pointing into the right half-plane.
inline Pt rotate_cw(const Pt& v) { return {v.y, -v.x}; }

inline std::ostream& operator<<(std::ostream& os, const Pt& p) {
    return os << "(" << p.x << "," << p.y << ")";
}

// 2x2 integer matrix, rows (a b) and (c d). Acts on column vectors.
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;
    Pt apply(const Pt& p) const {
        return {narrow(i128(a) * p.x + i128(b) * p.y), narrow(i128(c) * p.x + i128(d) * p.y)};
    }
    i64 det() const { return narrow(i128(a) * d - i128(b) * c); }
};

struct PtHash {
    size_t operator()(const Pt& p) const {
        size_t h = std::hash<i64>()(p.x);
        return h ^ (std::hash<i64>()(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

}  // namespace ratpoly
