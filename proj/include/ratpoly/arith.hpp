#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ratpoly {

// Raised on integer overflow and on failed internal verification.
// All coordinate arithmetic is exact; wrapping is never allowed.
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_error("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("integer overflow in mul");
    return r;
}

inline i64 narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw arithmetic_error("value exceeds 64 bits");
    return static_cast<i64>(v);
}

// Floor/ceil division for signed integers.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

inline i64 mod_floor(i64 a, i64 b) { return a - floor_div(a, b) * b; }

inline i64 gcd64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

// g = a*x + b*y with g = gcd(a,b) >= 0. Deterministic.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_x = 1, xx = 0;
    i64 old_y = 0, yy = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x; y = old_y;
    return old_r;
}

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw arithmetic_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        if (i64 g = gcd64(num, den); g > 1) { num /= g; den /= g; }
    }

    static Rat from128(i128 n, i128 d) {
        if (d == 0) throw arithmetic_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    Rat operator+(const Rat& o) const { return from128(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den); }
    Rat operator-(const Rat& o) const { return from128(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den); }
    Rat operator*(const Rat& o) const { return from128(i128(num) * o.num, i128(den) * o.den); }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw arithmetic_error("rational division by zero");
        return from128(i128(num) * o.den, i128(den) * o.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return i128(num) * o.den < i128(o.num) * den; }
    bool operator<=(const Rat& o) const { return i128(num) * o.den <= i128(o.num) * den; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    bool is_integer() const { return den == 1; }
    i64 floor() const { return floor_div(num, den); }
    i64 ceil() const { return ceil_div(num, den); }
};

inline std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.num);
    if (r.den != 1) s += "/" + std::to_string(r.den);
    return s;
}

}  // namespace ratpoly
