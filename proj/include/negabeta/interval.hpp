#pragma once
// interval.hpp - Closed rational intervals with outward dyadic rounding.

#include "negabeta/common.hpp"

#include <algorithm>
#include <optional>

namespace negabeta {

struct QInterval {
    Rat lo;
    Rat hi;

    QInterval() : lo(0), hi(0) {}
    explicit QInterval(const Rat& v) : lo(v), hi(v) {}
    QInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
        if (lo > hi) throw internal_error("interval endpoints out of order");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool straddles_zero() const { return lo <= 0 && 0 <= hi; }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }
inline QInterval operator-(const QInterval& a, const QInterval& b) {
    return a + (-b);
}
inline QInterval operator*(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}
inline QInterval operator+(const QInterval& a, const Rat& b) {
    return {a.lo + b, a.hi + b};
}
inline QInterval operator-(const QInterval& a, const Rat& b) {
    return {a.lo - b, a.hi - b};
}
inline QInterval operator*(const QInterval& a, const Rat& b) {
    if (b >= 0) return {a.lo * b, a.hi * b};
    return {a.hi * b, a.lo * b};
}

// Division; the divisor must not straddle zero.
inline QInterval div(const QInterval& a, const QInterval& b) {
    if (b.straddles_zero())
        throw precision_error("interval division by an interval containing 0");
    QInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
    return a * inv;
}

inline QInterval div(const QInterval& a, const Rat& b) {
    if (b == 0) throw invalid_input_error("division by zero");
    return a * (Rat(1) / b);
}

// Shrinks the representation of the endpoints to ~bits fractional bits,
// rounding outward.
inline QInterval round_out(const QInterval& a, unsigned bits) {
    Int scale = Int(1) << bits;
    Rat s(scale);
    Rat lo = Rat(floor_rat(a.lo * s)) / s;
    Rat hi = Rat(ceil_rat(a.hi * s)) / s;
    return {lo, hi};
}

// The floor of every point of the interval, when that is a single integer.
inline std::optional<Int> floor_point(const QInterval& a) {
    Int flo = floor_rat(a.lo);
    Int fhi = floor_rat(a.hi);
    if (flo == fhi) return flo;
    return std::nullopt;
}

inline QInterval hull(const QInterval& a, const QInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace negabeta
