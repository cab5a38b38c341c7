#pragma once
// polynomial.hpp - Dense univariate polynomials over the rationals:
// arithmetic, Sturm sequences, and real root isolation by sign bisection.

#include "negabeta/common.hpp"
#include "negabeta/interval.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace negabeta {

// Coefficient of x^i at index i.  Normalized form has no trailing zeros; the
// zero polynomial is the empty vector.
using PolyQ = std::vector<Rat>;

inline void poly_normalize(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool poly_is_zero(const PolyQ& p) { return p.empty(); }

inline int poly_degree(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

inline PolyQ poly_const(const Rat& c) {
    PolyQ p;
    if (c != 0) p.push_back(c);
    return p;
}

// c0 + c1 x + ... from a plain initializer-friendly list.
inline PolyQ poly_from_ints(const std::vector<long long>& c) {
    PolyQ p;
    p.reserve(c.size());
    for (long long v : c) p.emplace_back(v);
    poly_normalize(p);
    return p;
}

inline Rat poly_eval(const PolyQ& p, const Rat& x) {
    Rat r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline QInterval poly_eval(const PolyQ& p, const QInterval& x) {
    QInterval r{Rat(0)};
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + Rat(p[i]);
    return r;
}

inline PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_normalize(r);
    return r;
}

inline PolyQ poly_neg(PolyQ a) {
    for (auto& c : a) c = -c;
    return a;
}

inline PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    return poly_add(a, poly_neg(b));
}

inline PolyQ poly_scale(PolyQ a, const Rat& s) {
    if (s == 0) return {};
    for (auto& c : a) c *= s;
    return a;
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_normalize(r);
    return r;
}

inline PolyQ poly_derivative(const PolyQ& p) {
    if (p.size() <= 1) return {};
    PolyQ r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(i));
    poly_normalize(r);
    return r;
}

// Quotient and remainder with deg(rem) < deg(b).
inline std::pair<PolyQ, PolyQ> poly_divrem(PolyQ a, const PolyQ& b) {
    if (poly_is_zero(b)) throw internal_error("polynomial division by zero");
    PolyQ q;
    int db = poly_degree(b);
    if (poly_degree(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (poly_degree(a) >= db) {
        int da = poly_degree(a);
        Rat f = a.back() / lead;
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        poly_normalize(a);
        if (poly_degree(a) == da) a.pop_back();  // guard against sticky leading term
    }
    return {q, a};
}

inline PolyQ poly_rem(const PolyQ& a, const PolyQ& b) {
    return poly_divrem(a, b).second;
}

inline PolyQ poly_monic(PolyQ p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Monic gcd by Euclid's algorithm.
inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!poly_is_zero(b)) {
        PolyQ r = poly_rem(a, b);
        a = std::move(b);
        b = poly_monic(std::move(r));
    }
    return poly_monic(std::move(a));
}

// Extended Euclid restricted to the cofactor of a:
// returns (g, s) with s*a == g (mod m), g monic or zero.
inline std::pair<PolyQ, PolyQ> poly_half_ext_gcd(PolyQ a, PolyQ m) {
    PolyQ s0 = poly_const(Rat(1)), s1;  // cofactors of a
    PolyQ r0 = std::move(a), r1 = std::move(m);
    while (!poly_is_zero(r1)) {
        auto [q, r] = poly_divrem(r0, r1);
        PolyQ s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.empty()) {
        Rat lead = r0.back();
        r0 = poly_monic(std::move(r0));
        s0 = poly_scale(std::move(s0), Rat(1) / lead);
    }
    return {r0, s0};
}

inline PolyQ poly_squarefree(const PolyQ& p) {
    if (poly_degree(p) <= 1) return poly_monic(p);
    PolyQ g = poly_gcd(p, poly_derivative(p));
    if (poly_degree(g) < 1) return poly_monic(p);
    return poly_monic(poly_divrem(p, g).first);
}

// Integer content-free form with positive leading coefficient.
inline std::vector<Int> poly_integer_coeffs(const PolyQ& p) {
    if (p.empty()) return {};
    Int den = 1;
    for (const auto& c : p) den = boost::multiprecision::lcm(den, denominator(c));
    std::vector<Int> z;
    z.reserve(p.size());
    Int content = 0;
    for (const auto& c : p) {
        Int v = numerator(c) * (den / denominator(c));
        z.push_back(v);
        content = boost::multiprecision::gcd(content, v < 0 ? Int(-v) : v);
    }
    if (content == 0) content = 1;
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return z;
}

inline PolyQ poly_from_integer_coeffs(const std::vector<Int>& z) {
    PolyQ p;
    p.reserve(z.size());
    for (const auto& v : z) p.emplace_back(v);
    poly_normalize(p);
    return p;
}

// ---- Sturm sequences ----

inline std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    chain.push_back(p);
    PolyQ d = poly_derivative(p);
    if (!poly_is_zero(d)) chain.push_back(d);
    while (chain.size() >= 2 && !poly_is_zero(chain.back())) {
        PolyQ r = poly_neg(poly_rem(chain[chain.size() - 2], chain.back()));
        poly_normalize(r);
        if (poly_is_zero(r)) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_variations(const std::vector<PolyQ>& chain, const Rat& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Number of distinct real roots in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
inline int sturm_count_open(const std::vector<PolyQ>& chain, const Rat& a,
                            const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

inline int sturm_count_open(const PolyQ& p, const Rat& a, const Rat& b) {
    return sturm_count_open(sturm_chain(p), a, b);
}

// ---- Root isolation ----

struct IsolatedRoot {
    QInterval ivl;  // point interval when the root is an exact rational
    bool exact = false;
};

// Shrinks a sign-change bracket around a simple root to the target width.
// Returns a point interval if an exact rational root is hit.
inline QInterval bisect_root(const PolyQ& p, QInterval ivl, const Rat& width) {
    int slo = sign_of(poly_eval(p, ivl.lo));
    int shi = sign_of(poly_eval(p, ivl.hi));
    if (slo == 0) return QInterval(ivl.lo);
    if (shi == 0) return QInterval(ivl.hi);
    if (slo == shi) throw internal_error("bisect_root: no sign change");
    while (ivl.width() > width) {
        Rat m = ivl.mid();
        int sm = sign_of(poly_eval(p, m));
        if (sm == 0) return QInterval(m);
        if (sm == slo)
            ivl.lo = m;
        else
            ivl.hi = m;
    }
    return ivl;
}

namespace detail {

inline void isolate_rec(const PolyQ& p, const std::vector<PolyQ>& chain,
                        const Rat& a, const Rat& b, const Rat& min_width,
                        std::vector<IsolatedRoot>& out) {
    int n = sturm_count_open(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        IsolatedRoot r;
        r.ivl = bisect_root(p, QInterval(a, b), min_width);
        r.exact = r.ivl.is_point();
        out.push_back(std::move(r));
        return;
    }
    if (b - a <= min_width)
        throw precision_error("root cluster below subdivision floor");
    Rat m = (a + b) / 2;
    if (poly_eval(p, m) == 0) {
        // Exact rational root at the midpoint: deflate and retry both halves.
        IsolatedRoot r;
        r.ivl = QInterval(m);
        r.exact = true;
        out.push_back(std::move(r));
        PolyQ lin{-m, Rat(1)};
        PolyQ q = poly_divrem(p, lin).first;
        while (poly_eval(q, m) == 0) q = poly_divrem(q, lin).first;
        auto sub = sturm_chain(q);
        isolate_rec(q, sub, a, m, min_width, out);
        isolate_rec(q, sub, m, b, min_width, out);
        return;
    }
    isolate_rec(p, chain, a, m, min_width, out);
    isolate_rec(p, chain, m, b, min_width, out);
}

}  // namespace detail

// Isolates the distinct real roots of p inside the closed interval [a, b],
// refined to at most min_width.  The result is sorted by position.
inline std::vector<IsolatedRoot> isolate_roots(const PolyQ& p_in, const Rat& a,
                                               const Rat& b,
                                               const Rat& min_width) {
    PolyQ p = poly_squarefree(p_in);
    if (poly_is_zero(p)) throw invalid_input_error("cannot isolate roots of 0");
    std::vector<IsolatedRoot> out;
    if (poly_degree(p) == 0) return out;
    if (poly_eval(p, a) == 0) {
        out.push_back({QInterval(a), true});
        PolyQ lin{-a, Rat(1)};
        p = poly_divrem(p, lin).first;
    }
    if (poly_eval(p, b) == 0) {
        out.push_back({QInterval(b), true});
        PolyQ lin{-b, Rat(1)};
        p = poly_divrem(p, lin).first;
    }
    if (poly_degree(p) >= 1)
        detail::isolate_rec(p, sturm_chain(p), a, b, min_width, out);
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) {
                  return x.ivl.lo + x.ivl.hi < y.ivl.lo + y.ivl.hi;
              });
    return out;
}

inline std::string poly_to_string(const PolyQ& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        if (!s.empty()) s += (p[i] > 0 ? " + " : " - ");
        else if (p[i] < 0) s += "-";
        Rat mag = p[i] > 0 ? p[i] : Rat(-p[i]);
        bool unit = (mag == 1);
        if (!unit || i == 0) s += mag.str();
        if (i >= 1) {
            if (!unit) s += "*";
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace negabeta
