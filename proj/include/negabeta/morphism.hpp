#pragma once
// morphism.hpp - The substitution 1 -> 100, 0 -> 1, its fixed point (the
// boundary word u), comparison against u, and the family of small bases
// gamma_k with gamma_k^(g_k+1) = gamma_k + 1, g_k = floor(2^(k+1)/3).

#include "negabeta/beta_value.hpp"
#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"

#include <mutex>
#include <vector>

namespace negabeta {

inline constexpr std::size_t kMorphismSizeCap = std::size_t{1} << 24;

// phi^n(w) for w over {0,1}.
inline DigitWord phi_apply(const DigitWord& w, unsigned n) {
    for (Digit d : w)
        if (d != 0 && d != 1)
            throw invalid_input_error("morphism words use the alphabet {0,1}");
    DigitWord cur = w;
    for (unsigned step = 0; step < n; ++step) {
        std::size_t ones = 0;
        for (Digit d : cur) ones += (d == 1);
        std::size_t next_len = cur.size() + 2 * ones;
        if (next_len > kMorphismSizeCap)
            throw resource_error("morphism image exceeds the size cap");
        DigitWord next;
        next.reserve(next_len);
        for (Digit d : cur) {
            if (d == 1) {
                next.push_back(1);
                next.push_back(0);
                next.push_back(0);
            } else {
                next.push_back(1);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

// Shared prefix cache of u.  Since phi^n(1) is a prefix of phi^(n+1)(1), the
// cache only ever grows; guarded for concurrent readers.
inline const DigitWord& u_cache(std::size_t need) {
    static DigitWord cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (cache.empty()) cache = {1};
    while (cache.size() < need) {
        if (cache.size() > kMorphismSizeCap)
            throw resource_error("u prefix exceeds the size cap");
        cache = phi_apply(cache, 1);
    }
    return cache;
}

}  // namespace detail

// First n digits of u = 1 0 0 1 1 1 0 0 1 ...
inline DigitWord u_prefix(std::size_t n) {
    if (n == 0) return {};
    const DigitWord& c = detail::u_cache(n);
    return DigitWord(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
}

inline Digit u_digit(std::size_t k) { return detail::u_cache(k)[k - 1]; }

// Alternating-order position of s relative to u, decided within max_depth
// digits.  u is aperiodic, so equality never holds for an eventually
// periodic s, but detection is depth-bounded.
inline PartialOrdering cmp_with_u(const EvPeriodicSeq& s, std::size_t max_depth) {
    if (max_depth == 0) throw invalid_input_error("max_depth must be positive");
    for (std::size_t k = 1; k <= max_depth; ++k) {
        Ordering o = alt_digit_cmp(s.digit(k), u_digit(k), k);
        if (o == Ordering::LESS) return PartialOrdering::LESS;
        if (o == Ordering::GREATER) return PartialOrdering::GREATER;
    }
    return PartialOrdering::UNDECIDED;
}

inline PartialOrdering cmp_word_with_u(const DigitWord& w) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        Ordering o = alt_digit_cmp(w[k - 1], u_digit(k), k);
        if (o == Ordering::LESS) return PartialOrdering::LESS;
        if (o == Ordering::GREATER) return PartialOrdering::GREATER;
    }
    return PartialOrdering::UNDECIDED;
}

struct GammaBase {
    unsigned k = 0;
    Int g;            // g_k = floor(2^(k+1)/3)
    BetaValue value;  // unique root > 1 of x^(g_k+1) - x - 1
};

inline GammaBase gamma_base(unsigned k, unsigned precision_bits = 256) {
    if (k < 1) throw invalid_input_error("gamma index starts at 1");
    if (precision_bits < 8) throw invalid_input_error("precision_bits must be >= 8");
    if (k > 12) throw resource_error("gamma index too large (supported: k <= 12)");
    Int g = (Int(1) << (k + 1)) / 3;
    unsigned long deg = g.convert_to<unsigned long>() + 1;
    PolyQ p(deg + 1, Rat(0));
    p[0] = -1;
    p[1] = -1;
    p[deg] = 1;
    poly_normalize(p);
    // x^(g+1) - x - 1 is -1 at x=1 and strictly increasing on (1, inf), so it
    // has exactly one root there, inside (1, 2).  Bisect with fast powers
    // rather than generic Horner; the degree grows like 2^k.
    auto eval = [&](const Rat& x) { return pow_rat(x, deg) - x - 1; };
    QInterval enc(Rat(1), Rat(2));
    Rat target = pow2(1 - static_cast<long>(precision_bits));
    while (enc.width() > target || enc.lo <= 1) {
        Rat m = enc.mid();
        int s = sign_of(eval(m));
        if (s == 0) {
            enc = QInterval(m);
            break;
        }
        if (s < 0)
            enc.lo = m;
        else
            enc.hi = m;
    }
    GammaBase out;
    out.k = k;
    out.g = g;
    if (enc.is_point()) {
        out.value = BetaValue::from_rational(enc.lo);
    } else {
        out.value.enclosure = enc;
    }
    out.value.min_poly = p;
    return out;
}

}  // namespace negabeta
