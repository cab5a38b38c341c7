#pragma once
// solver.hpp - Recovery of the unique base beta > 1 from a candidate
// left-endpoint expansion, the nested parameter intervals J_n, defining
// polynomials, and the order comparator on candidate sequences.

#include "negabeta/admissibility.hpp"
#include "negabeta/beta_value.hpp"
#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"
#include "negabeta/dynamics.hpp"
#include "negabeta/morphism.hpp"
#include "negabeta/polynomial.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace negabeta {

struct SolveOptions {
    Rat tol = pow2(-40);
    std::size_t max_depth = 4096;
    std::size_t u_depth = 256;
    unsigned precision_bits = 256;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class SolveMethod { BISECT_ORDER, JN_REFINE, POLY_ROOT };

struct SolveResult {
    BetaValue beta;
    std::size_t depth_used = 0;
    SolveMethod method = SolveMethod::BISECT_ORDER;
};

// Integer-normalized polynomial vanishing at the base determined by a.
inline PolyQ defining_polynomial(const EvPeriodicSeq& a) {
    return series_left_endpoint_poly(a);
}

namespace detail {

inline void check_deadline(const SolveOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw deadline_error("solve deadline exceeded");
}

enum class Side { BELOW, ABOVE, EXACT_HIT, UNDECIDED };

// Classifies a rational base x against the candidate a by comparing genuine
// expansion digits in the alternating order.  Exact when the orbit of the
// left endpoint closes; otherwise decided within `depth` digits.
inline Side classify_against_seq(const Rat& x, const EvPeriodicSeq& a,
                                 std::size_t depth) {
    BetaValue bx = BetaValue::from_rational(x);
    Itinerary it = left_endpoint_itinerary(bx, depth);
    if (it.closed) {
        Ordering o = alt_cmp(*it.closed, a);
        if (o == Ordering::EQUAL) return Side::EXACT_HIT;
        return o == Ordering::LESS ? Side::BELOW : Side::ABOVE;
    }
    for (std::size_t k = 1; k <= it.digits.size(); ++k) {
        Ordering o = alt_digit_cmp(it.digits[k - 1], a.digit(k), k);
        if (o == Ordering::LESS) return Side::BELOW;
        if (o == Ordering::GREATER) return Side::ABOVE;
    }
    return Side::UNDECIDED;
}

// Same with adaptive deepening up to max_depth.
inline Side classify_adaptive(const Rat& x, const EvPeriodicSeq& a,
                              std::size_t start_depth, const SolveOptions& opts,
                              std::size_t& depth_used) {
    std::size_t d = start_depth;
    while (true) {
        Side s = classify_against_seq(x, a, d);
        depth_used = std::max(depth_used, d);
        if (s != Side::UNDECIDED) return s;
        if (d >= opts.max_depth) return Side::UNDECIDED;
        d = std::min(opts.max_depth, d * 2);
    }
}

}  // namespace detail

// Finds the unique beta > 1 whose series identity the candidate satisfies,
// by bisection on the order of genuine expansions, then certifies and
// refines the enclosure against the defining polynomial.
inline SolveResult solve_beta(const EvPeriodicSeq& a, const SolveOptions& opts = {}) {
    if (check_shift_condition(a).status != CheckStatus::PASS)
        throw invalid_input_error("candidate violates the shift condition");
    PartialOrdering vs_u = cmp_with_u(a, opts.u_depth);
    if (vs_u == PartialOrdering::LESS)
        throw invalid_input_error("candidate does not dominate the boundary word");
    if (vs_u == PartialOrdering::UNDECIDED)
        throw precision_error("comparison with the boundary word undecided; raise u_depth");

    Digit a1 = a.digit(1);
    Rat lo = std::max(Rat(1) + opts.tol, Rat(a1));
    Rat hi = Rat(a1) + 1;
    std::size_t depth_used = 0;
    PolyQ p_sf = poly_squarefree(defining_polynomial(a));
    if (poly_degree(p_sf) < 1)
        throw internal_error("degenerate defining polynomial");

    auto finish_exact = [&](const Rat& root) {
        SolveResult r;
        r.beta = BetaValue::from_rational(root);
        r.beta.min_poly = p_sf;
        r.depth_used = depth_used;
        r.method = SolveMethod::BISECT_ORDER;
        return r;
    };

    detail::Side s_lo =
        detail::classify_adaptive(lo, a, 64, opts, depth_used);
    if (s_lo == detail::Side::EXACT_HIT) return finish_exact(lo);
    if (s_lo == detail::Side::ABOVE)
        throw invalid_input_error("bracket violation at the lower endpoint");
    if (s_lo == detail::Side::UNDECIDED)
        throw precision_error(
            "expansion comparison undecided at max depth; for periodic inputs "
            "the defining polynomial route may still apply");
    detail::Side s_hi =
        detail::classify_adaptive(hi, a, 64, opts, depth_used);
    if (s_hi == detail::Side::EXACT_HIT) return finish_exact(hi);
    if (s_hi == detail::Side::BELOW)
        throw invalid_input_error("bracket violation at the upper endpoint");

    auto halve = [&]() {
        detail::check_deadline(opts);
        Rat mid = (lo + hi) / 2;
        detail::Side s = detail::classify_adaptive(mid, a, 64, opts, depth_used);
        if (s == detail::Side::BELOW)
            lo = mid;
        else if (s == detail::Side::ABOVE)
            hi = mid;
        else if (s == detail::Side::EXACT_HIT)
            return std::optional<Rat>(mid);
        else
            throw precision_error(
                "expansion comparison undecided at max depth; for periodic "
                "inputs the defining polynomial route may still apply");
        return std::optional<Rat>();
    };

    while (hi - lo > opts.tol) {
        auto exact = halve();
        if (exact) return finish_exact(*exact);
    }

    // Certification: the base lies in the closed bracket and is a root of
    // the defining polynomial.  Shrink until that root is the only one there
    // (it may sit exactly on an endpoint, e.g. for block-composed inputs
    // whose base is rational), then adopt its isolation.
    Rat target = std::min(opts.tol, pow2(1 - static_cast<long>(opts.precision_bits)));
    std::vector<IsolatedRoot> roots;
    for (int guard = 0;; ++guard) {
        roots = isolate_roots(p_sf, lo, hi, target);
        if (roots.size() == 1) break;
        if (roots.empty())
            throw internal_error("defining polynomial has no root in the bracket");
        if (guard > 512)
            throw internal_error("failed to isolate the base against its defining polynomial");
        auto exact = halve();
        if (exact) return finish_exact(*exact);
    }
    SolveResult r;
    if (roots[0].exact) {
        r.beta = BetaValue::from_rational(roots[0].ivl.lo);
    } else {
        r.beta.enclosure = roots[0].ivl;
    }
    r.beta.min_poly = p_sf;
    r.depth_used = depth_used;
    r.method = SolveMethod::POLY_ROOT;
    return r;
}

namespace detail {

// Finite-window analogue: compares the first |w| genuine digits at base x
// with the word w.
inline Side classify_against_word(const Rat& x, const DigitWord& w) {
    BetaValue bx = BetaValue::from_rational(x);
    DigitWord d = left_endpoint_expansion(bx, w.size());
    PartialOrdering o = alt_cmp_prefix(d, w);
    if (o == PartialOrdering::LESS) return Side::BELOW;
    if (o == PartialOrdering::GREATER) return Side::ABOVE;
    return Side::UNDECIDED;
}

}  // namespace detail

// Encloses every base whose expansion starts with the digits of w.  The two
// one-sided bisections bracket the compatible parameter window, so the hull
// contains the base that generated a genuine prefix.
inline SolveResult solve_prefix(const DigitWord& w, const SolveOptions& opts = {}) {
    if (w.empty()) throw invalid_input_error("empty digit prefix");
    for (std::size_t k = 2; k <= w.size(); ++k) {
        DigitWord window(w.begin() + static_cast<std::ptrdiff_t>(k - 1), w.end());
        if (alt_cmp_prefix(window, w) == PartialOrdering::GREATER)
            throw invalid_input_error("prefix violates the finite shift condition");
    }
    if (cmp_word_with_u(w) == PartialOrdering::LESS)
        throw invalid_input_error("prefix does not dominate the boundary word");

    Digit a1 = w[0];
    Rat lo0 = std::max(Rat(1) + opts.tol, Rat(a1));
    Rat hi0 = Rat(a1) + 1;

    // Left edge: infimum of bases whose expansion is not alt-below w.
    Rat llo = lo0, lhi = hi0;
    if (detail::classify_against_word(lo0, w) != detail::Side::BELOW) {
        lhi = lo0;
    } else {
        while (lhi - llo > opts.tol) {
            detail::check_deadline(opts);
            Rat mid = (llo + lhi) / 2;
            if (detail::classify_against_word(mid, w) == detail::Side::BELOW)
                llo = mid;
            else
                lhi = mid;
        }
    }
    // Right edge: supremum of bases whose expansion is not alt-above w.
    Rat rlo = lo0, rhi = hi0;
    if (detail::classify_against_word(hi0, w) != detail::Side::ABOVE) {
        rlo = hi0;
    } else {
        while (rhi - rlo > opts.tol) {
            detail::check_deadline(opts);
            Rat mid = (rlo + rhi) / 2;
            if (detail::classify_against_word(mid, w) == detail::Side::ABOVE)
                rhi = mid;
            else
                rlo = mid;
        }
    }
    Rat enc_lo = llo;
    Rat enc_hi = rhi;
    if (enc_lo > enc_hi)
        throw internal_error("prefix bisection produced a crossed bracket");
    SolveResult r;
    r.beta = BetaValue::from_interval(enc_lo, enc_hi);
    r.depth_used = w.size();
    r.method = SolveMethod::BISECT_ORDER;
    return r;
}

// ---- Nested parameter intervals ----

struct JnInterval {
    std::size_t n = 0;
    QInterval interval;       // outer rational enclosure of J_n
    bool compact = false;     // inf > 1; when false the left end is open at 1
};

// Refines J_1 .. J_n for a digit prefix: J_j is the set of bases x > 1 with
// P_i(x) in [0,1] for all i <= j.  Each level must remain a single interval;
// anything else reports an invariant violation.
inline std::vector<JnInterval> jn_refine(const DigitWord& a_prefix, std::size_t n,
                                         unsigned precision_bits = 256) {
    if (a_prefix.empty() || n < 1 || n > a_prefix.size())
        throw invalid_input_error("need 1 <= n <= |prefix|");
    for (std::size_t k = 2; k <= a_prefix.size(); ++k) {
        DigitWord window(a_prefix.begin() + static_cast<std::ptrdiff_t>(k - 1),
                         a_prefix.end());
        if (alt_cmp_prefix(window, a_prefix) == PartialOrdering::GREATER)
            throw invalid_input_error("prefix violates the finite shift condition");
    }
    if (cmp_word_with_u(a_prefix) == PartialOrdering::LESS)
        throw invalid_input_error("prefix does not dominate the boundary word");

    std::vector<PolyQ> ps = pn_polynomials(a_prefix);
    Digit a1 = a_prefix[0];
    Rat lo = (a1 >= 2) ? Rat(a1) : Rat(1);
    Rat hi = Rat(a1) + 1;
    bool lo_open = (a1 == 1);

    auto is_u_prefix = [&](std::size_t j) {
        DigitWord up = u_prefix(j);
        for (std::size_t i = 0; i < j; ++i)
            if (a_prefix[i] != up[i]) return false;
        return true;
    };

    std::vector<JnInterval> out;
    out.push_back({1, QInterval(lo, hi), !is_u_prefix(1)});

    Rat min_width = pow2(-static_cast<long>(precision_bits));
    for (std::size_t j = 2; j <= n; ++j) {
        const PolyQ& pj = ps[j];
        PolyQ pj1 = poly_sub(pj, poly_const(Rat(1)));
        std::vector<IsolatedRoot> roots = isolate_roots(pj, lo, hi, min_width);
        for (auto& r : isolate_roots(pj1, lo, hi, min_width)) roots.push_back(r);
        std::sort(roots.begin(), roots.end(),
                  [](const IsolatedRoot& x, const IsolatedRoot& y) {
                      return x.ivl.lo + x.ivl.hi < y.ivl.lo + y.ivl.hi;
                  });
        // Merge overlapping enclosures into single connectors.
        std::vector<QInterval> marks;
        for (const auto& r : roots) {
            if (!marks.empty() && r.ivl.lo <= marks.back().hi)
                marks.back().hi = std::max(marks.back().hi, r.ivl.hi);
            else
                marks.push_back(r.ivl);
        }
        // Membership of the open segments between consecutive marks.
        auto member = [&](const Rat& x) {
            for (std::size_t i = 1; i <= j; ++i) {
                Rat v = poly_eval(ps[i], x);
                if (v < 0 || v > 1) return false;
            }
            return true;
        };
        struct Segment {
            Rat a, b;
            bool nonempty;
            bool in;
        };
        std::vector<Segment> segs;
        Rat cursor = lo;
        for (std::size_t i = 0; i <= marks.size(); ++i) {
            Rat seg_a = cursor;
            Rat seg_b = (i < marks.size()) ? marks[i].lo : hi;
            Segment s{seg_a, seg_b, seg_a < seg_b, false};
            if (s.nonempty) s.in = member((seg_a + seg_b) / 2);
            segs.push_back(s);
            if (i < marks.size()) cursor = marks[i].hi;
        }
        // Runs of member segments; empty segments are transparent connectors.
        int first_run_seg = -1, last_run_seg = -1;
        int runs = 0;
        bool in_run = false;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (!segs[i].nonempty) continue;
            if (segs[i].in) {
                if (!in_run) {
                    ++runs;
                    if (runs == 1) first_run_seg = static_cast<int>(i);
                }
                in_run = true;
                if (runs == 1) last_run_seg = static_cast<int>(i);
            } else {
                in_run = false;
            }
        }
        if (runs == 0)
            throw invalid_input_error(
                "J_" + std::to_string(j) + " is empty; the prefix admits no base");
        if (runs > 1)
            throw invalid_input_error(
                "J_" + std::to_string(j) +
                " fell apart into several intervals; prefix invalid or precision exhausted");
        // New outer bounds.
        if (first_run_seg > 0) {
            lo = marks[static_cast<std::size_t>(first_run_seg) - 1].lo;
            lo_open = false;
        }
        if (last_run_seg >= 0 &&
            static_cast<std::size_t>(last_run_seg) < marks.size()) {
            hi = marks[static_cast<std::size_t>(last_run_seg)].hi;
        }
        out.push_back({j, QInterval(lo, hi), !is_u_prefix(j)});
    }
    return out;
}

struct OrderCompareResult {
    Ordering order = Ordering::EQUAL;
    std::string interpretation;
};

// Alternating-order comparison annotated with the base-order conclusion.
inline OrderCompareResult order_compare(const EvPeriodicSeq& a,
                                        const EvPeriodicSeq& a2) {
    OrderCompareResult r;
    r.order = alt_cmp(a, a2);
    switch (r.order) {
        case Ordering::LESS:
            r.interpretation = "a <_alt b => beta_a < beta_b";
            break;
        case Ordering::GREATER:
            r.interpretation = "a >_alt b => beta_a > beta_b";
            break;
        case Ordering::EQUAL:
            r.interpretation = "a = b => beta_a = beta_b";
            break;
    }
    return r;
}

}  // namespace negabeta
