#pragma once
// admissibility.hpp - Admissibility of digit sequences relative to a base
// (via the expansion of the left endpoint) and the per-condition checks used
// by the candidate validator.

#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"
#include "negabeta/morphism.hpp"

#include <optional>
#include <vector>

namespace negabeta {

enum class CheckStatus { PASS, FAIL, INDETERMINATE };

struct CheckResult {
    CheckStatus status = CheckStatus::PASS;
    std::optional<std::size_t> witness_k;
};

struct OddPeriodInfo {
    bool is_odd_periodic = false;
    std::optional<std::size_t> ell;  // minimal l with a = (a_1 ... a_(2l+1))^inf
};

// Detects pure periodicity with odd period length.  In canonical form every
// period length is a multiple of the primitive one, so an odd period exists
// exactly when the primitive period is odd.
inline OddPeriodInfo min_odd_period(const EvPeriodicSeq& a) {
    OddPeriodInfo info;
    if (!a.purely_periodic()) return info;
    std::size_t q = a.period_length();
    if (q % 2 == 0) return info;
    info.is_odd_periodic = true;
    info.ell = (q - 1) / 2;
    return info;
}

// The strict lower bound sequence for admissibility against a: 0 a_1 a_2 ...
// in general, replaced by (0 a_1 ... a_2l (a_(2l+1)-1))^inf when a is purely
// periodic with minimal odd period 2l+1.
inline EvPeriodicSeq admissibility_lower_bound(const EvPeriodicSeq& a) {
    OddPeriodInfo info = min_odd_period(a);
    if (info.is_odd_periodic) {
        std::size_t n = 2 * *info.ell + 1;
        DigitWord per;
        per.reserve(n + 1);
        per.push_back(0);
        for (std::size_t i = 1; i <= n; ++i) per.push_back(a.digit(i));
        if (per.back() == 0)
            throw invalid_input_error(
                "cannot decrement digit 0 building the odd-period lower bound");
        --per.back();
        return EvPeriodicSeq({}, std::move(per));
    }
    DigitWord pre;
    pre.reserve(a.preperiod_length() + 1);
    pre.push_back(0);
    for (Digit d : a.preperiod()) pre.push_back(d);
    return EvPeriodicSeq(std::move(pre), a.period());
}

struct AdmissibleResult {
    bool admissible = true;
    std::optional<std::size_t> witness_k;  // least failing window position
};

// Exact admissibility of b relative to the left-endpoint expansion a:
// every window b_k b_(k+1) ... must sit in (lower, a] for the alternating
// order.  Both sequences being eventually periodic makes the check finite.
inline AdmissibleResult is_admissible(const EvPeriodicSeq& b,
                                      const EvPeriodicSeq& a) {
    EvPeriodicSeq lower = admissibility_lower_bound(a);
    std::optional<std::size_t> worst;
    auto check_window = [&](std::size_t k, const EvPeriodicSeq& t) {
        bool bad = alt_cmp(t, a) == Ordering::GREATER ||
                   alt_cmp(t, lower) != Ordering::GREATER;
        if (bad && (!worst || k < *worst)) worst = k;
    };
    check_window(1, b);
    for (const auto& e : distinct_tails(b)) check_window(e.k + 1, e.tail);
    if (worst) return {false, worst};
    return {true, std::nullopt};
}

namespace detail {

// Finite window against an infinite sequence, decided within the window.
inline PartialOrdering cmp_word_vs_seq(const DigitWord& w, const EvPeriodicSeq& s) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        Ordering o = alt_digit_cmp(w[k - 1], s.digit(k), k);
        if (o == Ordering::LESS) return PartialOrdering::LESS;
        if (o == Ordering::GREATER) return PartialOrdering::GREATER;
    }
    return PartialOrdering::UNDECIDED;
}

}  // namespace detail

// Finite-depth admissibility of the word w: no window may provably violate
// the bounds within the available digits.  Windows that merely run out of
// digits are compatible, i.e. w extends to an admissible sequence.  When the
// full expansion a is known it is used for both bounds; otherwise a_prefix
// stands in and the lower bound is 0 a_prefix.
inline AdmissibleResult is_admissible_prefix(
    const DigitWord& w, const DigitWord& a_prefix,
    const std::optional<EvPeriodicSeq>& a = std::nullopt) {
    std::optional<EvPeriodicSeq> lower;
    if (a) lower = admissibility_lower_bound(*a);
    DigitWord lower_word;
    lower_word.reserve(a_prefix.size() + 1);
    lower_word.push_back(0);
    for (Digit d : a_prefix) lower_word.push_back(d);
    std::optional<std::size_t> worst;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        DigitWord window(w.begin() + static_cast<std::ptrdiff_t>(k - 1), w.end());
        PartialOrdering up = a ? detail::cmp_word_vs_seq(window, *a)
                               : alt_cmp_prefix(window, a_prefix);
        PartialOrdering dn = lower ? detail::cmp_word_vs_seq(window, *lower)
                                   : alt_cmp_prefix(window, lower_word);
        if (up == PartialOrdering::GREATER || dn == PartialOrdering::LESS) {
            if (!worst || k < *worst) worst = k;
        }
    }
    if (worst) return {false, worst};
    return {true, std::nullopt};
}

// Every shifted tail a_k a_(k+1) ... (k >= 2) must compare <= a.
inline CheckResult check_shift_condition(const EvPeriodicSeq& a) {
    std::optional<std::size_t> worst;
    for (const auto& e : distinct_tails(a)) {
        if (alt_cmp(e.tail, a) == Ordering::GREATER) {
            std::size_t k = e.k + 1;
            if (!worst || k < *worst) worst = k;
        }
    }
    if (worst) return {CheckStatus::FAIL, worst};
    return {CheckStatus::PASS, std::nullopt};
}

namespace detail {

struct BlockPair {
    DigitWord A;
    DigitWord B;
    DigitWord gate;  // word whose periodization must beat u to activate k
};

// Shared scan for the two block-exclusion conditions.  For each prefix
// length k up to |preperiod| + 2|period|, activates when the gate word's
// periodization beats u, then block-parses a against {A, B}.
template <typename MakeBlocks>
inline CheckResult block_exclusion_scan(const EvPeriodicSeq& a,
                                        std::size_t u_depth,
                                        bool pure_a_fails,
                                        MakeBlocks&& make_blocks) {
    std::size_t kmax = a.preperiod_length() + 2 * a.period_length();
    std::optional<std::size_t> fail_k;
    std::optional<std::size_t> undecided_k;
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::optional<BlockPair> blocks = make_blocks(a.prefix(k));
        if (!blocks) continue;  // condition vacuous at this k
        PartialOrdering vs_u =
            cmp_with_u(EvPeriodicSeq({}, blocks->gate), u_depth);
        if (vs_u == PartialOrdering::LESS) continue;
        if (vs_u == PartialOrdering::UNDECIDED) {
            if (!undecided_k) undecided_k = k;
            continue;
        }
        BlockParseResult res = block_parse(a, blocks->A, blocks->B);
        bool fails = (res == BlockParseResult::IN_OMEGA_LANGUAGE) ||
                     (pure_a_fails && res == BlockParseResult::ONLY_PURE_A);
        if (fails && (!fail_k || k < *fail_k)) fail_k = k;
    }
    if (fail_k) return {CheckStatus::FAIL, fail_k};
    if (undecided_k) return {CheckStatus::INDETERMINATE, undecided_k};
    return {CheckStatus::PASS, std::nullopt};
}

}  // namespace detail

// Exclusion of nontrivial {a_1..a_k, a_1..a_(k-1)(a_k - 1) 0} decompositions,
// active for k with (a_1..a_k)^inf beating u.
inline CheckResult check_ak1(const EvPeriodicSeq& a, std::size_t u_depth = 256) {
    return detail::block_exclusion_scan(
        a, u_depth, /*pure_a_fails=*/false,
        [](DigitWord prefix) -> std::optional<detail::BlockPair> {
            if (prefix.back() < 1) return std::nullopt;
            detail::BlockPair bp;
            bp.B = prefix;
            --bp.B.back();
            bp.B.push_back(0);
            bp.gate = prefix;
            bp.A = std::move(prefix);
            return bp;
        });
}

// Exclusion of every {a_1..a_k 0, a_1..a_(k-1)(a_k + 1)} decomposition,
// active for k with (a_1..a_(k-1)(a_k + 1))^inf beating u.  The purely
// periodic decomposition is excluded here as well.
inline CheckResult check_ak2(const EvPeriodicSeq& a, std::size_t u_depth = 256) {
    return detail::block_exclusion_scan(
        a, u_depth, /*pure_a_fails=*/true,
        [](DigitWord prefix) -> std::optional<detail::BlockPair> {
            detail::BlockPair bp;
            bp.A = prefix;
            bp.A.push_back(0);
            ++prefix.back();
            bp.gate = prefix;
            bp.B = std::move(prefix);
            return bp;
        });
}

}  // namespace negabeta
