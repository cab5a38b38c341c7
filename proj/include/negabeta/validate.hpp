#pragma once
// validate.hpp - Full validation of a candidate left-endpoint expansion:
// the shift condition, domination of the boundary word, both block-exclusion
// conditions, base recovery, and the exact tail-value test.

#include "negabeta/admissibility.hpp"
#include "negabeta/beta_value.hpp"
#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"
#include "negabeta/dynamics.hpp"
#include "negabeta/solver.hpp"

#include <optional>
#include <string>

namespace negabeta {

enum class OverallVerdict { VALID, INVALID, INDETERMINATE, SUSPECT };

struct Verdict {
    CheckResult cond_shift;                    // every tail <= the sequence
    CheckStatus cond_u = CheckStatus::PASS;    // sequence beats the boundary word
    CheckResult cond_ak1;                      // first block exclusion
    CheckResult cond_ak2;                      // second block exclusion
    std::optional<BetaValue> beta;             // recovered base, when solvable
    std::optional<std::size_t> tail_hit;       // least k whose tail value is 1/(beta+1)
    OverallVerdict overall = OverallVerdict::INVALID;
    std::string reason;
};

inline const char* to_string(OverallVerdict v) {
    switch (v) {
        case OverallVerdict::VALID: return "VALID";
        case OverallVerdict::INVALID: return "INVALID";
        case OverallVerdict::INDETERMINATE: return "INDETERMINATE";
        default: return "SUSPECT";
    }
}

inline Verdict validate(const EvPeriodicSeq& a, unsigned precision_bits = 256,
                        std::size_t u_depth = 256) {
    Verdict v;
    v.cond_shift = check_shift_condition(a);
    PartialOrdering vs_u = cmp_with_u(a, u_depth);
    v.cond_u = (vs_u == PartialOrdering::GREATER) ? CheckStatus::PASS
               : (vs_u == PartialOrdering::UNDECIDED) ? CheckStatus::INDETERMINATE
                                                      : CheckStatus::FAIL;
    v.cond_ak1 = check_ak1(a, u_depth);
    v.cond_ak2 = check_ak2(a, u_depth);

    if (v.cond_shift.status == CheckStatus::FAIL) {
        v.overall = OverallVerdict::INVALID;
        v.reason = "shift condition fails at k=" +
                   std::to_string(*v.cond_shift.witness_k);
        return v;
    }
    if (v.cond_u == CheckStatus::FAIL) {
        v.overall = OverallVerdict::INVALID;
        v.reason = "sequence does not dominate the boundary word";
        return v;
    }
    if (v.cond_u == CheckStatus::INDETERMINATE) {
        v.overall = OverallVerdict::INDETERMINATE;
        v.reason = "comparison with the boundary word undecided at depth " +
                   std::to_string(u_depth);
        return v;
    }

    // Conditions (shift) and (boundary word) hold, so a unique base exists.
    SolveOptions opts;
    opts.precision_bits = precision_bits;
    opts.u_depth = u_depth;
    SolveResult sr = solve_beta(a, opts);
    v.beta = sr.beta;

    // Exact test of every distinct tail against the right endpoint value.
    AlgCtx ctx(sr.beta);
    for (const auto& e : distinct_tails(a)) {
        PolyQ z = series_right_endpoint_poly(e.tail);
        if (ctx.is_zero(ctx.eval_poly(z))) {
            if (!v.tail_hit || e.k < *v.tail_hit) v.tail_hit = e.k;
        }
    }

    bool blocks_indeterminate = v.cond_ak1.status == CheckStatus::INDETERMINATE ||
                                v.cond_ak2.status == CheckStatus::INDETERMINATE;
    if (!blocks_indeterminate) {
        bool blocks_fail = v.cond_ak1.status == CheckStatus::FAIL ||
                           v.cond_ak2.status == CheckStatus::FAIL;
        if (blocks_fail != v.tail_hit.has_value())
            throw internal_error(
                "block exclusion and tail-value test disagree on " + a.str());
    }

    if (v.tail_hit) {
        v.overall = OverallVerdict::INVALID;
        v.reason = "tail at k=" + std::to_string(*v.tail_hit) +
                   " sums to 1/(beta+1)";
        return v;
    }
    if (blocks_indeterminate) {
        v.overall = OverallVerdict::INDETERMINATE;
        v.reason = "block exclusion condition undecided against the boundary word";
        return v;
    }
    v.overall = OverallVerdict::VALID;
    v.reason = "";
    return v;
}

}  // namespace negabeta
