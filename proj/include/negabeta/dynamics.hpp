#pragma once
// dynamics.hpp - The negative-base transformation on [-b/(b+1), 1/(b+1)), its
// conjugate on (0,1], digit generation with exact floor decisions, series
// evaluation for eventually periodic sequences, and the P_n recurrence.

#include "negabeta/beta_value.hpp"
#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"
#include "negabeta/interval.hpp"
#include "negabeta/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace negabeta {

struct DynOptions {
    unsigned precision_bits = 256;
};

// A point of the dynamical interval: exact rational, exact element of
// Q(beta), or plain enclosure.
struct PointValue {
    AlgNum num;

    static PointValue rational(const Rat& v) {
        PointValue p;
        p.num.q = v;
        p.num.box = QInterval(v);
        return p;
    }
    static PointValue interval(const QInterval& b) {
        PointValue p;
        p.num.box = b;
        return p;
    }

    QInterval enclosure() const { return num.box; }
    std::optional<Rat> exact() const { return num.q; }
};

struct StepResult {
    Digit digit = 0;
    PointValue next;
};

namespace detail {

struct DynEngine {
    AlgCtx ctx;
    AlgNum beta;
    AlgNum beta_plus_1;
    AlgNum t_offset;  // beta/(beta+1)

    DynEngine(const BetaValue& b, unsigned bits) : ctx(b, bits) {
        beta = ctx.beta_num();
        beta_plus_1 = ctx.add(beta, ctx.from_rat(Rat(1)));
        t_offset = ctx.div(beta, beta_plus_1);
    }

    AlgNum left_endpoint() { return ctx.neg(t_offset); }
    AlgNum right_endpoint() { return ctx.div(ctx.from_rat(Rat(1)), beta_plus_1); }

    static Digit to_digit(const Int& d) {
        if (d < 0) throw internal_error("negative digit generated");
        if (d > (Int(1) << 60)) throw resource_error("digit out of range");
        return d.convert_to<Digit>();
    }

    // One application of T: digit = floor(beta/(beta+1) - beta*x),
    // next = -beta*x - digit.
    std::pair<Digit, AlgNum> step_t(const AlgNum& x) {
        AlgNum t = ctx.mul(beta, x);
        AlgNum f = ctx.sub(t_offset, t);
        Int d = ctx.floor_num(f, "digit argument");
        AlgNum next = ctx.sub(ctx.neg(t), ctx.from_rat(Rat(d)));
        return {to_digit(d), next};
    }

    // One application of the conjugate map: digit = floor(beta*x),
    // next = -beta*x + digit + 1.
    std::pair<Digit, AlgNum> step_t_tilde(const AlgNum& x) {
        AlgNum t = ctx.mul(beta, x);
        Int d = ctx.floor_num(t, "digit argument");
        AlgNum next = ctx.add(ctx.neg(t), ctx.from_rat(Rat(d + 1)));
        return {to_digit(d), next};
    }

    void require_in_t_domain(const AlgNum& x) {
        if (ctx.exact_mode()) {
            if (ctx.sign(ctx.sub(x, left_endpoint())) < 0 ||
                ctx.sign(ctx.sub(x, right_endpoint())) >= 0)
                throw invalid_input_error("point outside [-b/(b+1), 1/(b+1))");
        } else {
            // Only certain violations can be rejected from enclosures.
            if (x.box.hi < left_endpoint().box.lo ||
                x.box.lo >= right_endpoint().box.hi)
                throw invalid_input_error("point outside [-b/(b+1), 1/(b+1))");
        }
    }

    void require_in_tilde_domain(const AlgNum& x) {
        if (ctx.exact_mode()) {
            if (ctx.sign(x) <= 0 || ctx.sign(ctx.sub(x, ctx.from_rat(Rat(1)))) > 0)
                throw invalid_input_error("point outside (0, 1]");
        } else {
            if (x.box.hi <= 0 || x.box.lo > 1)
                throw invalid_input_error("point outside (0, 1]");
        }
    }
};

}  // namespace detail

inline StepResult step_T(const BetaValue& beta, const PointValue& x,
                         const DynOptions& opts = {}) {
    detail::DynEngine eng(beta, opts.precision_bits);
    eng.require_in_t_domain(x.num);
    auto [d, next] = eng.step_t(x.num);
    return {d, PointValue{next}};
}

inline StepResult step_T_tilde(const BetaValue& beta, const PointValue& x,
                               const DynOptions& opts = {}) {
    detail::DynEngine eng(beta, opts.precision_bits);
    eng.require_in_tilde_domain(x.num);
    auto [d, next] = eng.step_t_tilde(x.num);
    return {d, PointValue{next}};
}

// First n digits of the expansion of x.
inline DigitWord expand(const BetaValue& beta, const PointValue& x, std::size_t n,
                        const DynOptions& opts = {}) {
    if (n < 1) throw invalid_input_error("digit count must be >= 1");
    detail::DynEngine eng(beta, opts.precision_bits);
    eng.require_in_t_domain(x.num);
    DigitWord out;
    out.reserve(n);
    AlgNum cur = x.num;
    for (std::size_t i = 0; i < n; ++i) {
        auto [d, next] = eng.step_t(cur);
        out.push_back(d);
        cur = std::move(next);
    }
    return out;
}

// Expansion digits of the left endpoint -b/(b+1).
inline DigitWord left_endpoint_expansion(const BetaValue& beta, std::size_t n,
                                         const DynOptions& opts = {}) {
    if (n < 1) throw invalid_input_error("digit count must be >= 1");
    detail::DynEngine eng(beta, opts.precision_bits);
    DigitWord out;
    out.reserve(n);
    AlgNum cur = eng.left_endpoint();
    for (std::size_t i = 0; i < n; ++i) {
        auto [d, next] = eng.step_t(cur);
        out.push_back(d);
        cur = std::move(next);
    }
    return out;
}

struct Itinerary {
    DigitWord digits;                     // digits generated before stopping
    std::optional<EvPeriodicSeq> closed;  // set when the orbit closed exactly
};

// Runs the left-endpoint orbit with exact cycle detection.  When the orbit
// revisits a point, the full infinite expansion is known and returned in
// canonical form.
inline Itinerary left_endpoint_itinerary(const BetaValue& beta,
                                         std::size_t max_steps,
                                         const DynOptions& opts = {}) {
    detail::DynEngine eng(beta, opts.precision_bits);
    Itinerary it;
    if (!eng.ctx.exact_mode()) {
        it.digits = left_endpoint_expansion(beta, max_steps, opts);
        return it;
    }
    std::vector<AlgNum> orbit;
    orbit.reserve(max_steps);
    AlgNum cur = eng.left_endpoint();
    for (std::size_t i = 0; i < max_steps; ++i) {
        QInterval cur_box = eng.ctx.tight_box(cur);
        for (std::size_t j = 0; j < orbit.size(); ++j) {
            QInterval prev_box = eng.ctx.tight_box(orbit[j]);
            if (prev_box.hi < cur_box.lo || cur_box.hi < prev_box.lo) continue;
            if (eng.ctx.is_zero(eng.ctx.sub(cur, orbit[j]))) {
                DigitWord pre(it.digits.begin(),
                              it.digits.begin() + static_cast<std::ptrdiff_t>(j));
                DigitWord per(it.digits.begin() + static_cast<std::ptrdiff_t>(j),
                              it.digits.end());
                it.closed = EvPeriodicSeq(std::move(pre), std::move(per));
                return it;
            }
        }
        orbit.push_back(cur);
        auto [d, next] = eng.step_t(cur);
        it.digits.push_back(d);
        cur = std::move(next);
    }
    return it;
}

// Exact value of sum_j s_j (-beta)^(-j).
inline PointValue eval_series(const EvPeriodicSeq& s, const BetaValue& beta,
                              const DynOptions& opts = {}) {
    detail::DynEngine eng(beta, opts.precision_bits);
    AlgCtx& ctx = eng.ctx;
    AlgNum y = ctx.neg(eng.beta);
    const DigitWord& pre = s.preperiod();
    const DigitWord& per = s.period();
    AlgNum A = ctx.from_rat(Rat(0));
    for (Digit d : pre) A = ctx.add(ctx.mul(A, y), ctx.from_rat(Rat(d)));
    AlgNum B = ctx.from_rat(Rat(0));
    for (Digit d : per) B = ctx.add(ctx.mul(B, y), ctx.from_rat(Rat(d)));
    AlgNum yq = ctx.from_rat(Rat(1));
    for (std::size_t i = 0; i < per.size(); ++i) yq = ctx.mul(yq, y);
    AlgNum yp = ctx.from_rat(Rat(1));
    for (std::size_t i = 0; i < pre.size(); ++i) yp = ctx.mul(yp, y);
    AlgNum yq1 = ctx.sub(yq, ctx.from_rat(Rat(1)));
    AlgNum numer = ctx.add(ctx.mul(A, yq1), B);
    AlgNum denom = ctx.mul(yp, yq1);
    return PointValue{ctx.div(numer, denom)};
}

namespace detail {

// Value of sum_j s_j y^(-j) as numerator/denominator polynomials in y:
//   [A(y) (y^q - 1) + B(y)]  /  [y^p (y^q - 1)].
inline std::pair<PolyQ, PolyQ> series_value_fraction_y(const EvPeriodicSeq& s) {
    const DigitWord& pre = s.preperiod();
    const DigitWord& per = s.period();
    PolyQ A, B, ypoly{Rat(0), Rat(1)};
    for (Digit d : pre) A = poly_add(poly_mul(A, ypoly), poly_const(Rat(d)));
    for (Digit d : per) B = poly_add(poly_mul(B, ypoly), poly_const(Rat(d)));
    PolyQ yq(per.size() + 1, Rat(0));
    yq[per.size()] = 1;
    PolyQ yp(pre.size() + 1, Rat(0));
    yp[pre.size()] = 1;
    PolyQ yq1 = poly_sub(yq, poly_const(Rat(1)));
    PolyQ numer = poly_add(poly_mul(A, yq1), B);
    PolyQ denom = poly_mul(yp, yq1);
    return {numer, denom};
}

inline PolyQ substitute_minus_x(PolyQ p) {
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    return p;
}

}  // namespace detail

// Integer-normalized polynomial vanishing at x = beta exactly when
// sum_j s_j (-beta)^(-j) = -beta/(beta+1).
inline PolyQ series_left_endpoint_poly(const EvPeriodicSeq& s) {
    auto [numer, denom] = detail::series_value_fraction_y(s);
    // Target in y = -x coordinates: y/(1-y).
    PolyQ one_minus_y{Rat(1), Rat(-1)};
    PolyQ ypoly{Rat(0), Rat(1)};
    PolyQ p = poly_sub(poly_mul(one_minus_y, numer), poly_mul(ypoly, denom));
    return poly_from_integer_coeffs(poly_integer_coeffs(detail::substitute_minus_x(p)));
}

// Integer-normalized polynomial vanishing at x = beta exactly when
// sum_j s_j (-beta)^(-j) = 1/(beta+1).
inline PolyQ series_right_endpoint_poly(const EvPeriodicSeq& s) {
    auto [numer, denom] = detail::series_value_fraction_y(s);
    PolyQ one_minus_y{Rat(1), Rat(-1)};
    PolyQ p = poly_sub(poly_mul(one_minus_y, numer), denom);
    return poly_from_integer_coeffs(poly_integer_coeffs(detail::substitute_minus_x(p)));
}

// ---- P_n recurrence ----
// P_0 = 1, P_n = a_n + 1 - x P_(n-1); P_n(beta) is the n-th forward image of
// 1 under the conjugate map.

inline std::vector<Rat> pn_trace(const DigitWord& digits, const Rat& x) {
    std::vector<Rat> t;
    t.reserve(digits.size() + 1);
    t.emplace_back(1);
    for (Digit a : digits) t.push_back(Rat(a) + 1 - x * t.back());
    return t;
}

inline std::vector<QInterval> pn_trace(const DigitWord& digits, const QInterval& x) {
    std::vector<QInterval> t;
    t.reserve(digits.size() + 1);
    t.emplace_back(Rat(1));
    for (Digit a : digits) {
        QInterval v = QInterval(Rat(a) + 1) - x * t.back();
        t.push_back(v);
    }
    return t;
}

// P_0, ..., P_n as polynomials for a digit prefix.
inline std::vector<PolyQ> pn_polynomials(const DigitWord& digits) {
    std::vector<PolyQ> ps;
    ps.reserve(digits.size() + 1);
    ps.push_back(poly_const(Rat(1)));
    PolyQ xpoly{Rat(0), Rat(1)};
    for (Digit a : digits)
        ps.push_back(poly_sub(poly_const(Rat(a) + 1), poly_mul(xpoly, ps.back())));
    return ps;
}

}  // namespace negabeta
