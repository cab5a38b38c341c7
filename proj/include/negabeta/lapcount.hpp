#pragma once
// lapcount.hpp - Cylinder intervals of the transformation, the two lap
// counts (with and without degenerate point cylinders), and the finite-n
// entropy estimate.

#include "negabeta/beta_value.hpp"
#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"
#include "negabeta/dynamics.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace negabeta {

enum class CylStatus { EMPTY, POINT, POSITIVE };

struct CylinderInterval {
    DigitWord label;
    QInterval lo_box;
    QInterval hi_box;
    std::optional<Rat> lo_exact;
    std::optional<Rat> hi_exact;
    bool lo_closed = true;
    bool hi_closed = true;
    CylStatus status = CylStatus::POSITIVE;
};

inline constexpr std::size_t kCylinderBudget = 10'000'000;

namespace detail {

struct EndPoint {
    AlgNum v;
    bool closed = true;
};

struct CylNode {
    DigitWord label;
    EndPoint lo, hi;          // own interval
    EndPoint img_lo, img_hi;  // image under T^|label|
    AlgNum map_s, map_t;      // T^|label|(x) = s x + t on this cylinder
    bool point = false;
};

}  // namespace detail

// All non-empty level-n cylinders in label order.  Exact throughout: the
// base must be rational or carry a defining polynomial.
inline std::vector<CylinderInterval> cylinders(const BetaValue& beta,
                                               std::size_t n,
                                               const DynOptions& opts = {}) {
    if (n < 1) throw invalid_input_error("cylinder depth must be >= 1");
    if (!beta.exact && !beta.min_poly)
        throw unsupported_error(
            "cylinder refinement needs an exact base (rational or with a defining polynomial)");
    detail::DynEngine eng(beta, opts.precision_bits);
    AlgCtx& ctx = eng.ctx;
    AlgNum left = eng.left_endpoint();
    AlgNum right = eng.right_endpoint();
    Int a1 = ctx.floor_num(eng.beta, "integer part of the base");
    Digit dmax = detail::DynEngine::to_digit(a1);

    // Digit regions of a single step: f(x) = b/(b+1) - b x lands in [d, d+1)
    // exactly on the left-open, right-closed strip between the pullbacks.
    std::vector<detail::EndPoint> strip_lo(static_cast<std::size_t>(dmax) + 1);
    std::vector<detail::EndPoint> strip_hi(static_cast<std::size_t>(dmax) + 1);
    for (Digit d = 0; d <= dmax; ++d) {
        AlgNum num_hi = ctx.sub(eng.t_offset, ctx.from_rat(Rat(d)));
        AlgNum num_lo = ctx.sub(num_hi, ctx.from_rat(Rat(1)));
        strip_lo[static_cast<std::size_t>(d)] = {ctx.div(num_lo, eng.beta), false};
        strip_hi[static_cast<std::size_t>(d)] = {ctx.div(num_hi, eng.beta), true};
    }

    std::vector<detail::CylNode> level;
    {
        detail::CylNode root;
        root.lo = {left, true};
        root.hi = {right, false};
        root.img_lo = root.lo;
        root.img_hi = root.hi;
        root.map_s = ctx.from_rat(Rat(1));
        root.map_t = ctx.from_rat(Rat(0));
        level.push_back(std::move(root));
    }

    for (std::size_t depth = 0; depth < n; ++depth) {
        if ((depth + 1) * level.size() > kCylinderBudget)
            throw resource_error("cylinder refinement budget exceeded");
        std::vector<detail::CylNode> next;
        next.reserve(level.size() * 2);
        for (const auto& node : level) {
            for (Digit d = 0; d <= dmax; ++d) {
                // Clip the image interval to the digit strip.
                detail::EndPoint lo = node.img_lo;
                detail::EndPoint hi = node.img_hi;
                const auto& s_lo = strip_lo[static_cast<std::size_t>(d)];
                const auto& s_hi = strip_hi[static_cast<std::size_t>(d)];
                Ordering c = ctx.cmp(s_lo.v, lo.v);
                if (c == Ordering::GREATER)
                    lo = s_lo;
                else if (c == Ordering::EQUAL)
                    lo.closed = lo.closed && s_lo.closed;
                c = ctx.cmp(s_hi.v, hi.v);
                if (c == Ordering::LESS)
                    hi = s_hi;
                else if (c == Ordering::EQUAL)
                    hi.closed = hi.closed && s_hi.closed;
                Ordering span = ctx.cmp(lo.v, hi.v);
                if (span == Ordering::GREATER) continue;
                bool is_point = (span == Ordering::EQUAL);
                if (is_point && !(lo.closed && hi.closed)) continue;

                detail::CylNode child;
                child.label = node.label;
                child.label.push_back(d);
                child.point = is_point;
                // Own endpoints: pull the clipped image back through the
                // affine map, which reverses orientation at odd depths.
                AlgNum x_from_lo = ctx.div(ctx.sub(lo.v, node.map_t), node.map_s);
                AlgNum x_from_hi = ctx.div(ctx.sub(hi.v, node.map_t), node.map_s);
                bool s_positive = (depth % 2 == 0);
                if (s_positive) {
                    child.lo = {x_from_lo, lo.closed};
                    child.hi = {x_from_hi, hi.closed};
                } else {
                    child.lo = {x_from_hi, hi.closed};
                    child.hi = {x_from_lo, lo.closed};
                }
                // New image: T(y) = -b y - d flips the clipped interval.
                AlgNum dnum = ctx.from_rat(Rat(d));
                child.img_lo = {ctx.sub(ctx.neg(ctx.mul(eng.beta, hi.v)), dnum),
                                hi.closed};
                child.img_hi = {ctx.sub(ctx.neg(ctx.mul(eng.beta, lo.v)), dnum),
                                lo.closed};
                child.map_s = ctx.neg(ctx.mul(eng.beta, node.map_s));
                child.map_t = ctx.sub(ctx.neg(ctx.mul(eng.beta, node.map_t)), dnum);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }

    std::vector<CylinderInterval> out;
    out.reserve(level.size());
    for (const auto& node : level) {
        CylinderInterval c;
        c.label = node.label;
        c.lo_box = ctx.tight_box(node.lo.v);
        c.hi_box = ctx.tight_box(node.hi.v);
        c.lo_exact = node.lo.v.q;
        c.hi_exact = node.hi.v.q;
        c.lo_closed = node.lo.closed;
        c.hi_closed = node.hi.closed;
        c.status = node.point ? CylStatus::POINT : CylStatus::POSITIVE;
        out.push_back(std::move(c));
    }
    return out;
}

struct LapCounts {
    Int L;        // non-empty cylinders
    Int L_prime;  // positive-length cylinders
};

inline LapCounts lap_numbers(const BetaValue& beta, std::size_t n,
                             const DynOptions& opts = {}) {
    auto cyls = cylinders(beta, n, opts);
    LapCounts lc{Int(0), Int(0)};
    for (const auto& c : cyls) {
        if (c.status == CylStatus::EMPTY) continue;
        ++lc.L;
        if (c.status == CylStatus::POSITIVE) ++lc.L_prime;
    }
    return lc;
}

// (1/n) log L'_n, a finite-n stand-in for the entropy log(beta).
inline double entropy_estimate(const BetaValue& beta, std::size_t n,
                               const DynOptions& opts = {}) {
    if (n < 2) throw invalid_input_error("entropy estimate needs n >= 2");
    LapCounts lc = lap_numbers(beta, n, opts);
    return std::log(lc.L_prime.convert_to<double>()) / static_cast<double>(n);
}

}  // namespace negabeta
