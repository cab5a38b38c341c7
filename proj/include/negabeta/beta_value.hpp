#pragma once
// beta_value.hpp - Bases beta > 1 represented exactly: as rationals, or as
// isolated roots of integer polynomials, or as plain enclosures.  Also the
// arithmetic context for exact computation in Q(beta).

#include "negabeta/common.hpp"
#include "negabeta/interval.hpp"
#include "negabeta/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace negabeta {

struct BetaValue {
    QInterval enclosure;            // 1 < lo <= hi
    std::optional<Rat> exact;       // set iff the base is an exact rational
    std::optional<PolyQ> min_poly;  // squarefree; exactly one root inside the
                                    // enclosure; nonzero at both endpoints

    bool refinable() const { return exact.has_value() || min_poly.has_value(); }

    static BetaValue from_rational(const Rat& r) {
        if (r <= 1) throw invalid_input_error("base must exceed 1");
        BetaValue b;
        b.enclosure = QInterval(r);
        b.exact = r;
        return b;
    }

    // Isolates the unique root of p inside [lo, hi].  Rejects brackets that
    // contain no root or several.
    static BetaValue from_poly(const PolyQ& p, const Rat& lo, const Rat& hi,
                               unsigned bits = 64) {
        if (poly_degree(p) < 1)
            throw invalid_input_error("defining polynomial must be non-constant");
        if (lo > hi) throw invalid_input_error("empty bracket");
        PolyQ sf = poly_squarefree(p);
        auto roots = isolate_roots(sf, lo, hi, pow2(-static_cast<long>(bits)));
        if (roots.size() != 1)
            throw invalid_input_error("bracket must isolate exactly one root (found " +
                                      std::to_string(roots.size()) + ")");
        const IsolatedRoot& r = roots.front();
        if (r.exact) {
            BetaValue b = from_rational(r.ivl.lo);
            b.min_poly = sf;
            return b;
        }
        QInterval enc = r.ivl;
        // Push the lower endpoint strictly above 1.
        Rat floor_width = pow2(-static_cast<long>(4 * bits + 16));
        while (enc.lo <= 1) {
            if (enc.width() <= floor_width)
                throw invalid_input_error("base must exceed 1");
            enc = bisect_root(sf, enc, enc.width() / 2);
            if (enc.is_point()) {
                if (enc.lo <= 1) throw invalid_input_error("base must exceed 1");
                BetaValue b = from_rational(enc.lo);
                b.min_poly = sf;
                return b;
            }
        }
        BetaValue b;
        b.enclosure = enc;
        b.min_poly = sf;
        return b;
    }

    // An inexact base known only through an enclosure.  Not refinable.
    static BetaValue from_interval(const Rat& lo, const Rat& hi) {
        if (lo <= 1) throw invalid_input_error("base must exceed 1");
        BetaValue b;
        b.enclosure = QInterval(lo, hi);
        if (lo == hi) b.exact = lo;
        return b;
    }

    // Narrows the enclosure to width <= 2^-bits when possible.
    BetaValue refined(unsigned bits) const {
        if (exact) return *this;
        if (!min_poly) return *this;
        Rat target = pow2(-static_cast<long>(bits));
        if (enclosure.width() <= target) return *this;
        BetaValue b = *this;
        QInterval enc = bisect_root(*min_poly, enclosure, target);
        if (enc.is_point()) {
            b.exact = enc.lo;
            b.enclosure = enc;
        } else {
            b.enclosure = enc;
        }
        return b;
    }
};

// ---- Exact arithmetic over Q(beta) ----

// A value tied to the context that produced it.  Exactly one representation
// level is active: rational payload, polynomial coordinate (value =
// coord(beta)), or enclosure only.
struct AlgNum {
    std::optional<Rat> q;
    std::optional<PolyQ> coord;
    QInterval box;

    bool is_rational() const { return q.has_value(); }
};

// Arithmetic context.  Holds a working copy of the base whose enclosure is
// refined on demand; all operations are exact when the base is rational or
// carries a defining polynomial.
class AlgCtx {
public:
    explicit AlgCtx(const BetaValue& beta, unsigned start_bits = 64)
        : beta_(beta), bits_(start_bits) {
        if (beta_.exact)
            mode_ = Mode::RATIONAL;
        else if (beta_.min_poly) {
            mode_ = Mode::ALGEBRAIC;
            modulus_ = poly_monic(*beta_.min_poly);
        } else
            mode_ = Mode::INTERVAL;
    }

    const BetaValue& beta_value() const { return beta_; }
    bool exact_mode() const { return mode_ != Mode::INTERVAL; }

    AlgNum from_rat(const Rat& v) const {
        AlgNum a;
        a.q = v;
        if (mode_ == Mode::ALGEBRAIC) a.coord = poly_const(v);
        a.box = QInterval(v);
        return a;
    }

    AlgNum beta_num() const {
        switch (mode_) {
            case Mode::RATIONAL:
                return from_rat(*beta_.exact);
            case Mode::ALGEBRAIC: {
                AlgNum a;
                a.coord = reduce(PolyQ{Rat(0), Rat(1)});
                a.box = beta_.enclosure;
                sync_rational(a);
                return a;
            }
            default: {
                AlgNum a;
                a.box = beta_.enclosure;
                return a;
            }
        }
    }

    // f(beta)
    AlgNum eval_poly(const PolyQ& f) const {
        switch (mode_) {
            case Mode::RATIONAL:
                return from_rat(poly_eval(f, *beta_.exact));
            case Mode::ALGEBRAIC: {
                AlgNum a;
                a.coord = reduce(f);
                a.box = poly_eval(*a.coord, beta_.enclosure);
                sync_rational(a);
                return a;
            }
            default: {
                AlgNum a;
                a.box = poly_eval(f, beta_.enclosure);
                return a;
            }
        }
    }

    AlgNum add(const AlgNum& a, const AlgNum& b) const {
        if (a.q && b.q) return from_rat(*a.q + *b.q);
        if (mode_ == Mode::ALGEBRAIC && exactish(a) && exactish(b)) {
            AlgNum r;
            r.coord = reduce(poly_add(coord_of(a), coord_of(b)));
            r.box = a.box + b.box;
            sync_rational(r);
            return r;
        }
        AlgNum r;
        r.box = a.box + b.box;
        return r;
    }

    AlgNum neg(const AlgNum& a) const {
        if (a.q) return from_rat(-*a.q);
        AlgNum r;
        if (mode_ == Mode::ALGEBRAIC && exactish(a)) {
            r.coord = poly_neg(coord_of(a));
            r.box = -a.box;
            sync_rational(r);
            return r;
        }
        r.box = -a.box;
        return r;
    }

    AlgNum sub(const AlgNum& a, const AlgNum& b) const { return add(a, neg(b)); }

    AlgNum mul(const AlgNum& a, const AlgNum& b) const {
        if (a.q && b.q) return from_rat(*a.q * *b.q);
        if (mode_ == Mode::ALGEBRAIC && exactish(a) && exactish(b)) {
            AlgNum r;
            r.coord = reduce(poly_mul(coord_of(a), coord_of(b)));
            r.box = a.box * b.box;
            sync_rational(r);
            return r;
        }
        AlgNum r;
        r.box = a.box * b.box;
        return r;
    }

    AlgNum div(const AlgNum& a, const AlgNum& b) {
        if (b.q) {
            if (*b.q == 0) throw invalid_input_error("division by zero");
            if (a.q) return from_rat(*a.q / *b.q);
            if (mode_ == Mode::ALGEBRAIC && exactish(a)) {
                AlgNum r;
                r.coord = poly_scale(coord_of(a), Rat(1) / *b.q);
                r.box = negabeta::div(a.box, *b.q);
                sync_rational(r);
                return r;
            }
            AlgNum r;
            r.box = negabeta::div(a.box, *b.q);
            return r;
        }
        if (mode_ == Mode::ALGEBRAIC && exactish(a) && exactish(b)) {
            if (sign(b) == 0) throw invalid_input_error("division by zero");
            PolyQ inv = invert_coord(coord_of(b));
            AlgNum r;
            r.coord = reduce(poly_mul(coord_of(a), inv));
            r.box = poly_eval(*r.coord, beta_.enclosure);
            sync_rational(r);
            return r;
        }
        AlgNum r;
        r.box = negabeta::div(a.box, b.box);
        return r;
    }

    // Exact sign.  In interval mode the enclosure decides or a
    // precision_error is raised.
    int sign(const AlgNum& a, const char* what = "value") {
        if (a.q) return sign_of(*a.q);
        if (mode_ == Mode::ALGEBRAIC && a.coord) {
            if (!a.box.straddles_zero()) return a.box.lo > 0 ? 1 : -1;
            const PolyQ& c = *a.coord;
            if (poly_is_zero(c)) return 0;
            if (coord_is_zero_at_beta(c)) return 0;
            QInterval box = a.box;
            while (box.straddles_zero()) {
                refine_beta();
                box = poly_eval(c, beta_.enclosure);
            }
            return box.lo > 0 ? 1 : -1;
        }
        if (!a.box.straddles_zero()) return a.box.lo > 0 ? 1 : -1;
        if (a.box.is_point()) return 0;
        throw precision_error(std::string("sign of ") + what +
                              " undecidable at the available precision");
    }

    bool is_zero(const AlgNum& a, const char* what = "value") {
        return sign(a, what) == 0;
    }

    Ordering cmp(const AlgNum& a, const AlgNum& b, const char* what = "value") {
        int s = sign(sub(a, b), what);
        if (s < 0) return Ordering::LESS;
        if (s > 0) return Ordering::GREATER;
        return Ordering::EQUAL;
    }

    // Exact floor.  In interval mode throws precision_error when the
    // enclosure straddles an integer.
    Int floor_num(const AlgNum& a, const char* what = "value") {
        if (a.q) return floor_rat(*a.q);
        if (mode_ != Mode::ALGEBRAIC || !a.coord) {
            auto f = floor_point(a.box);
            if (!f)
                throw precision_error(std::string("floor of ") + what +
                                      " straddles an integer at the available precision");
            return *f;
        }
        QInterval box = a.box;
        while (box.width() >= Rat(1, 2)) {
            refine_beta();
            box = poly_eval(*a.coord, beta_.enclosure);
        }
        Int m = floor_rat(box.lo);
        // Settle the two candidate integers exactly.
        while (sign(sub(a, from_rat(Rat(m + 1)))) >= 0) ++m;
        while (sign(sub(a, from_rat(Rat(m)))) < 0) --m;
        return m;
    }

    // Current enclosure of a value, tightened against the working base
    // enclosure (useful after refinement).
    QInterval tight_box(const AlgNum& a) const {
        if (a.q) return QInterval(*a.q);
        if (mode_ == Mode::ALGEBRAIC && a.coord)
            return poly_eval(*a.coord, beta_.enclosure);
        return a.box;
    }

    void refine_beta_to(unsigned bits) {
        if (bits > bits_) {
            bits_ = bits;
            beta_ = beta_.refined(bits_);
        }
    }

private:
    enum class Mode { RATIONAL, ALGEBRAIC, INTERVAL };

    static bool exactish(const AlgNum& a) {
        return a.q.has_value() || a.coord.has_value();
    }

    PolyQ coord_of(const AlgNum& a) const {
        if (a.coord) return *a.coord;
        if (a.q) return poly_const(*a.q);
        throw internal_error("value has no exact representation in this context");
    }

    PolyQ reduce(const PolyQ& f) const {
        if (poly_degree(f) < poly_degree(modulus_)) return f;
        return poly_rem(f, modulus_);
    }

    static void sync_rational(AlgNum& a) {
        if (a.coord && poly_degree(*a.coord) <= 0)
            a.q = a.coord->empty() ? Rat(0) : (*a.coord)[0];
    }

    // True iff c(beta) == 0, decided through the defining polynomial.
    bool coord_is_zero_at_beta(const PolyQ& c) const {
        if (beta_.exact) return poly_eval(c, *beta_.exact) == 0;
        PolyQ r = reduce(c);
        if (poly_is_zero(r)) return true;
        PolyQ g = poly_gcd(r, modulus_);
        if (poly_degree(g) < 1) return false;
        int slo = sign_of(poly_eval(g, beta_.enclosure.lo));
        int shi = sign_of(poly_eval(g, beta_.enclosure.hi));
        // g divides the squarefree modulus, whose only root in the enclosure
        // is beta itself, so a sign change pins the root to beta.
        return slo != shi;
    }

    PolyQ invert_coord(PolyQ c) {
        c = reduce(c);
        while (true) {
            auto [g, s] = poly_half_ext_gcd(c, modulus_);
            if (poly_degree(g) == 0) return s;
            // g(beta) != 0 because c(beta) != 0; drop the spurious factor.
            auto [quot, rem] = poly_divrem(modulus_, g);
            if (!poly_is_zero(rem))
                throw internal_error("modulus factorization failed");
            modulus_ = poly_monic(quot);
            if (poly_degree(modulus_) < 1)
                throw internal_error("modulus collapsed during inversion");
            c = reduce(c);
        }
    }

    void refine_beta() {
        if (bits_ > (1u << 24))
            throw internal_error("runaway refinement of base enclosure");
        bits_ *= 2;
        beta_ = beta_.refined(bits_);
    }

    Mode mode_;
    BetaValue beta_;
    PolyQ modulus_;
    unsigned bits_;
};

// ---- Base specification grammar (CLI-wide) ----
//   rat:p/q   exact rational
//   dec:d.dd  exact decimal rational
//   alg:c0,c1,...,cn:lo:hi   root of c0 + c1 x + ... + cn x^n isolated in [lo,hi]

inline BetaValue parse_beta_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw parse_error("base spec needs a 'rat:', 'dec:' or 'alg:' prefix");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "rat") {
        auto slash = rest.find('/');
        try {
            if (slash == std::string::npos) return BetaValue::from_rational(Rat(Int(rest)));
            Int num(rest.substr(0, slash));
            Int den(rest.substr(slash + 1));
            if (den == 0) throw parse_error("zero denominator");
            return BetaValue::from_rational(Rat(num, den));
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("bad rational: " + rest);
        }
    }
    if (kind == "dec") {
        return BetaValue::from_rational(parse_decimal_rational(rest));
    }
    if (kind == "alg") {
        auto c1 = rest.find(':');
        auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw parse_error("alg spec is alg:<c0,c1,...>:<lo>:<hi>");
        std::string coeff_str = rest.substr(0, c1);
        Rat lo = parse_decimal_rational(rest.substr(c1 + 1, c2 - c1 - 1));
        Rat hi = parse_decimal_rational(rest.substr(c2 + 1));
        PolyQ p;
        std::size_t pos = 0;
        while (pos <= coeff_str.size()) {
            auto comma = coeff_str.find(',', pos);
            std::string tok = coeff_str.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw parse_error("empty coefficient in alg spec");
            try {
                p.emplace_back(Int(tok));
            } catch (const std::exception&) {
                throw parse_error("bad coefficient: " + tok);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        poly_normalize(p);
        return BetaValue::from_poly(p, lo, hi);
    }
    throw parse_error("unknown base spec kind: " + kind);
}

}  // namespace negabeta
