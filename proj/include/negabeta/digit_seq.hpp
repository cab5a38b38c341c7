#pragma once
// digit_seq.hpp - Finite digit words, eventually periodic digit sequences in
// canonical form, the alternating lexicographic order, shifts, tails, and the
// deterministic two-block parse.

#include "negabeta/common.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace negabeta {

using DigitWord = std::vector<Digit>;

enum class Ordering { LESS, EQUAL, GREATER };

// Result of a comparison that may run out of digits before deciding.
enum class PartialOrdering { LESS, GREATER, UNDECIDED };

enum class BlockParseResult { IN_OMEGA_LANGUAGE, NOT_IN, ONLY_PURE_A };

inline Ordering reverse(Ordering o) {
    if (o == Ordering::LESS) return Ordering::GREATER;
    if (o == Ordering::GREATER) return Ordering::LESS;
    return Ordering::EQUAL;
}

// Digit comparison at 1-based position k under the alternating order:
// natural at odd k, reversed at even k.
inline Ordering alt_digit_cmp(Digit a, Digit b, std::size_t k) {
    if (a == b) return Ordering::EQUAL;
    bool less = (k % 2 == 1) ? (a < b) : (b < a);
    return less ? Ordering::LESS : Ordering::GREATER;
}

// An infinite digit sequence pre_1..pre_p (per_1..per_q)^inf, kept canonical:
// the period is primitive and the preperiod is minimal (its last digit
// differs from the period's last digit, or it is empty).
class EvPeriodicSeq {
public:
    EvPeriodicSeq(DigitWord pre, DigitWord per)
        : pre_(std::move(pre)), per_(std::move(per)) {
        if (per_.empty())
            throw invalid_input_error("eventually periodic sequence needs a nonempty period");
        for (Digit d : pre_)
            if (d < 0) throw invalid_input_error("digits must be non-negative");
        for (Digit d : per_)
            if (d < 0) throw invalid_input_error("digits must be non-negative");
        canonicalize_();
    }

    const DigitWord& preperiod() const { return pre_; }
    const DigitWord& period() const { return per_; }
    std::size_t preperiod_length() const { return pre_.size(); }
    std::size_t period_length() const { return per_.size(); }
    bool purely_periodic() const { return pre_.empty(); }

    // 1-based digit access.
    Digit digit(std::size_t n) const {
        if (n == 0) throw invalid_input_error("digit index is 1-based");
        if (n <= pre_.size()) return pre_[n - 1];
        return per_[(n - 1 - pre_.size()) % per_.size()];
    }

    DigitWord prefix(std::size_t n) const {
        DigitWord w;
        w.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) w.push_back(digit(i));
        return w;
    }

    bool operator==(const EvPeriodicSeq& o) const {
        return pre_ == o.pre_ && per_ == o.per_;
    }
    bool operator!=(const EvPeriodicSeq& o) const { return !(*this == o); }

    std::string str() const;

private:
    void canonicalize_() {
        // Primitive period: shortest divisor-length word whose power is per_.
        std::size_t q = per_.size();
        for (std::size_t d = 1; d < q; ++d) {
            if (q % d != 0) continue;
            bool rep = true;
            for (std::size_t i = d; i < q && rep; ++i)
                rep = (per_[i] == per_[i % d]);
            if (rep) {
                per_.resize(d);
                break;
            }
        }
        // Absorb preperiod digits equal to the period's last digit.
        while (!pre_.empty() && pre_.back() == per_.back()) {
            pre_.pop_back();
            per_.insert(per_.begin(), per_.back());
            per_.pop_back();
        }
    }

    DigitWord pre_;
    DigitWord per_;
};

inline EvPeriodicSeq canonicalize(DigitWord pre, DigitWord per) {
    return EvPeriodicSeq(std::move(pre), std::move(per));
}

inline EvPeriodicSeq purely_periodic(DigitWord per) {
    return EvPeriodicSeq({}, std::move(per));
}

// Exact comparison in the alternating lexicographic order.  Two canonical
// sequences agreeing through max(p) + lcm(q) digits agree everywhere.
inline Ordering alt_cmp(const EvPeriodicSeq& x, const EvPeriodicSeq& y) {
    std::size_t p = std::max(x.preperiod_length(), y.preperiod_length());
    std::size_t l = std::lcm(x.period_length(), y.period_length());
    if (l > (std::size_t{1} << 26))
        throw resource_error("period lcm too large for exact comparison");
    std::size_t bound = p + l;
    for (std::size_t k = 1; k <= bound; ++k) {
        Ordering o = alt_digit_cmp(x.digit(k), y.digit(k), k);
        if (o != Ordering::EQUAL) return o;
    }
    return Ordering::EQUAL;
}

// Finite-depth comparison of words; UNDECIDED when one is a prefix of the
// other (including equal words).
inline PartialOrdering alt_cmp_prefix(const DigitWord& x, const DigitWord& y) {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 1; k <= n; ++k) {
        Ordering o = alt_digit_cmp(x[k - 1], y[k - 1], k);
        if (o == Ordering::LESS) return PartialOrdering::LESS;
        if (o == Ordering::GREATER) return PartialOrdering::GREATER;
    }
    return PartialOrdering::UNDECIDED;
}

// Drops the first k digits.
inline EvPeriodicSeq shift(const EvPeriodicSeq& s, std::size_t k) {
    const DigitWord& pre = s.preperiod();
    const DigitWord& per = s.period();
    if (k <= pre.size()) {
        DigitWord npre(pre.begin() + static_cast<std::ptrdiff_t>(k), pre.end());
        return EvPeriodicSeq(std::move(npre), per);
    }
    std::size_t r = (k - pre.size()) % per.size();
    DigitWord nper(per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
    nper.insert(nper.end(), per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r));
    return EvPeriodicSeq({}, std::move(nper));
}

struct TailEntry {
    std::size_t k;  // number of digits dropped, >= 1
    EvPeriodicSeq tail;
};

// The distinct tails shift(s, k) for k >= 1, each with its least k.
inline std::vector<TailEntry> distinct_tails(const EvPeriodicSeq& s) {
    std::vector<TailEntry> out;
    std::size_t bound = s.preperiod_length() + s.period_length();
    for (std::size_t k = 1; k <= bound; ++k) {
        EvPeriodicSeq t = shift(s, k);
        bool seen = false;
        for (const auto& e : out)
            if (e.tail == t) {
                seen = true;
                break;
            }
        if (!seen) out.push_back({k, std::move(t)});
    }
    return out;
}

// Greedy deterministic parse of s into blocks from {A, B}.  A and B must
// differ at some index within the shorter of the two, which makes the parse
// branch-free; the state space (position inside preperiod/period at block
// boundaries) is finite, so cycling decides membership.
inline BlockParseResult block_parse(const EvPeriodicSeq& s, const DigitWord& A,
                                    const DigitWord& B) {
    std::size_t minlen = std::min(A.size(), B.size());
    std::size_t branch = minlen;
    for (std::size_t j = 0; j < minlen; ++j)
        if (A[j] != B[j]) {
            branch = j;
            break;
        }
    if (branch == minlen)
        throw unsupported_error("ambiguous block pair: one block is a prefix of the other");

    std::size_t p = s.preperiod_length();
    std::size_t q = s.period_length();
    auto normalize = [&](std::size_t pos) {
        return pos < p ? pos : p + (pos - p) % q;
    };
    std::vector<char> seen(p + q, 0);
    bool used_b = false;
    std::size_t pos = 0;  // 0-based index of the next unread digit
    while (true) {
        std::size_t state = normalize(pos);
        if (seen[state]) return used_b ? BlockParseResult::IN_OMEGA_LANGUAGE
                                       : BlockParseResult::ONLY_PURE_A;
        seen[state] = 1;
        Digit d = s.digit(pos + branch + 1);
        const DigitWord* blk = nullptr;
        if (d == A[branch])
            blk = &A;
        else if (d == B[branch])
            blk = &B;
        else
            return BlockParseResult::NOT_IN;
        for (std::size_t j = 0; j < blk->size(); ++j)
            if (s.digit(pos + j + 1) != (*blk)[j]) return BlockParseResult::NOT_IN;
        if (blk == &B) used_b = true;
        pos += blk->size();
    }
}

// ---- Text format ----
// Digits separated by single spaces; the period is parenthesized and comes
// last: "1 0 0 (1)".  A purely periodic sequence has an empty prefix: "(2 1 0)".

namespace detail {

struct SeqTokens {
    DigitWord pre;
    DigitWord per;
    bool has_period = false;
};

inline SeqTokens tokenize_sequence(const std::string& text) {
    SeqTokens t;
    DigitWord* cur = &t.pre;
    bool in_period = false;
    bool period_closed = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (period_closed)
            throw parse_error("unexpected characters after the period");
        if (c == '(') {
            if (in_period) throw parse_error("nested '(' in sequence");
            in_period = true;
            t.has_period = true;
            cur = &t.per;
            ++i;
            continue;
        }
        if (c == ')') {
            if (!in_period) throw parse_error("')' without '('");
            in_period = false;
            period_closed = true;
            ++i;
            continue;
        }
        if (c == '-') throw parse_error("negative digits are not allowed");
        if (c < '0' || c > '9')
            throw parse_error(std::string("stray character '") + c + "' in sequence");
        Digit v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + (text[i] - '0');
            if (v > (Digit{1} << 60)) throw parse_error("digit out of range");
            ++i;
        }
        cur->push_back(v);
    }
    if (in_period) throw parse_error("unterminated '(' in sequence");
    return t;
}

}  // namespace detail

// Parses a finite word: digits only, no parentheses.
inline DigitWord parse_word(const std::string& text) {
    auto t = detail::tokenize_sequence(text);
    if (t.has_period) throw parse_error("finite word must not contain a period");
    return t.pre;
}

// Parses an eventually periodic sequence; the period is mandatory.
inline EvPeriodicSeq parse_sequence(const std::string& text) {
    auto t = detail::tokenize_sequence(text);
    if (!t.has_period) throw parse_error("sequence needs a parenthesized period");
    if (t.per.empty()) throw parse_error("empty period");
    return EvPeriodicSeq(std::move(t.pre), std::move(t.per));
}

inline std::string word_str(const DigitWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

inline std::string EvPeriodicSeq::str() const {
    std::string s = word_str(pre_);
    if (!s.empty()) s += ' ';
    s += '(';
    s += word_str(per_);
    s += ')';
    return s;
}

}  // namespace negabeta
