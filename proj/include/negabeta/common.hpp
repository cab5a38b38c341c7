#pragma once
// common.hpp - Numeric aliases, error types and small rational helpers shared
// by every module of the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace negabeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Digit = std::int64_t;

// Malformed text input (sequence strings, base specs, CLI arguments).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input value violates an operation's precondition.
struct invalid_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A floor/sign decision could not be made at the configured precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size or depth cap was exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested combination of inputs is outside the supported fragment.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cooperative deadline expired.
struct deadline_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int floor_rat(const Rat& x) {
    Int n = numerator(x);
    Int d = denominator(x);  // always > 0
    Int q = n / d;           // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

// 2^k for possibly negative k.
inline Rat pow2(long k) {
    if (k >= 0) return Rat(Int(1) << k);
    return Rat(Int(1), Int(1) << (-k));
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline int sign_of(const Rat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

// Parses an exact decimal such as "-12", "3.25", "1e-12" or "2.5e3".
inline Rat parse_decimal_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    Int mantissa = 0;
    long frac_digits = 0;
    bool any_digit = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
        mantissa = mantissa * 10 + (s[i] - '0');
        any_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
            mantissa = mantissa * 10 + (s[i] - '0');
            ++frac_digits;
            any_digit = true;
        }
    }
    if (!any_digit) throw parse_error("no digits in number: " + s);
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        if (i >= s.size()) throw parse_error("truncated exponent: " + s);
        long e = 0;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
            e = e * 10 + (s[i] - '0');
            if (e > 1000000) throw parse_error("exponent out of range: " + s);
        }
        exp10 = eneg ? -e : e;
    }
    if (i != s.size()) throw parse_error("trailing characters in number: " + s);
    Rat r(mantissa);
    long net = exp10 - frac_digits;
    Int ten = 10;
    if (net > 0) {
        r *= Rat(boost::multiprecision::pow(ten, static_cast<unsigned>(net)));
    } else if (net < 0) {
        r /= Rat(boost::multiprecision::pow(ten, static_cast<unsigned>(-net)));
    }
    return neg ? -r : r;
}

// Fixed-point decimal rendering, rounded to nearest (ties away from zero).
inline std::string decimal_string(const Rat& x, unsigned digits) {
    Int scale = boost::multiprecision::pow(Int(10), digits);
    Rat scaled = x * Rat(scale);
    Int n = numerator(scaled);
    Int d = denominator(scaled);
    Int q = n / d;
    Int r = n - q * d;
    if (r < 0) r = -r;
    if (2 * r >= d) q += (n < 0 ? -1 : 1);
    bool neg = q < 0;
    if (neg) q = -q;
    std::string s = q.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (neg) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

}  // namespace negabeta
