#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sl2orbit {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) as long as canonicalize() is called after raw
// construction; all helpers below do so.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

// "p" when integral, "p/q" otherwise.
inline std::string format_rational(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit a machine integer");
    return r.get_num().get_si();
}

}  // namespace sl2orbit
