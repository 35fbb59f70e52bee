// Exact arbitrary-precision rational and integer types.
//
// Everything downstream (series coefficients, Euler-class ratios, Bott
// residues) is computed in these types; no floating point is used anywhere
// in the library.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qdt {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds a reduced rational with positive denominator.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical rendering: "n" when the denominator is 1, otherwise "n/d".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Accepts "n" or "n/d"; result is reduced with positive denominator.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_even_integer(const Rational& r) {
    return is_integer(r) && mpz_even_p(r.get_num().get_mpz_t());
}

}  // namespace qdt
