#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rcft {

/// Arbitrary-precision integer and rational (always in lowest terms).
using Integer = mpz_class;
using Rational = mpq_class;

/// p/q in lowest terms (mpq_class(p, q) alone does not canonicalize).
inline Rational make_rational(const Integer& p, const Integer& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// r mod 1, in [0, 1).
Rational frac(const Rational& r);

/// "p" or "p/q".
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q"; throws rcft::Error(Errc::parse) on bad input or q = 0.
Rational parse_rational(std::string_view text);

/// Converts an Integer known to fit in a signed 64-bit value.
long to_long(const Integer& z);

}  // namespace rcft
