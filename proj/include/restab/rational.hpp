#ifndef RESTAB_RATIONAL_HPP
#define RESTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace restab {

// All verdict-level arithmetic in this library is exact rational arithmetic.
// GMP supplies the bignum machinery; nothing on a verdict path may touch
// floating point (the test suite audits the sources for this).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

/// Parse "p", "-p" or "p/q" with nonzero q; throws CalcError(InputError).
Rational rat_parse(const std::string& text);

/// Canonical reduced, denominator-positive rendering: "5", "-3/2".
std::string rat_str(const Rational& x);

/// True when x is an integer.
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Floor of a rational as an Integer.
Integer rat_floor(const Rational& x);

/// Smallest integer d in [1, d_max] with d > x, or 0 if none.
long first_integer_above(const Rational& x, long d_max);

}  // namespace restab

#endif
