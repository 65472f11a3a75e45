#pragma once

#include <gmpxx.h>

#include <string>

namespace dbx {

// Exact coefficient arithmetic. Rationals are kept canonical by GMP:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, unsigned long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "3", "-7/4". Denominator printed only when != 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

} // namespace dbx
