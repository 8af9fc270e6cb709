// Exact rational arithmetic (GMP-backed) and small number-theoretic helpers.
#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace hopfforge {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or just "p" when q = 1), matching the wire format.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

// Square root of a rational, when it is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

// Extended gcd over machine integers: returns g and x,y with a*x + b*y = g.
long ext_gcd(long a, long b, long& x, long& y);

// Least non-negative residue.
inline long mod_nonneg(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace hopfforge
