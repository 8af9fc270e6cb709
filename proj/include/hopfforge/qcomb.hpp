// q-integers, q-factorials, Gaussian binomials, and the shifted bracket
// [a;n] = (a q^n - a^-1 q^-n)/(q - q^-1) together with its factorials and
// binomial coefficients.
#pragma once

#include "hopfforge/field.hpp"

namespace hopfforge {

// [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n]
Scalar q_int(long n, const FieldMode& m);

// [n]! = [n][n-1]...[1], [0]! = 1; n must be non-negative
Scalar q_factorial(long n, const FieldMode& m);

// Gaussian binomial [n over j] for n >= j >= 0. In root-of-unity mode the
// value is the specialization of the generic Laurent polynomial at q = zeta,
// which stays well defined when intermediate factorials vanish.
Scalar q_binomial(long n, long j, const FieldMode& m);

// [a;n] for invertible a
Scalar q_bracket_a(const Scalar& a, long n);

// [a;n]! for n >= 0
Scalar q_factorial_a(const Scalar& a, long n);

// [a;n over j] for j >= 0. For n < j the value is defined through the shift
// a -> a q^{-j-s}, n -> n+j+s with any s making n+s >= 0; the result does not
// depend on the choice of s (see q_binomial_a_shifted).
Scalar q_binomial_a(const Scalar& a, long n, long j);

// The shifted evaluation with an explicit s (n + s >= 0 required); exposed so
// the s-independence can be checked directly.
Scalar q_binomial_a_shifted(const Scalar& a, long n, long j, long s);

// Square root of an l-th root of unity for odd l, normalized so that the
// square root of zeta^k is zeta^{k(l+1)/2}; in particular 1 maps to 1.
Scalar zeta_sqrt(const Scalar& z);

}  // namespace hopfforge
