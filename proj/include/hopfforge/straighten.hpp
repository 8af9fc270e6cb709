// The straightening engine: normal forms on the PBW basis and the product.
//
// Rewriting moves group-likes right past F's, E-letters right past the
// group-likes, and E-letters past F-letters, and sorts the E- and F-blocks
// internally; each step strictly decreases the measure (E-before-F
// inversions, block inversions, word length) lexicographically, so the
// system terminates. Quotient algebras additionally kill l-th powers of the
// root vectors and reduce group-like exponents mod l.
#pragma once

#include "hopfforge/algebra.hpp"

#include <functional>

namespace hopfforge {

// Unique PBW expansion of a word.
Element normal_form(const FreeWord& w, const AlgebraId& A);
Element normal_form(const std::vector<FreeWord>& ws, const AlgebraId& A);

// Bilinear extension of the straightened concatenation product.
Element multiply(const Element& a, const Element& b);

// True when x commutes with every generator of its algebra.
bool central_check(const Element& x);

// Q-degree of a Borel monomial: coefficients of (alpha1, alpha2).
std::pair<int, int> grade(const PbwMonomial& m, const AlgebraId& A);

// Number of PBW basis monomials. Quotient algebras are finite; U needs an
// explicit per-exponent cap (F/E exponents in [0,cap], K exponents in
// [-cap,cap]).
unsigned long long basis_count(const AlgebraId& A, int cap = -1);
void for_each_basis_monomial(const AlgebraId& A,
                             const std::function<void(const PbwMonomial&)>& fn, int cap = -1);

// x_alpha x_beta^N = q_ab^N x_beta^N x_alpha for root vectors, with q_ab from
// the characters of the datum; checks that the difference straightens to zero.
bool qcommutator_check(const AlgebraId& A, Letter alpha, Letter beta, long N);

// The group-algebra bracket [K^-1; r] = (K^-1 q^r - K q^-r)/(q - q^-1)
// (or with K in place of K^-1 when inverted = false), expanded into two
// group-like monomials. which selects K1 or K2.
Element group_bracket(const AlgebraId& A, int which, bool inverted, long r);

// E1^a E12^b E2^c (or the F version) as an element.
Element e_power_monomial(const AlgebraId& A, int s1, int s2, int s3);
Element f_power_monomial(const AlgebraId& A, int t1, int t2, int t3);

}  // namespace hopfforge
