// Group-algebra idempotents of u, the closed-form straightening of F^m E^s,
// the quadratic equation system whose solutions are the idempotents
// sum_p a_p e_i E^p F^p of the rank-one subalgebra u1, its recursive solver,
// primitivity certification through the trace-form radical, the resulting
// decomposition of the regular module of u1, and the weight congruences that
// locate every simple inside the Verma module with trivial highest weight.
#pragma once

#include "hopfforge/matrix.hpp"
#include "hopfforge/straighten.hpp"

#include <optional>
#include <vector>

namespace hopfforge {

// e_i(K1) = (1/l) sum_s (q^i K1)^s inside u1.
Element e_K1(int i, int l);
// e_j(K2) = (1/l) sum_s (q^j K2)^s inside u.
Element e_K2(int j, int l);
// e_{i,j} = (1/l^2) sum_{s,t} q^{is+jt} K1^s K2^t inside u; the full family
// indexed over Z_l x Z_l, returned in row-major (i, j) order.
std::vector<Element> group_idempotents(int l);
// inclusion of u1 into u
Element embed_u1_in_u(const Element& x);

// Closed form of the straightened product F^m E^s (single root vector pair):
//   sum_j [j]! [m over j][s over j] E^(s-j) prod_r [K^-1; r] F^(m-j),
// the bracket product running over r = j-m-s+1 .. 2j-m-s. Valid in U and u1.
Element closed_form_FmEs(const AlgebraId& A, int m, int s);

// least non-negative residue of n mod l
int min_residue(long n, int l);

// a_{m,s,j} = [j]!^2 [m over j][s over j][residue(m+s+i) over j], the last
// factor zero when the residue drops below j.
Scalar structure_constant(int m, int s, int j, int i, int l);

struct QuadraticTerm {
    int m, s, j;
    Scalar coeff;
};
struct QuadraticSystem {
    int i = 0, l = 0;
    std::vector<std::vector<QuadraticTerm>> equations;  // index p: a_p = sum coeff a_m a_s
};
QuadraticSystem build_system(int i, int l);

struct IdempotentSolution {
    int i = 0;
    std::vector<Scalar> coeffs;  // (a_0, ..., a_{l-1})
    Element element;             // sum_p a_p e_i E^p F^p in u1
    bool verified = false;       // element * element == element
};

// Complete solution set of the equation system, found by solving the
// univariate quadratic for a_p over Q(zeta_l) step by step. Roots are kept
// only when they lie in the field; square-root detection uses the restricted
// search of cyclotomic_sqrt_restricted. Odd l <= cap required.
std::vector<IdempotentSolution> solve_idempotents(int i, int l);

Element idempotent_element(int i, const std::vector<Scalar>& coeffs, int l);

// Left-multiplication picture of u1 on its PBW basis.
struct RegularRep {
    AlgebraId alg;
    std::vector<PbwMonomial> basis;
    std::vector<Scalar> to_coords(const Element& x) const;
    Matrix left_multiplication(const Element& x) const;
};
RegularRep regular_representation(int l);

// Basis of the radical (the kernel of the trace form of the regular
// representation; exact in characteristic zero).
struct RadicalData {
    RegularRep rep;
    std::vector<Element> radical_basis;
    std::vector<std::vector<Scalar>> radical_coords;
};
RadicalData radical_trace_form(int l);

// dim(e A e) - dim(e rad(A) e) == 1 for idempotent e of u1.
bool is_primitive(const Element& e, const RadicalData& rad);
bool is_primitive(const Element& e);  // recomputes the radical

struct RegularSummand {
    int i = 0;                    // group-idempotent sector
    std::vector<Scalar> coeffs;
    Element idempotent;
    size_t left_ideal_dim = 0;
    bool primitive = false;
};
struct RegularDecomposition {
    std::vector<RegularSummand> summands;
    bool orthogonal = false;
    bool complete = false;  // summands add up to 1
};
// Orthogonal primitive decomposition of 1 in u1 assembled from the solver
// branches (one complementary pair per sector); desk scale l = 3.
RegularDecomposition decompose_regular_u1(int l);

struct CongruenceSolution {
    long t2 = 0, t3 = 0;
};
// (t2, t3) with -t2 + t3 = m1 and -t2 - 2 t3 = m2 mod l, built from the
// particular solutions for the two unit targets; requires gcd(l, 3) = 1.
CongruenceSolution congruence_solve(long m1, long m2, int l);

}  // namespace hopfforge
