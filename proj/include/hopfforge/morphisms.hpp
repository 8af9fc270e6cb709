// Algebra maps out of the double crossproduct: the collapse pi (Kt -> K), the
// central-twist family pi_z, and the one-dimensional character eps_z.
#pragma once

#include "hopfforge/straighten.hpp"

#include <map>

namespace hopfforge {

// A pair of l-th roots of unity acting as the central scalars of K_i Kt_i^-1.
struct CentralParameter {
    Scalar z1, z2;

    // validates z_i^l = 1 against the mode
    static CentralParameter make(const Scalar& z1, const Scalar& z2);
    static CentralParameter trivial(const FieldMode& m);
    const FieldMode& mode() const { return z1.mode(); }
};

// Defining relations of the double crossproduct presentation, as pairs of
// word sums (lhs, rhs); a map out of Dphi is well defined iff it equates all
// of them. The list contains the group-like commutations and inverses, the
// conjugation relations, the E/F commutators, the Serre relations inherited
// from the Borel halves, and the l-th power relations.
struct RelationPair {
    std::string name;
    std::vector<FreeWord> lhs, rhs;
};
std::vector<RelationPair> dphi_relations(const FieldMode& m);

// Defining relations of any of the algebras (the Dphi list for Dphi); for
// quotient algebras this includes the l-th power relations of all six root
// vectors and of the group-likes.
std::vector<RelationPair> algebra_relations(const AlgebraId& A);

// pi: Dphi -> u, identity on E, F, K and Kt_i -> K_i.
Element project_pi(const Element& d);

// pi_z: Dphi -> u with
//   E1 -> z1^(1/2) E1, K1 -> z1^(1/2) K1, Kt1 -> z1^(-1/2) K1,
//   E2 -> E2, K2 -> K2, Kt2 -> z2^-1 K2, F_i -> F_i  (odd l).
Element pi_z(const Element& d, const CentralParameter& z);

// Verifies that every defining relation of Dphi maps to zero in u under pi_z.
bool pi_z_well_defined(const CentralParameter& z, const FieldMode& m);

// eps_z: the one-dimensional representation with eps_z(E_i) = eps_z(F_i) = 0,
// eps_z(K1) = z1^(1/2), eps_z(Kt1) = z1^(-1/2), eps_z(K2) = 1,
// eps_z(Kt2) = z2^-1. Returned as the letter-value table.
std::map<Letter, Scalar> eps_z(const CentralParameter& z);

// Value of eps_z on an element of Dphi.
Scalar eps_z_value(const Element& d, const CentralParameter& z);

// Verifies that eps_z equates both sides of every defining relation.
bool eps_z_well_defined(const CentralParameter& z, const FieldMode& m);

}  // namespace hopfforge
