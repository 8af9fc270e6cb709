// Finite modules given by exact generator matrices: the simple modules of U
// and u, Verma modules of u, tensor products along the coproduct, highest
// weight extraction, relation checking, Clebsch-Gordan decomposition, and
// the central-twist pullbacks along pi_z.
#pragma once

#include "hopfforge/matrix.hpp"
#include "hopfforge/morphisms.hpp"
#include "hopfforge/verma.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfforge {

struct MatrixModule {
    AlgebraId alg;
    std::vector<std::string> basis;
    std::map<Letter, Matrix> action;  // keyed by E1, E2, F1, F2, K1, K2 (and Kt1, Kt2)

    size_t dim() const { return basis.size(); }
    const Matrix& mat(Letter g) const;
    // derived root-vector matrices
    Matrix e12() const;
    Matrix f12() const;
    // evaluate any letter, including inverses and composites
    Matrix letter_matrix(Letter g) const;
    // apply an element of the algebra to a coordinate vector
    std::vector<Scalar> act(const Element& x, const std::vector<Scalar>& v) const;
};

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Every defining relation of the module's algebra as an exact matrix identity.
AxiomReport module_axiom_check(const MatrixModule& M);

// The (m1+1)-dimensional simple quotient L(lambda) for lambda1 = eps q^m1
// (generic mode): K1 u_j = lambda1 q^-2j u_j, K2 u_j = lambda2 q^j u_j,
// F1 u_j = u_j+1, E1 u_j = [j][lambda1; 1-j] u_j-1, E2 = F2 = 0.
MatrixModule build_L(const Character& lambda);

// The 2-dimensional indecomposable with E's acting by zero and F2 v1 = v2.
MatrixModule build_V_indecomposable(int eps1, int eps2, const Scalar& a);

// The simple u-module V(m1, m2) on w_0..w_m1.
MatrixModule build_V_u(int m1, int m2, int l);

// The l^3-dimensional Verma module of u with highest weight (q^m1, q^m2).
MatrixModule build_verma_u(int m1, int m2, int l);

// Tensor product along the coproduct (basis = ordered pairs).
MatrixModule tensor_module(const MatrixModule& M, const MatrixModule& N);

struct HighestWeightSpace {
    Character weight;
    std::vector<std::vector<Scalar>> vectors;
};

// Per weight space (the K-matrices must be diagonal), the joint kernel of E1
// and E2.
std::vector<HighestWeightSpace> find_hw_vectors(const MatrixModule& M);

// Dimension of the submodule generated by the given vectors.
size_t generated_submodule_dim(const MatrixModule& M, std::vector<std::vector<Scalar>> seed);

// Simple iff there is exactly one highest-weight line and it generates.
bool is_simple_module(const MatrixModule& M);

// Classifier for finite simple highest-weight modules over U: returns the
// highest weight when M is simple and matches the corresponding induced
// quotient (dimension m1 + 1 for lambda1 = eps q^m1), nothing otherwise.
std::optional<Character> classify_simple_highest_weight(const MatrixModule& M);

struct DecompositionReport {
    std::vector<std::pair<Character, int>> factors;  // highest weight, multiplicity
    std::vector<size_t> dims;                        // dim of each simple factor
    bool verified = false;                           // weights, multiplicities, dimension sum
};

// L(lambda) (x) L(mu) for lambda1 = eps1 q^m, mu1 = eps2 q^n; the expected
// factors have highest weights (eps1 eps2 q^(m+n-2i), q^i lambda2 mu2).
DecompositionReport clebsch_gordan(const Character& lambda, const Character& mu);

// Pullback of a u-module along pi_z (a Dphi module), and the check that it
// equals the one-dimensional twist eps_z (x) M_1 entrywise.
MatrixModule pullback_z(const MatrixModule& M, const CentralParameter& z);
bool twist_check(const MatrixModule& M, const CentralParameter& z);

}  // namespace hopfforge
