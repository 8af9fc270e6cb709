// Verma modules realized exactly on finitely supported vectors over the free
// negative-part basis F1^t1 F12^t2 F2^t3 . v, together with the
// highest-weight machinery: the canonical singular vectors v_n, filtration
// reductions, E1-kernels per weight, and the isomorphism checks for the
// filtration components.
#pragma once

#include "hopfforge/straighten.hpp"

#include <array>
#include <map>
#include <optional>

namespace hopfforge {

// Action of the group-likes on a one-dimensional weight line.
struct Character {
    Scalar k1, k2;

    static Character make(const Scalar& k1, const Scalar& k2);
    const FieldMode& mode() const { return k1.mode(); }
    bool operator==(const Character& o) const { return k1 == o.k1 && k2 == o.k2; }
    std::string to_string() const;
};

// Character of the weight m1 w1 + m2 w2: K_i act by q^{(lambda, alpha_i)}.
Character weight_character(long m1, long m2, const FieldMode& m);

using FExp = std::array<int, 3>;  // exponents of F1, F12, F2

class FreeVermaVector {
public:
    FreeVermaVector(AlgebraId alg, Character lambda);

    static FreeVermaVector cyclic(const AlgebraId& alg, const Character& lambda);

    const AlgebraId& algebra() const { return alg_; }
    const Character& character() const { return lambda_; }
    const std::map<FExp, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FExp& t, const Scalar& c);
    FreeVermaVector operator+(const FreeVermaVector& o) const;
    FreeVermaVector operator-(const FreeVermaVector& o) const;
    FreeVermaVector scaled(const Scalar& c) const;
    bool operator==(const FreeVermaVector& o) const;

    std::string to_string() const;

private:
    AlgebraId alg_;       // U (either mode) or u (root mode)
    Character lambda_;
    std::map<FExp, Scalar> terms_;
};

// Exact action: straighten g . F^t in the algebra, kill terms with E-part,
// evaluate group-likes through the character.
FreeVermaVector verma_act(Letter g, const FreeVermaVector& w);
FreeVermaVector verma_act_word(const std::vector<Letter>& word, const FreeVermaVector& w);
FreeVermaVector verma_act_element(const Element& x, const FreeVermaVector& w);

// Weight of the basis vector F^t . v.
Character basis_weight(const Character& lambda, const FExp& t, const FieldMode& m);
// Weight of a vector, when all of its support shares one.
std::optional<Character> vector_weight(const FreeVermaVector& w);

// The singular vector v_n = sum_i a_i F1^i F2^i F12^(n-i) . v (generic mode).
FreeVermaVector hw_vector_vn(const Character& lambda, int n);

// True iff w is a simultaneous K-eigenvector annihilated by E1 and E2.
bool check_highest_weight(const FreeVermaVector& w);

// Reduction modulo the span of basis vectors with t2 + t3 >= n + 1 (that
// span is a submodule, so acting first and reducing after is exact).
FreeVermaVector reduce_filtration(const FreeVermaVector& w, int n);

// PBW exponents of the weight space with indices (i, j): t1 + t2 = i,
// t2 + t3 = j.
std::vector<FExp> weight_space_exponents(int i, int j);

// The vectors F1^(i-s) F2^(j-s) . v_s, s = 0..min(i,j), spanning that space.
std::vector<FreeVermaVector> weight_space_vn_family(const Character& lambda, int i, int j);

// Per-weight kernels of E1 within total F-degree i + j <= cap, expressed in
// the v_s family coordinates.
struct E1KernelEntry {
    int i, j;
    std::vector<std::vector<Scalar>> vn_coords;  // kernel basis in v_s coordinates
};
std::vector<E1KernelEntry> kernel_of_E1_in_verma(const Character& lambda, int cap);

// Checks that u_i -> F1^i F2^t3 . v_t2 intertwines the actions of E1, E2,
// F1, F2, K1, K2 modulo the next filtration step, against the shifted
// character lambda' = (q^(t3-t2) lambda1, q^(-t2-2t3) lambda2), for
// 0 <= i <= window. Returns the shifted character.
bool check_filtration_component(const Character& lambda, int t2, int t3, int window,
                                Character* lambda_out = nullptr);

}  // namespace hopfforge
