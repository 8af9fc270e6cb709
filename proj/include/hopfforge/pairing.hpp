// The skew Hopf pairing between the Borel halves of u, its convolution
// inverse, and the double crossproduct multiplication built from it.
//
// The pairing is fixed on generators by
//   phi(K_i, K_j) = q^{a_ij},  phi(K_i, K_j^-1) = q^{-a_ij},
//   phi(E_i, F_j) = delta_ij delta_i1 * c,
//   phi(x, y) = 0 for monomials of different Q-degree,
// and extended to words by the skew-pairing axioms
//   phi(ab, x) = sum phi(a, x_(1)) phi(b, x_(2)),
//   phi(a, xy) = sum phi(a_(1), y) phi(a_(2), x).
// Two normalizations of c are supported: the printed value 1/(q^2 - 1), and
// the variant 1/(q - q^-1) that makes the crossproduct reproduce the
// presentation commutator [E1, F1] = (K1 - Kt1^-1)/(q - q^-1) exactly.
#pragma once

#include "hopfforge/coalgebra.hpp"

#include <map>

namespace hopfforge {

enum class PairingNormalization {
    Printed,     // phi(E1, F1) = 1/(q^2 - 1)
    Presentation // phi(E1, F1) = 1/(q - q^-1)
};

// Values are memoized per instance; share one instance per thread.
class SkewPairing {
public:
    explicit SkewPairing(int l,
                         PairingNormalization norm = PairingNormalization::Printed);

    const FieldMode& mode() const { return mode_; }
    PairingNormalization normalization() const { return norm_; }

    // phi on elements of uGeq0 x uLeq0.
    Scalar pair(const Element& x, const Element& y) const;
    // phi^-1(x, y) = phi(S(x), y).
    Scalar pair_inverse(const Element& x, const Element& y) const;

    // Double crossproduct multiplication on leg pairs:
    // (a (x) x)(b (x) y) = sum phi(b1, x1) a b2 (x) x2 y phi^-1(b3, x3).
    TensorElement double_multiply(const Element& a, const Element& x, const Element& b,
                                  const Element& y) const;
    TensorElement double_multiply(const TensorElement& p, const TensorElement& pp) const;

private:
    Scalar pair_monomials(const PbwMonomial& x, const PbwMonomial& y) const;
    Scalar pair_words(const std::vector<Letter>& left, const std::vector<Letter>& right) const;
    Scalar pair_letter_word(Letter g, const std::vector<Letter>& right) const;
    Scalar pair_letters(Letter g, Letter h) const;

    FieldMode mode_;
    PairingNormalization norm_;
    AlgebraId up_, low_;
    Scalar e1f1_;
    mutable std::map<std::pair<std::vector<Letter>, std::vector<Letter>>, Scalar> memo_;
    mutable std::map<std::pair<PbwMonomial, PbwMonomial>, Scalar> monomial_memo_;
};

}  // namespace hopfforge
