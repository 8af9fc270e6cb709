// Presentations of the algebras and their PBW data.
//
// Six algebras share one engine: the generic algebra U over Q(q), its
// root-of-unity quotient u, the Borel halves of u, the rank-one subalgebra u1
// generated by E1, F1, K1, and the double crossproduct Dphi with doubled
// group-likes Kt1, Kt2.
//
// Elements are stored on the ordered PBW basis
//   F1^t1 F12^t2 F2^t3 K1^r1 K2^r2 (Kt1^c1 Kt2^c2) E1^s1 E12^s2 E2^s3
// with E12 = E1 E2 - q^-1 E2 E1 and F12 = F2 F1 - q F1 F2.
#pragma once

#include "hopfforge/field.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hopfforge {

enum class AlgebraKind { U, u, uGeq0, uLeq0, u1, Dphi };

std::string algebra_kind_name(AlgebraKind k);
AlgebraKind algebra_kind_from_name(const std::string& name);

struct AlgebraId {
    AlgebraKind kind = AlgebraKind::U;
    FieldMode mode;

    static AlgebraId make(AlgebraKind k, const FieldMode& m);

    bool is_quotient() const { return kind != AlgebraKind::U; }
    bool has_kt() const { return kind == AlgebraKind::Dphi; }
    int l() const { return mode.l; }
    bool operator==(const AlgebraId&) const = default;
};

// Generator letters; the *i variants are the inverses of the group-likes.
enum class Letter : int {
    F1, F12, F2, K1, K1i, K2, K2i, Kt1, Kt1i, Kt2, Kt2i, E1, E12, E2
};

std::string letter_name(Letter g);
// Position of a letter in the PBW order (inverse group-likes share the
// position of their base letter).
int letter_position(Letter g);
bool letter_legal(Letter g, const AlgebraId& A);

// Cartan matrix of type A2 (the two components of the datum share it).
inline constexpr int kCartan[2][2] = {{2, -1}, {-1, 2}};

struct PbwMonomial {
    std::array<int, 3> f{0, 0, 0};   // exponents of F1, F12, F2
    std::array<int, 2> k{0, 0};      // exponents of K1, K2
    std::array<int, 2> kt{0, 0};     // exponents of Kt1, Kt2 (Dphi only)
    std::array<int, 3> e{0, 0, 0};   // exponents of E1, E12, E2

    bool is_unit() const { return *this == PbwMonomial{}; }
    bool is_group_like() const {
        return f == std::array<int, 3>{0, 0, 0} && e == std::array<int, 3>{0, 0, 0};
    }
    int total_ef_degree() const {
        return f[0] + f[1] + f[2] + e[0] + e[1] + e[2];
    }

    auto operator<=>(const PbwMonomial&) const = default;

    std::string to_string(bool with_kt = false) const;
};

// Validity of a monomial's exponents inside a given algebra.
bool monomial_in_bounds(const PbwMonomial& m, const AlgebraId& A);

class Element {
public:
    explicit Element(AlgebraId A) : alg_(std::move(A)) {}

    static Element zero(const AlgebraId& A) { return Element(A); }
    static Element unit(const AlgebraId& A);
    static Element monomial(const AlgebraId& A, const PbwMonomial& m, Scalar c);
    // single-letter generator as an element
    static Element generator(const AlgebraId& A, Letter g);

    const AlgebraId& algebra() const { return alg_; }
    const std::map<PbwMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PbwMonomial& m, const Scalar& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    Element& operator+=(const Element& o);

    bool operator==(const Element& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    AlgebraId alg_;
    std::map<PbwMonomial, Scalar> terms_;  // lexicographic on (f, k, kt, e); no zero coefficients
};

// A scalar multiple of a word in the generator letters.
struct FreeWord {
    Scalar coeff;
    std::vector<Letter> letters;

    FreeWord() = default;
    FreeWord(Scalar c, std::vector<Letter> w) : coeff(std::move(c)), letters(std::move(w)) {}
};

// Letters of a PBW monomial in basis order (K exponents expand to repeated
// inverse letters when negative).
std::vector<Letter> monomial_letters(const PbwMonomial& m);

// Expansion of an element into words over the basic letters only: every E12
// and F12 occurrence is replaced by its defining combination.
std::vector<FreeWord> expand_to_basic_words(const Element& x);

}  // namespace hopfforge
