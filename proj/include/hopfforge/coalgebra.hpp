// Coalgebra structure: coproduct, counit, antipode, and tensor-square /
// tensor-cube elements with legwise normalized multiplication.
//
// Generator coproducts: Delta(E_i) = K_i (x) E_i + E_i (x) 1,
// Delta(F_i) = 1 (x) F_i + F_i (x) K_i^-1 (with Kt_i^-1 in the double
// crossproduct), group-likes are grouplike. Antipode: S(E_i) = -K_i^-1 E_i,
// S(F_i) = -F_i K_i (resp. -F_i Kt_i), S inverts group-likes.
#pragma once

#include "hopfforge/straighten.hpp"

#include <map>

namespace hopfforge {

class TensorElement {
public:
    TensorElement(AlgebraId left, AlgebraId right)
        : left_(std::move(left)), right_(std::move(right)) {}

    static TensorElement tensor(const Element& a, const Element& b);

    const AlgebraId& left_algebra() const { return left_; }
    const AlgebraId& right_algebra() const { return right_; }
    const std::map<std::pair<PbwMonomial, PbwMonomial>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PbwMonomial& a, const PbwMonomial& b, const Scalar& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;  // legwise product
    TensorElement scaled(const Scalar& c) const;
    bool operator==(const TensorElement& o) const {
        return left_ == o.left_ && right_ == o.right_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    AlgebraId left_, right_;
    std::map<std::pair<PbwMonomial, PbwMonomial>, Scalar> terms_;
};

class Tensor3Element {
public:
    explicit Tensor3Element(AlgebraId A) : alg_(std::move(A)) {}
    const std::map<std::tuple<PbwMonomial, PbwMonomial, PbwMonomial>, Scalar>& terms() const {
        return terms_;
    }
    void add_term(const PbwMonomial& a, const PbwMonomial& b, const PbwMonomial& c,
                  const Scalar& s);
    bool operator==(const Tensor3Element& o) const {
        return alg_ == o.alg_ && terms_ == o.terms_;
    }
    const AlgebraId& algebra() const { return alg_; }

private:
    AlgebraId alg_;
    std::map<std::tuple<PbwMonomial, PbwMonomial, PbwMonomial>, Scalar> terms_;
};

TensorElement comultiply(const Element& a);
Scalar counit(const Element& a);
Element antipode(const Element& a);

// (Delta (x) id) Delta and (id (x) Delta) Delta.
Tensor3Element comultiply_left(const Element& a);
Tensor3Element comultiply_right(const Element& a);

// Contractions used by the Hopf-axiom checks.
Element counit_contract_left(const TensorElement& t);    // (eps (x) id)
Element counit_contract_right(const TensorElement& t);   // (id (x) eps)
Element multiply_contract(const TensorElement& t, bool antipode_left, bool antipode_right);

}  // namespace hopfforge
