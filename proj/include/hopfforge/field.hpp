// The exact coefficient field.
//
// Two modes are supported and selected per value:
//   Generic      -- rational functions in the parameter q over the rationals,
//                   kept as a reduced fraction of polynomials with monic
//                   denominator (unique representative).
//   RootOfUnity  -- the cyclotomic field Q(zeta_l) = Q[x]/Phi_l(x) with q a
//                   primitive l-th root of unity; values are residue vectors
//                   of length deg Phi_l.
//
// Every operation canonicalizes, so equality is plain representation equality.
#pragma once

#include "hopfforge/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hopfforge {

struct FieldMode {
    enum class Kind { Generic, RootOfUnity };
    Kind kind = Kind::Generic;
    int l = 0;  // order of the root of unity; meaningful only in RootOfUnity mode

    static FieldMode generic() { return FieldMode{Kind::Generic, 0}; }
    static FieldMode root_of_unity(int l);

    bool is_generic() const { return kind == Kind::Generic; }
    bool is_root() const { return kind == Kind::RootOfUnity; }
    // q has infinite multiplicative order in generic mode, order l otherwise
    bool operator==(const FieldMode&) const = default;
};

class Scalar {
public:
    Scalar() : mode_(FieldMode::generic()) {}  // generic zero

    static Scalar zero(const FieldMode& m) { return Scalar(m); }
    static Scalar one(const FieldMode& m) { return from_rational(Rational(1), m); }
    static Scalar from_int(long n, const FieldMode& m) { return from_rational(Rational(n), m); }
    static Scalar from_rational(Rational r, const FieldMode& m);
    static Scalar q(const FieldMode& m) { return q_power(1, m); }
    static Scalar q_power(long e, const FieldMode& m);
    // zeta_l^k (RootOfUnity mode only)
    static Scalar zeta_power(long k, const FieldMode& m);
    // Generic mode: build from Laurent data; negative exponents are cleared by a
    // single monomial shift before reduction.
    static Scalar from_laurent_fraction(const std::vector<std::pair<long, Rational>>& num,
                                        const std::vector<std::pair<long, Rational>>& den,
                                        const FieldMode& m);

    const FieldMode& mode() const { return mode_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    bool operator==(const Scalar& o) const { return mode_ == o.mode_ && num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // arbitrary total order (for deterministic sorting, no numeric meaning)
    static int compare(const Scalar& a, const Scalar& b);

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool is_rational() const;
    Rational as_rational() const;  // throws when not rational

    // Generic mode: recognize eps * q^m with eps in {+1,-1}; returns (eps, m).
    std::optional<std::pair<int, long>> as_signed_q_power() const;
    // RootOfUnity mode: recognize zeta^k; returns k in [0, l).
    std::optional<int> as_zeta_power() const;

    // Map a generic value into Q(zeta_l) by q |-> zeta_l (the denominator must
    // not vanish there).
    Scalar specialize_at_root(int l) const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    std::string to_string() const;

private:
    explicit Scalar(FieldMode m) : mode_(std::move(m)) {}
    void canonicalize();
    static void require_same_mode(const Scalar& a, const Scalar& b);

    FieldMode mode_;
    // Generic: canonical fraction num_/den_ (den_ monic, gcd(num_, den_) = 1).
    // RootOfUnity: num_ is the residue modulo Phi_l, den_ = 1.
    Poly num_;
    Poly den_ = Poly::one();
};

inline Scalar operator*(const Rational& r, const Scalar& s) {
    return Scalar::from_rational(r, s.mode()) * s;
}

// Square root within Q(zeta_l) of values of the restricted shape r * zeta^k
// (r rational) and, for prime l, r * g * zeta^k with g the quadratic Gauss sum.
// Returns nothing when the value is not detected as a square of that shape.
std::optional<Scalar> cyclotomic_sqrt_restricted(const Scalar& z);

}  // namespace hopfforge
