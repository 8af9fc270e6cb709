// Dense univariate polynomials over the rationals.
//
// Used in two roles: numerators/denominators of rational functions in q, and
// residue representatives modulo a cyclotomic polynomial.
#pragma once

#include "hopfforge/rational.hpp"

#include <vector>

namespace hopfforge {

class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) {
        if (c != 0) coeff_.push_back(std::move(c));
    }
    explicit Poly(std::vector<Rational> coeffs) : coeff_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    // c * x^e
    static Poly monomial(Rational c, int e);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero
    const Rational& operator[](int i) const;
    const std::vector<Rational>& coefficients() const { return coeff_; }
    const Rational& leading() const;

    // multiplicity of the root 0, i.e. the index of the lowest nonzero coefficient
    int low_order() const;

    bool operator==(const Poly& o) const { return coeff_ == o.coeff_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    // multiply by x^k (k >= 0)
    Poly shifted(int k) const;
    // divide by x^k, requires divisibility
    Poly unshifted(int k) const;

    // Euclidean division; remainder has degree < divisor degree.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    // exact division, throws if the remainder is nonzero
    static Poly exact_div(const Poly& a, const Poly& b);
    // monic gcd
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Rational> coeff_;  // coeff_[i] is the coefficient of x^i; no trailing zeros
};

// The l-th cyclotomic polynomial, computed by dividing x^l - 1 by the
// cyclotomic polynomials of the proper divisors of l. Results are cached.
const Poly& cyclotomic(int l);

}  // namespace hopfforge
