// Shared generators for randomized checks.
#pragma once

#include "hopfforge/straighten.hpp"

#include <random>

namespace hopfforge::testing {

inline Scalar random_scalar(const FieldMode& m, std::mt19937& rng, bool nonzero = false) {
    auto small = [&](int span) { return static_cast<long>(rng() % (2 * span + 1)) - span; };
    Scalar s = Scalar::zero(m);
    for (int t = 0; t < 3; ++t) {
        Rational r(small(6), 1 + static_cast<long>(rng() % 5));
        r.canonicalize();
        s += Scalar::from_rational(r, m) * Scalar::q_power(small(4), m);
    }
    if (nonzero && s.is_zero()) s = Scalar::one(m) + Scalar::q_power(small(3), m) * Scalar::q_power(1, m);
    if (nonzero && s.is_zero()) s = Scalar::one(m);
    return s;
}

// Random monomial with E/F exponents bounded by maxdeg (and the algebra's own
// bounds); K exponents small.
inline PbwMonomial random_monomial(const AlgebraId& A, std::mt19937& rng, int maxdeg) {
    const int l = A.is_quotient() ? A.l() : 0;
    auto expo = [&](int cap) {
        int hi = A.is_quotient() ? std::min(cap, l - 1) : cap;
        return static_cast<int>(rng() % (hi + 1));
    };
    PbwMonomial m;
    bool has_f = A.kind != AlgebraKind::uGeq0;
    bool has_e = A.kind != AlgebraKind::uLeq0;
    bool rank1 = A.kind == AlgebraKind::u1;
    int budget = maxdeg;
    auto draw = [&](int& slot) {
        int e = std::min(budget, static_cast<int>(rng() % (maxdeg + 1)));
        if (A.is_quotient()) e = std::min(e, l - 1);
        slot = e;
        budget -= e;
    };
    if (has_f) {
        draw(m.f[0]);
        if (!rank1) {
            draw(m.f[1]);
            draw(m.f[2]);
        }
    }
    if (has_e) {
        draw(m.e[0]);
        if (!rank1) {
            draw(m.e[1]);
            draw(m.e[2]);
        }
    }
    if (A.is_quotient()) {
        m.k[0] = expo(l - 1);
        if (!rank1) m.k[1] = expo(l - 1);
        if (A.has_kt()) {
            m.kt[0] = expo(l - 1);
            m.kt[1] = expo(l - 1);
        }
    } else {
        m.k[0] = static_cast<int>(rng() % 5) - 2;
        m.k[1] = static_cast<int>(rng() % 5) - 2;
    }
    return m;
}

inline Element random_element(const AlgebraId& A, std::mt19937& rng, int maxdeg, int terms) {
    Element x(A);
    for (int t = 0; t < terms; ++t) {
        Scalar c = random_scalar(A.mode, rng);
        x.add_term(random_monomial(A, rng, maxdeg), c);
    }
    return x;
}

}  // namespace hopfforge::testing
