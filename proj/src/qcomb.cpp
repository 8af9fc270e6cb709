#include "hopfforge/qcomb.hpp"

#include <stdexcept>

namespace hopfforge {

Scalar q_int(long n, const FieldMode& m) {
    Scalar num = Scalar::q_power(n, m) - Scalar::q_power(-n, m);
    Scalar den = Scalar::q_power(1, m) - Scalar::q_power(-1, m);
    return num / den;
}

Scalar q_factorial(long n, const FieldMode& m) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    Scalar r = Scalar::one(m);
    for (long k = 2; k <= n; ++k) r = r * q_int(k, m);
    return r;
}

Scalar q_binomial(long n, long j, const FieldMode& m) {
    if (j < 0 || n < j) throw std::invalid_argument("q_binomial: requires n >= j >= 0");
    if (m.is_root()) return q_binomial(n, j, FieldMode::generic()).specialize_at_root(m.l);
    // [n]!/([j]![n-j]!) computed as a falling product to keep factors small
    Scalar num = Scalar::one(m), den = Scalar::one(m);
    for (long r = 0; r < j; ++r) {
        num = num * q_int(n - r, m);
        den = den * q_int(j - r, m);
    }
    return num / den;
}

Scalar q_bracket_a(const Scalar& a, long n) {
    if (a.is_zero()) throw std::invalid_argument("q_bracket_a: a must be invertible");
    const FieldMode& m = a.mode();
    Scalar num = a * Scalar::q_power(n, m) - a.inverse() * Scalar::q_power(-n, m);
    Scalar den = Scalar::q_power(1, m) - Scalar::q_power(-1, m);
    return num / den;
}

Scalar q_factorial_a(const Scalar& a, long n) {
    if (n < 0) throw std::invalid_argument("q_factorial_a: negative argument");
    Scalar r = Scalar::one(a.mode());
    for (long k = 1; k <= n; ++k) r = r * q_bracket_a(a, k);
    return r;
}

Scalar q_binomial_a_shifted(const Scalar& a, long n, long j, long s) {
    if (j < 0) throw std::invalid_argument("q_binomial_a: requires j >= 0");
    if (n + s < 0) throw std::invalid_argument("q_binomial_a: shift must make n + s >= 0");
    const FieldMode& m = a.mode();
    Scalar ash = a * Scalar::q_power(-j - s, m);
    long nsh = n + j + s;
    if (nsh < j) throw std::logic_error("q_binomial_a: shifted index still below j");
    // [a;n over j] = prod_{r=0}^{j-1} [a; n-r] / [j]!
    Scalar num = Scalar::one(m);
    for (long r = 0; r < j; ++r) num = num * q_bracket_a(ash, nsh - r);
    return num / q_factorial(j, m);
}

Scalar q_binomial_a(const Scalar& a, long n, long j) {
    if (a.is_zero()) throw std::invalid_argument("q_binomial_a: a must be invertible");
    if (j < 0) throw std::invalid_argument("q_binomial_a: requires j >= 0");
    if (n >= j) return q_binomial_a_shifted(a, n, j, 0);
    return q_binomial_a_shifted(a, n, j, j - n);
}

Scalar zeta_sqrt(const Scalar& z) {
    const FieldMode& m = z.mode();
    if (!m.is_root()) throw std::invalid_argument("zeta_sqrt: root-of-unity mode required");
    if (m.l % 2 == 0) throw std::invalid_argument("zeta_sqrt: odd order required");
    auto k = z.as_zeta_power();
    if (!k) throw std::invalid_argument("zeta_sqrt: argument is not an l-th root of unity");
    long half = (static_cast<long>(m.l) + 1) / 2;
    return Scalar::q_power((*k * half) % m.l, m);
}

}  // namespace hopfforge
