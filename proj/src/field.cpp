#include "hopfforge/field.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfforge {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    const Integer& n = r.get_num();
    const Integer& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rational root(sn, sd);
    root.canonicalize();
    return root;
}

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

FieldMode FieldMode::root_of_unity(int l) {
    if (l < 3) throw std::invalid_argument("FieldMode: root-of-unity order must be at least 3");
    return FieldMode{Kind::RootOfUnity, l};
}

void Scalar::require_same_mode(const Scalar& a, const Scalar& b) {
    if (!(a.mode_ == b.mode_)) throw std::invalid_argument("Scalar: mixed field modes");
}

void Scalar::canonicalize() {
    if (mode_.is_root()) {
        const Poly& phi = cyclotomic(mode_.l);
        if (num_.degree() >= phi.degree()) {
            Poly q, r;
            Poly::divmod(num_, phi, q, r);
            num_ = std::move(r);
        }
        den_ = Poly::one();
        return;
    }
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::from_rational(Rational r, const FieldMode& m) {
    Scalar s(m);
    s.num_ = Poly(std::move(r));
    return s;
}

Scalar Scalar::q_power(long e, const FieldMode& m) {
    Scalar s(m);
    if (m.is_root()) {
        long k = mod_nonneg(e, m.l);
        s.num_ = Poly::monomial(Rational(1), static_cast<int>(k));
        s.canonicalize();
        return s;
    }
    if (e >= 0) {
        s.num_ = Poly::monomial(Rational(1), static_cast<int>(e));
    } else {
        s.num_ = Poly::one();
        s.den_ = Poly::monomial(Rational(1), static_cast<int>(-e));
    }
    return s;
}

Scalar Scalar::zeta_power(long k, const FieldMode& m) {
    if (!m.is_root()) throw std::invalid_argument("Scalar::zeta_power: requires root-of-unity mode");
    return q_power(k, m);
}

Scalar Scalar::from_laurent_fraction(const std::vector<std::pair<long, Rational>>& num,
                                     const std::vector<std::pair<long, Rational>>& den,
                                     const FieldMode& m) {
    if (m.is_root()) {
        // interpret exponents as powers of zeta
        Scalar n = Scalar::zero(m), d = Scalar::zero(m);
        for (const auto& [e, c] : num) n += Scalar::from_rational(c, m) * Scalar::q_power(e, m);
        for (const auto& [e, c] : den) d += Scalar::from_rational(c, m) * Scalar::q_power(e, m);
        return n / d;
    }
    long shift = 0;
    for (const auto& [e, c] : num) shift = std::min(shift, e);
    for (const auto& [e, c] : den) shift = std::min(shift, e);
    Scalar s(m);
    Poly pn, pd;
    for (const auto& [e, c] : num) pn = pn + Poly::monomial(c, static_cast<int>(e - shift));
    for (const auto& [e, c] : den) pd = pd + Poly::monomial(c, static_cast<int>(e - shift));
    s.num_ = std::move(pn);
    s.den_ = std::move(pd);
    s.canonicalize();
    return s;
}

bool Scalar::is_one() const {
    return num_.degree() == 0 && num_[0] == 1 && den_.degree() == 0;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b);
    auto cmp_poly = [](const Poly& x, const Poly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree() ? -1 : 1;
        for (int i = x.degree(); i >= 0; --i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_poly(a.num_, b.num_);
    if (c != 0) return c;
    return cmp_poly(a.den_, b.den_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_mode(*this, o);
    Scalar s(mode_);
    if (mode_.is_root()) {
        s.num_ = num_ + o.num_;
        return s;
    }
    s.num_ = num_ * o.den_ + o.num_ * den_;
    s.den_ = den_ * o.den_;
    s.canonicalize();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_mode(*this, o);
    Scalar s(mode_);
    s.num_ = num_ * o.num_;
    if (mode_.is_root()) {
        s.canonicalize();
        return s;
    }
    s.den_ = den_ * o.den_;
    s.canonicalize();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    if (mode_.is_generic()) {
        Scalar s(mode_);
        s.num_ = den_;
        s.den_ = num_;
        s.canonicalize();
        return s;
    }
    // extended Euclid against the (irreducible) cyclotomic modulus
    const Poly& phi = cyclotomic(mode_.l);
    Poly r0 = phi, r1 = num_;
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        Poly q, r;
        Poly::divmod(r0, r1, q, r);
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.degree() != 0) throw std::logic_error("Scalar: non-invertible cyclotomic residue");
    Scalar s(mode_);
    s.num_ = t0 * (1 / r0[0]);
    s.canonicalize();
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(mode_);
    Scalar b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::is_rational() const {
    return num_.degree() <= 0 && den_.degree() <= 0;
}

Rational Scalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("Scalar: not a rational constant");
    if (num_.is_zero()) return Rational(0);
    return num_[0] / den_[0];
}

std::optional<std::pair<int, long>> Scalar::as_signed_q_power() const {
    if (!mode_.is_generic()) return std::nullopt;
    if (num_.is_zero()) return std::nullopt;
    // canonical form of eps*q^m is q^a/q^b with a single signed unit coefficient
    int nd = num_.degree();
    if (num_.low_order() != nd || den_.low_order() != den_.degree()) return std::nullopt;
    const Rational& c = num_[nd];
    if (c != 1 && c != -1) return std::nullopt;
    long m = nd - den_.degree();
    return std::make_pair(c == 1 ? 1 : -1, m);
}

std::optional<int> Scalar::as_zeta_power() const {
    if (!mode_.is_root()) return std::nullopt;
    for (int k = 0; k < mode_.l; ++k) {
        if (*this == Scalar::q_power(k, mode_)) return k;
    }
    return std::nullopt;
}

Scalar Scalar::specialize_at_root(int l) const {
    if (!mode_.is_generic()) throw std::invalid_argument("Scalar::specialize_at_root: generic input required");
    FieldMode rm = FieldMode::root_of_unity(l);
    Scalar n(rm), d(rm);
    n.num_ = num_;
    n.canonicalize();
    d.num_ = den_;
    d.canonicalize();
    if (d.is_zero()) throw std::domain_error("Scalar::specialize_at_root: denominator vanishes at the root");
    return n / d;
}

std::string Scalar::to_string() const {
    if (mode_.is_root()) return num_.is_zero() ? "0" : num_.to_string("q");
    if (is_zero()) return "0";
    if (den_.degree() == 0) return num_.to_string();
    // denominator q^k: display as a Laurent polynomial
    if (den_.low_order() == den_.degree()) {
        int k = den_.degree();
        std::ostringstream out;
        bool first = true;
        for (int i = num_.degree(); i >= 0; --i) {
            const Rational& c = num_[i];
            if (c == 0) continue;
            Rational a = c > 0 ? c : Rational(-c);
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            int e = i - k;
            if (e == 0) {
                out << rational_to_string(a);
            } else {
                if (a != 1) out << rational_to_string(a) << "*";
                out << "q";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Quadratic Gauss sum: sum over a of the Legendre symbol (a|l) times zeta^a.
// Its square is +l when l = 1 mod 4 and -l when l = 3 mod 4 (l an odd prime).
Scalar gauss_sum(const FieldMode& m) {
    Scalar g = Scalar::zero(m);
    for (int a = 1; a < m.l; ++a) {
        // Euler's criterion: a^((l-1)/2) mod l decides the Legendre symbol
        long t = 1;
        for (int e = 0; e < (m.l - 1) / 2; ++e) t = (t * a) % m.l;
        g += Scalar::from_int(t == 1 ? 1 : -1, m) * Scalar::q_power(a, m);
    }
    return g;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::optional<Scalar> cyclotomic_sqrt_restricted(const Scalar& z) {
    const FieldMode& m = z.mode();
    if (!m.is_root()) throw std::invalid_argument("cyclotomic_sqrt_restricted: root mode required");
    if (z.is_zero()) return Scalar::zero(m);
    const int l = m.l;
    const long half = (static_cast<long>(l) + 1) / 2;  // inverse of 2 mod l (l odd)
    for (int k = 0; k < l; ++k) {
        Scalar t = z * Scalar::q_power(-k, m);
        if (!t.is_rational()) continue;
        Rational r = t.as_rational();
        Scalar zhalf = Scalar::q_power((k * half) % l, m);
        if (auto s = rational_sqrt(r)) return Scalar::from_rational(*s, m) * zhalf;
        if (is_prime(l)) {
            // try r = s^2 * (g^2) with g the Gauss sum, g^2 = (-1)^((l-1)/2) * l
            Rational lstar = (l % 4 == 1) ? Rational(l) : Rational(-l);
            if (auto s = rational_sqrt(r / lstar))
                return Scalar::from_rational(*s, m) * gauss_sum(m) * zhalf;
        }
        return std::nullopt;  // the zeta-power factor is unique, so stop here
    }
    return std::nullopt;
}

}  // namespace hopfforge
