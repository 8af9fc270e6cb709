#include "hopfforge/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfforge {

void Poly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Poly Poly::monomial(Rational c, int e) {
    if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    Poly p;
    if (c == 0) return p;
    p.coeff_.assign(static_cast<size_t>(e) + 1, Rational(0));
    p.coeff_.back() = std::move(c);
    return p;
}

const Rational& Poly::operator[](int i) const {
    static const Rational kZero(0);
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return kZero;
    return coeff_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::logic_error("Poly::leading on zero polynomial");
    return coeff_.back();
}

int Poly::low_order() const {
    if (is_zero()) return 0;
    int i = 0;
    while (coeff_[static_cast<size_t>(i)] == 0) ++i;
    return i;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> c(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) c[i] -= o.coeff_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(coeff_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(coeff_.size() + o.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& r) const {
    if (r == 0) return Poly();
    std::vector<Rational> c(coeff_);
    for (auto& x : c) x *= r;
    return Poly(std::move(c));
}

Poly Poly::shifted(int k) const {
    if (k == 0 || is_zero()) return *this;
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    c.insert(c.end(), coeff_.begin(), coeff_.end());
    return Poly(std::move(c));
}

Poly Poly::unshifted(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (low_order() < k) throw std::invalid_argument("Poly::unshifted: not divisible by x^k");
    return Poly(std::vector<Rational>(coeff_.begin() + k, coeff_.end()));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    std::vector<Rational> r(a.coeff_);
    int db = b.degree();
    int da = static_cast<int>(r.size()) - 1;
    if (da < db) {
        quot = Poly();
        rem = a;
        return;
    }
    std::vector<Rational> q(static_cast<size_t>(da - db) + 1, Rational(0));
    for (int i = da; i >= db; --i) {
        Rational c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        c /= b.leading();
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= c * b[j];
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("Poly::exact_div: nonzero remainder");
    return q;
}

namespace {

// primitive integer coefficient vector of a rational polynomial
std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    Integer lcm = 1;
    for (const Rational& c : p.coefficients())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients()) v.push_back(Integer(c * lcm));
    Integer content = 0;
    for (const Integer& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (Integer& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return v;
}

void strip_content(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    Integer content = 0;
    for (const Integer& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (Integer& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// pseudo-remainder of primitive integer polynomials, content stripped
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const size_t db = b.size() - 1;
    const Integer& lead = b.back();
    while (a.size() > db) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        Integer c = a.back();
        for (auto& x : a) x *= lead;
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        strip_content(a);
    }
    return a;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    // primitive Euclid over the integers to keep coefficients small
    std::vector<Integer> x = primitive_integer_coeffs(a);
    std::vector<Integer> y = primitive_integer_coeffs(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<Integer> r = pseudo_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    for (const Integer& v : x) c.emplace_back(v);
    return Poly(std::move(c)).monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return (*this) * inv;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = (*this)[i];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            out << rational_to_string(a);
        } else {
            if (!unit) out << rational_to_string(a) << "*";
            out << var;
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

const Poly& cyclotomic_locked(std::map<int, Poly>& cache, int n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors of n
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[0] = -1;
    c[static_cast<size_t>(n)] = 1;
    Poly phi(std::move(c));
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        phi = Poly::exact_div(phi, cyclotomic_locked(cache, d));
    }
    return cache.emplace(n, std::move(phi)).first->second;
}

}  // namespace

const Poly& cyclotomic(int l) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    if (l < 1) throw std::invalid_argument("cyclotomic: l must be positive");
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_locked(cache, l);
}

}  // namespace hopfforge
