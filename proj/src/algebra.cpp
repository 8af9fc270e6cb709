#include "hopfforge/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfforge {

std::string algebra_kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::U: return "U";
        case AlgebraKind::u: return "u";
        case AlgebraKind::uGeq0: return "uGeq0";
        case AlgebraKind::uLeq0: return "uLeq0";
        case AlgebraKind::u1: return "u1";
        case AlgebraKind::Dphi: return "Dphi";
    }
    throw std::logic_error("algebra_kind_name: bad kind");
}

AlgebraKind algebra_kind_from_name(const std::string& name) {
    if (name == "U") return AlgebraKind::U;
    if (name == "u") return AlgebraKind::u;
    if (name == "uGeq0") return AlgebraKind::uGeq0;
    if (name == "uLeq0") return AlgebraKind::uLeq0;
    if (name == "u1") return AlgebraKind::u1;
    if (name == "Dphi") return AlgebraKind::Dphi;
    throw std::invalid_argument("unknown algebra: " + name);
}

AlgebraId AlgebraId::make(AlgebraKind k, const FieldMode& m) {
    if (k != AlgebraKind::U && !m.is_root())
        throw std::invalid_argument(algebra_kind_name(k) + " requires a root-of-unity field mode");
    return AlgebraId{k, m};
}

std::string letter_name(Letter g) {
    switch (g) {
        case Letter::F1: return "F1";
        case Letter::F12: return "F12";
        case Letter::F2: return "F2";
        case Letter::K1: return "K1";
        case Letter::K1i: return "K1^-1";
        case Letter::K2: return "K2";
        case Letter::K2i: return "K2^-1";
        case Letter::Kt1: return "Kt1";
        case Letter::Kt1i: return "Kt1^-1";
        case Letter::Kt2: return "Kt2";
        case Letter::Kt2i: return "Kt2^-1";
        case Letter::E1: return "E1";
        case Letter::E12: return "E12";
        case Letter::E2: return "E2";
    }
    throw std::logic_error("letter_name: bad letter");
}

int letter_position(Letter g) {
    switch (g) {
        case Letter::F1: return 0;
        case Letter::F12: return 1;
        case Letter::F2: return 2;
        case Letter::K1:
        case Letter::K1i: return 3;
        case Letter::K2:
        case Letter::K2i: return 4;
        case Letter::Kt1:
        case Letter::Kt1i: return 5;
        case Letter::Kt2:
        case Letter::Kt2i: return 6;
        case Letter::E1: return 7;
        case Letter::E12: return 8;
        case Letter::E2: return 9;
    }
    throw std::logic_error("letter_position: bad letter");
}

bool letter_legal(Letter g, const AlgebraId& A) {
    int p = letter_position(g);
    switch (A.kind) {
        case AlgebraKind::U:
        case AlgebraKind::u: return p <= 4 || p >= 7;
        case AlgebraKind::uGeq0: return p == 3 || p == 4 || p >= 7;
        case AlgebraKind::uLeq0: return p <= 4;
        case AlgebraKind::u1:
            return g == Letter::F1 || g == Letter::K1 || g == Letter::K1i || g == Letter::E1;
        case AlgebraKind::Dphi: return true;
    }
    return false;
}

bool monomial_in_bounds(const PbwMonomial& m, const AlgebraId& A) {
    for (int x : m.f)
        if (x < 0) return false;
    for (int x : m.e)
        if (x < 0) return false;
    if (!A.has_kt() && (m.kt[0] != 0 || m.kt[1] != 0)) return false;
    if (A.kind == AlgebraKind::U) return true;
    const int l = A.l();
    for (int x : m.f)
        if (x >= l) return false;
    for (int x : m.e)
        if (x >= l) return false;
    for (int x : m.k)
        if (x < 0 || x >= l) return false;
    for (int x : m.kt)
        if (x < 0 || x >= l) return false;
    switch (A.kind) {
        case AlgebraKind::uGeq0:
            return m.f == std::array<int, 3>{0, 0, 0};
        case AlgebraKind::uLeq0:
            return m.e == std::array<int, 3>{0, 0, 0};
        case AlgebraKind::u1:
            return m.f[1] == 0 && m.f[2] == 0 && m.e[1] == 0 && m.e[2] == 0 && m.k[1] == 0;
        default: return true;
    }
}

std::string PbwMonomial::to_string(bool with_kt) const {
    std::ostringstream out;
    bool any = false;
    auto emit = [&](const char* name, int exp) {
        if (exp == 0) return;
        if (any) out << "*";
        out << name;
        if (exp != 1) out << "^" << exp;
        any = true;
    };
    emit("F1", f[0]);
    emit("F12", f[1]);
    emit("F2", f[2]);
    emit("K1", k[0]);
    emit("K2", k[1]);
    if (with_kt || kt[0] != 0 || kt[1] != 0) {
        emit("Kt1", kt[0]);
        emit("Kt2", kt[1]);
    }
    emit("E1", e[0]);
    emit("E12", e[1]);
    emit("E2", e[2]);
    if (!any) out << "1";
    return out.str();
}

Element Element::unit(const AlgebraId& A) {
    return monomial(A, PbwMonomial{}, Scalar::one(A.mode));
}

Element Element::monomial(const AlgebraId& A, const PbwMonomial& m, Scalar c) {
    if (!monomial_in_bounds(m, A))
        throw std::invalid_argument("Element::monomial: exponents out of bounds for " +
                                    algebra_kind_name(A.kind));
    Element x(A);
    if (!c.is_zero()) x.terms_.emplace(m, std::move(c));
    return x;
}

Element Element::generator(const AlgebraId& A, Letter g) {
    if (!letter_legal(g, A))
        throw std::invalid_argument("Element::generator: " + letter_name(g) + " not in " +
                                    algebra_kind_name(A.kind));
    PbwMonomial m;
    const int l = A.is_quotient() ? A.l() : 0;
    switch (g) {
        case Letter::F1: m.f[0] = 1; break;
        case Letter::F12: m.f[1] = 1; break;
        case Letter::F2: m.f[2] = 1; break;
        case Letter::K1: m.k[0] = 1; break;
        case Letter::K2: m.k[1] = 1; break;
        case Letter::K1i: m.k[0] = A.is_quotient() ? l - 1 : -1; break;
        case Letter::K2i: m.k[1] = A.is_quotient() ? l - 1 : -1; break;
        case Letter::Kt1: m.kt[0] = 1; break;
        case Letter::Kt2: m.kt[1] = 1; break;
        case Letter::Kt1i: m.kt[0] = l - 1; break;
        case Letter::Kt2i: m.kt[1] = l - 1; break;
        case Letter::E1: m.e[0] = 1; break;
        case Letter::E12: m.e[1] = 1; break;
        case Letter::E2: m.e[2] = 1; break;
    }
    return monomial(A, m, Scalar::one(A.mode));
}

void Element::add_term(const PbwMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element Element::operator+(const Element& o) const {
    if (!(alg_ == o.alg_)) throw std::invalid_argument("Element: algebra mismatch");
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (!(alg_ == o.alg_)) throw std::invalid_argument("Element: algebra mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
    Element r(alg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) {
        Scalar y = x * c;
        if (!y.is_zero()) r.terms_.emplace(m, std::move(y));
    }
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (!m.is_unit()) out << "*" << m.to_string(alg_.has_kt());
    }
    return out.str();
}

std::vector<Letter> monomial_letters(const PbwMonomial& m) {
    std::vector<Letter> w;
    auto rep = [&](Letter g, int n) {
        for (int i = 0; i < n; ++i) w.push_back(g);
    };
    rep(Letter::F1, m.f[0]);
    rep(Letter::F12, m.f[1]);
    rep(Letter::F2, m.f[2]);
    rep(m.k[0] >= 0 ? Letter::K1 : Letter::K1i, std::abs(m.k[0]));
    rep(m.k[1] >= 0 ? Letter::K2 : Letter::K2i, std::abs(m.k[1]));
    rep(Letter::Kt1, m.kt[0]);
    rep(Letter::Kt2, m.kt[1]);
    rep(Letter::E1, m.e[0]);
    rep(Letter::E12, m.e[1]);
    rep(Letter::E2, m.e[2]);
    return w;
}

std::vector<FreeWord> expand_to_basic_words(const Element& x) {
    const FieldMode& fm = x.algebra().mode;
    std::vector<FreeWord> out;
    for (const auto& [m, c] : x.terms()) {
        std::vector<FreeWord> words{FreeWord(c, {})};
        auto append_letter = [&](Letter g) {
            for (auto& w : words) w.letters.push_back(g);
        };
        auto append_composite = [&](Letter a1, Letter a2, Letter b1, Letter b2, const Scalar& s2) {
            // x12 = (a1 a2) + s2 * (b1 b2)
            std::vector<FreeWord> next;
            next.reserve(words.size() * 2);
            for (const auto& w : words) {
                FreeWord w1 = w;
                w1.letters.push_back(a1);
                w1.letters.push_back(a2);
                next.push_back(std::move(w1));
                FreeWord w2 = w;
                w2.coeff = w2.coeff * s2;
                w2.letters.push_back(b1);
                w2.letters.push_back(b2);
                next.push_back(std::move(w2));
            }
            words = std::move(next);
        };
        for (Letter g : monomial_letters(m)) {
            if (g == Letter::E12) {
                // E12 = E1 E2 - q^-1 E2 E1
                append_composite(Letter::E1, Letter::E2, Letter::E2, Letter::E1,
                                 -Scalar::q_power(-1, fm));
            } else if (g == Letter::F12) {
                // F12 = F2 F1 - q F1 F2
                append_composite(Letter::F2, Letter::F1, Letter::F1, Letter::F2,
                                 -Scalar::q_power(1, fm));
            } else {
                append_letter(g);
            }
        }
        for (auto& w : words) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace hopfforge
