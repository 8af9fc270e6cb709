#include "hopfforge/parser.hpp"

#include "hopfforge/qcomb.hpp"

#include <cctype>
#include <sstream>

namespace hopfforge {

namespace {

struct Parser {
    const std::string& src;
    const AlgebraId& A;
    size_t pos = 0;

    Parser(const std::string& s, const AlgebraId& a) : src(s), A(a) {}

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos && i < src.size(); ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream out;
        out << "parse error at " << line << ":" << col << ": " << msg;
        throw ParseError(out.str(), line, col);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        return src.substr(start, pos - start);
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        long value = 0;
        try {
            value = std::stol(src.substr(start, pos - start));
        } catch (const std::exception&) {
            fail("integer out of range");
        }
        return value;
    }

    Element expr() {
        bool neg = eat('-');
        Element total = term();
        if (neg) total = -total;
        while (true) {
            if (eat('+'))
                total = total + term();
            else if (eat('-'))
                total = total - term();
            else
                return total;
        }
    }

    Element term() {
        Element total = factor();
        while (true) {
            if (eat('*')) {
                total = multiply(total, factor());
            } else if (eat('/')) {
                size_t at = pos;
                Element d = factor();
                Scalar s = scalar_of(d);
                if (s.is_zero()) {
                    pos = at;
                    fail("division by zero");
                }
                total = total.scaled(s.inverse());
            } else {
                return total;
            }
        }
    }

    // a factor is an atom with an optional integer exponent
    Element factor() {
        bool is_k = false, is_q = false;
        Element base = atom(&is_k, &is_q);
        if (!eat('^')) return base;
        size_t at = pos;
        long e = integer();
        if (e < 0) {
            if (is_k) {
                // invert the single group-like letter
                PbwMonomial m = base.terms().begin()->first;
                Element inv(A);
                PbwMonomial mi;
                const int l = A.is_quotient() ? A.l() : 0;
                for (int idx = 0; idx < 2; ++idx) {
                    mi.k[idx] = A.is_quotient() ? (m.k[idx] ? l - m.k[idx] : 0) : -m.k[idx];
                    mi.kt[idx] = A.is_quotient() ? (m.kt[idx] ? l - m.kt[idx] : 0) : -m.kt[idx];
                }
                Element binv = Element::monomial(A, mi, Scalar::one(A.mode));
                Element total = Element::unit(A);
                for (long r = 0; r < -e; ++r) total = multiply(total, binv);
                return total;
            }
            if (is_q) return Element::unit(A).scaled(Scalar::q_power(e, A.mode));
            pos = at;
            fail("negative exponents are restricted to group-like generators and q");
        }
        if (is_q) return Element::unit(A).scaled(Scalar::q_power(e, A.mode));
        Element total = Element::unit(A);
        for (long r = 0; r < e; ++r) total = multiply(total, base);
        return total;
    }

    Scalar scalar_of(const Element& x) {
        if (x.is_zero()) return Scalar::zero(A.mode);
        if (x.terms().size() != 1 || !x.terms().begin()->first.is_unit())
            fail("expected a scalar operand");
        return x.terms().begin()->second;
    }

    Element atom(bool* is_k, bool* is_q) {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            Element inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (pos < src.size() && src[pos] == '/') {
                ++pos;
                size_t dstart = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
                if (pos == dstart) fail("expected a denominator");
            }
            Rational r;
            try {
                r = rational_from_string(src.substr(start, pos - start));
            } catch (const std::exception& e) {
                pos = start;
                fail(e.what());
            }
            return Element::unit(A).scaled(Scalar::from_rational(r, A.mode));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
        size_t at = pos;
        std::string name = ident();
        if (name == "q") {
            if (is_q) *is_q = true;
            return Element::unit(A).scaled(Scalar::q(A.mode));
        }
        if (name == "qint" || name == "qfac" || name == "qbinom") {
            if (!eat('(')) fail("expected '(' after " + name);
            long a = integer();
            Scalar v = Scalar::zero(A.mode);
            if (name == "qbinom") {
                if (!eat(',')) fail("expected ',' in qbinom");
                long b = integer();
                if (!eat(')')) fail("expected ')'");
                if (a < 0 || b < 0 || b > a) fail("qbinom requires n >= j >= 0");
                v = q_binomial(a, b, A.mode);
            } else {
                if (!eat(')')) fail("expected ')'");
                if (name == "qfac" && a < 0) fail("qfac requires a non-negative argument");
                v = (name == "qint") ? q_int(a, A.mode) : q_factorial(a, A.mode);
            }
            return Element::unit(A).scaled(v);
        }
        static const std::pair<const char*, Letter> gens[] = {
            {"E12", Letter::E12}, {"E1", Letter::E1},  {"E2", Letter::E2},
            {"F12", Letter::F12}, {"F1", Letter::F1},  {"F2", Letter::F2},
            {"Kt1", Letter::Kt1}, {"Kt2", Letter::Kt2}, {"K1", Letter::K1},
            {"K2", Letter::K2}};
        for (const auto& [n, g] : gens) {
            if (name == n) {
                if (!letter_legal(g, A)) {
                    pos = at;
                    fail(std::string(n) + " is not a generator of " + algebra_kind_name(A.kind));
                }
                if (is_k && letter_position(g) >= 3 && letter_position(g) <= 6) *is_k = true;
                return Element::generator(A, g);
            }
        }
        pos = at;
        fail("unknown symbol '" + name + "'");
    }
};

std::string poly_factor(const Poly& p) { return "(" + p.to_string("q") + ")"; }

}  // namespace

Element parse_element(const std::string& text, const AlgebraId& A) {
    Parser p(text, A);
    Element result = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

std::string render_scalar(const Scalar& c) {
    // canonical denominators are monic, so a constant denominator is 1
    if (c.mode().is_root() || c.den().degree() == 0) return poly_factor(c.num());
    return poly_factor(c.num()) + "/" + poly_factor(c.den());
}

std::string render_element(const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << render_scalar(c);
        auto emit = [&](const char* name, int e) {
            if (e != 0) out << "*" << name << (e == 1 ? "" : "^" + std::to_string(e));
        };
        emit("F1", m.f[0]);
        emit("F12", m.f[1]);
        emit("F2", m.f[2]);
        emit("K1", m.k[0]);
        emit("K2", m.k[1]);
        emit("Kt1", m.kt[0]);
        emit("Kt2", m.kt[1]);
        emit("E1", m.e[0]);
        emit("E12", m.e[1]);
        emit("E2", m.e[2]);
    }
    return out.str();
}

}  // namespace hopfforge
