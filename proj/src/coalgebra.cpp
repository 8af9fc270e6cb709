#include "hopfforge/coalgebra.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfforge {

TensorElement TensorElement::tensor(const Element& a, const Element& b) {
    TensorElement t(a.algebra(), b.algebra());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
    return t;
}

void TensorElement::add_term(const PbwMonomial& a, const PbwMonomial& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (!(left_ == o.left_) || !(right_ == o.right_))
        throw std::invalid_argument("TensorElement: algebra mismatch");
    TensorElement r(left_, right_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Element l = multiply(Element::monomial(left_, ka.first, Scalar::one(left_.mode)),
                                 Element::monomial(left_, kb.first, Scalar::one(left_.mode)));
            Element rr = multiply(Element::monomial(right_, ka.second, Scalar::one(right_.mode)),
                                  Element::monomial(right_, kb.second, Scalar::one(right_.mode)));
            Scalar c = ca * cb;
            for (const auto& [ml, cl] : l.terms())
                for (const auto& [mr, cr] : rr.terms()) r.add_term(ml, mr, c * cl * cr);
        }
    return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement r(left_, right_);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.add_term(k.first, k.second, x * c);
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    bool kt = left_.has_kt() || right_.has_kt();
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*" << k.first.to_string(kt) << " (x) "
            << k.second.to_string(kt);
    }
    return out.str();
}

void Tensor3Element::add_term(const PbwMonomial& a, const PbwMonomial& b, const PbwMonomial& c,
                              const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {

// coproduct of a single basic letter
TensorElement delta_letter_basic(Letter g, const AlgebraId& A) {
    const Scalar one = Scalar::one(A.mode);
    TensorElement t(A, A);
    auto mono = [&](Letter x) {
        Element e = Element::generator(A, x);
        return e.terms().begin()->first;
    };
    PbwMonomial unit;
    switch (g) {
        case Letter::E1:
        case Letter::E2: {
            Letter kg = (g == Letter::E1) ? Letter::K1 : Letter::K2;
            t.add_term(mono(kg), mono(g), one);
            t.add_term(mono(g), unit, one);
            return t;
        }
        case Letter::F1:
        case Letter::F2: {
            Letter kinv;
            if (A.has_kt())
                kinv = (g == Letter::F1) ? Letter::Kt1i : Letter::Kt2i;
            else
                kinv = (g == Letter::F1) ? Letter::K1i : Letter::K2i;
            t.add_term(unit, mono(g), one);
            t.add_term(mono(g), mono(kinv), one);
            return t;
        }
        case Letter::K1:
        case Letter::K1i:
        case Letter::K2:
        case Letter::K2i:
        case Letter::Kt1:
        case Letter::Kt1i:
        case Letter::Kt2:
        case Letter::Kt2i: {
            t.add_term(mono(g), mono(g), one);
            return t;
        }
        default:
            throw std::logic_error("delta_letter: composite letter");
    }
}

// coproduct of any PBW letter, with the composite root vectors expanded once
// and cached per algebra
const TensorElement& delta_letter(Letter g, const AlgebraId& A) {
    static std::map<std::tuple<AlgebraKind, FieldMode::Kind, int, Letter>, TensorElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(A.kind, A.mode.kind, A.mode.l, g);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TensorElement d(A, A);
    if (g == Letter::E12 || g == Letter::F12) {
        Element x = Element::generator(A, g);
        TensorElement acc(A, A);
        for (const FreeWord& w : expand_to_basic_words(x)) {
            TensorElement t = TensorElement::tensor(Element::unit(A), Element::unit(A));
            t = t.scaled(w.coeff);
            for (Letter h : w.letters) t = t * delta_letter_basic(h, A);
            acc = acc + t;
        }
        d = std::move(acc);
    } else {
        d = delta_letter_basic(g, A);
    }
    return cache.emplace(std::move(key), std::move(d)).first->second;
}

}  // namespace

TensorElement comultiply(const Element& a) {
    const AlgebraId& A = a.algebra();
    TensorElement out(A, A);
    for (const auto& [m, c] : a.terms()) {
        TensorElement acc = TensorElement::tensor(Element::unit(A), Element::unit(A));
        acc = acc.scaled(c);
        for (Letter g : monomial_letters(m)) acc = acc * delta_letter(g, A);
        out = out + acc;
    }
    return out;
}

Scalar counit(const Element& a) {
    Scalar s = Scalar::zero(a.algebra().mode);
    for (const auto& [m, c] : a.terms()) {
        if (m.is_group_like()) s += c;  // group-likes evaluate to 1
    }
    return s;
}

namespace {

// antipode image of a single basic letter, as a word
FreeWord antipode_letter_basic(Letter g, const AlgebraId& A) {
    const Scalar one = Scalar::one(A.mode);
    switch (g) {
        case Letter::E1: return FreeWord(-one, {Letter::K1i, Letter::E1});
        case Letter::E2: return FreeWord(-one, {Letter::K2i, Letter::E2});
        case Letter::F1:
            return FreeWord(-one, {Letter::F1, A.has_kt() ? Letter::Kt1 : Letter::K1});
        case Letter::F2:
            return FreeWord(-one, {Letter::F2, A.has_kt() ? Letter::Kt2 : Letter::K2});
        case Letter::K1: return FreeWord(one, {Letter::K1i});
        case Letter::K1i: return FreeWord(one, {Letter::K1});
        case Letter::K2: return FreeWord(one, {Letter::K2i});
        case Letter::K2i: return FreeWord(one, {Letter::K2});
        case Letter::Kt1: return FreeWord(one, {Letter::Kt1i});
        case Letter::Kt1i: return FreeWord(one, {Letter::Kt1});
        case Letter::Kt2: return FreeWord(one, {Letter::Kt2i});
        case Letter::Kt2i: return FreeWord(one, {Letter::Kt2});
        default: throw std::logic_error("antipode_letter_basic: composite letter");
    }
}

// antipode image of any PBW letter, cached per algebra
const Element& antipode_letter(Letter g, const AlgebraId& A) {
    static std::map<std::tuple<AlgebraKind, FieldMode::Kind, int, Letter>, Element> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(A.kind, A.mode.kind, A.mode.l, g);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Element img(A);
    if (g == Letter::E12 || g == Letter::F12) {
        // anti-homomorphic image of the defining combination
        Element acc(A);
        for (const FreeWord& w : expand_to_basic_words(Element::generator(A, g))) {
            Element part = Element::unit(A).scaled(w.coeff);
            for (auto rit = w.letters.rbegin(); rit != w.letters.rend(); ++rit) {
                FreeWord lw = antipode_letter_basic(*rit, A);
                part = multiply(part, normal_form(lw, A));
            }
            acc += part;
        }
        img = std::move(acc);
    } else {
        img = normal_form(antipode_letter_basic(g, A), A);
    }
    return cache.emplace(std::move(key), std::move(img)).first->second;
}

}  // namespace

Element antipode(const Element& a) {
    const AlgebraId& A = a.algebra();
    Element out(A);
    for (const auto& [m, c] : a.terms()) {
        // anti-homomorphism: letter images multiplied in reverse order
        Element part = Element::unit(A).scaled(c);
        std::vector<Letter> word = monomial_letters(m);
        for (auto rit = word.rbegin(); rit != word.rend(); ++rit)
            part = multiply(part, antipode_letter(*rit, A));
        out += part;
    }
    return out;
}

Tensor3Element comultiply_left(const Element& a) {
    const AlgebraId& A = a.algebra();
    Tensor3Element out(A);
    TensorElement d = comultiply(a);
    for (const auto& [pair, c] : d.terms()) {
        TensorElement dl = comultiply(Element::monomial(A, pair.first, Scalar::one(A.mode)));
        for (const auto& [pq, c2] : dl.terms())
            out.add_term(pq.first, pq.second, pair.second, c * c2);
    }
    return out;
}

Tensor3Element comultiply_right(const Element& a) {
    const AlgebraId& A = a.algebra();
    Tensor3Element out(A);
    TensorElement d = comultiply(a);
    for (const auto& [pair, c] : d.terms()) {
        TensorElement dr = comultiply(Element::monomial(A, pair.second, Scalar::one(A.mode)));
        for (const auto& [pq, c2] : dr.terms())
            out.add_term(pair.first, pq.first, pq.second, c * c2);
    }
    return out;
}

Element counit_contract_left(const TensorElement& t) {
    const AlgebraId& A = t.right_algebra();
    Element out(A);
    for (const auto& [k, c] : t.terms()) {
        if (k.first.is_group_like()) out.add_term(k.second, c);
    }
    return out;
}

Element counit_contract_right(const TensorElement& t) {
    const AlgebraId& A = t.left_algebra();
    Element out(A);
    for (const auto& [k, c] : t.terms()) {
        if (k.second.is_group_like()) out.add_term(k.first, c);
    }
    return out;
}

Element multiply_contract(const TensorElement& t, bool antipode_left, bool antipode_right) {
    const AlgebraId& A = t.left_algebra();
    Element out(A);
    for (const auto& [k, c] : t.terms()) {
        Element l = Element::monomial(A, k.first, Scalar::one(A.mode));
        Element r = Element::monomial(A, k.second, Scalar::one(A.mode));
        if (antipode_left) l = antipode(l);
        if (antipode_right) r = antipode(r);
        out += multiply(l, r).scaled(c);
    }
    return out;
}

}  // namespace hopfforge
