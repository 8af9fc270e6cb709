#include "hopfforge/pairing.hpp"

#include <stdexcept>

namespace hopfforge {

namespace {

bool is_group_letter(Letter g) {
    int p = letter_position(g);
    return p >= 3 && p <= 6;
}

// Q-degree of a basic-letter word (counts of the two simple-root letters).
std::pair<int, int> word_degree(const std::vector<Letter>& w) {
    int d1 = 0, d2 = 0;
    for (Letter g : w) {
        if (g == Letter::E1 || g == Letter::F1) ++d1;
        if (g == Letter::E2 || g == Letter::F2) ++d2;
    }
    return {d1, d2};
}

Scalar word_counit(const std::vector<Letter>& w, const FieldMode& m) {
    for (Letter g : w)
        if (!is_group_letter(g)) return Scalar::zero(m);
    return Scalar::one(m);
}

int k_eps(Letter g) { return (g == Letter::K1i || g == Letter::K2i) ? -1 : 1; }
int k_idx(Letter g) { return (g == Letter::K1 || g == Letter::K1i) ? 0 : 1; }

}  // namespace

SkewPairing::SkewPairing(int l, PairingNormalization norm)
    : mode_(FieldMode::root_of_unity(l)),
      norm_(norm),
      up_(AlgebraId::make(AlgebraKind::uGeq0, mode_)),
      low_(AlgebraId::make(AlgebraKind::uLeq0, mode_)),
      e1f1_(Scalar::zero(mode_)) {
    Scalar q = Scalar::q_power(1, mode_);
    Scalar qi = Scalar::q_power(-1, mode_);
    e1f1_ = (norm == PairingNormalization::Printed) ? (q * q - Scalar::one(mode_)).inverse()
                                                    : (q - qi).inverse();
}

Scalar SkewPairing::pair_letters(Letter g, Letter h) const {
    if (is_group_letter(g) && is_group_letter(h)) {
        long e = static_cast<long>(k_eps(g)) * k_eps(h) * kCartan[k_idx(g)][k_idx(h)];
        return Scalar::q_power(e, mode_);
    }
    if (g == Letter::E1 && h == Letter::F1) return e1f1_;
    return Scalar::zero(mode_);  // mixed degrees, or the unpaired simple pair
}

Scalar SkewPairing::pair_letter_word(Letter g, const std::vector<Letter>& right) const {
    if (right.empty())
        return is_group_letter(g) ? Scalar::one(mode_) : Scalar::zero(mode_);
    if (right.size() == 1) return pair_letters(g, right[0]);
    std::vector<Letter> init(right.begin(), right.end() - 1);
    Letter last = right.back();
    // phi(g, init*last) = sum phi(g_(1), last) phi(g_(2), init)
    if (is_group_letter(g)) {
        Scalar a = pair_letter_word(g, {last});
        if (a.is_zero()) return a;
        return a * pair_letter_word(g, init);
    }
    // Delta(E_i) = K_i (x) E_i + E_i (x) 1
    Letter ki = (g == Letter::E1) ? Letter::K1 : Letter::K2;
    Scalar total = Scalar::zero(mode_);
    Scalar t1 = pair_letter_word(ki, {last});
    if (!t1.is_zero()) total += t1 * pair_letter_word(g, init);
    Scalar t2 = pair_letters(g, last);
    if (!t2.is_zero()) total += t2 * word_counit(init, mode_);
    return total;
}

Scalar SkewPairing::pair_words(const std::vector<Letter>& left,
                               const std::vector<Letter>& right) const {
    // the pairing is degree-orthogonal: prune before recursing
    auto dl = word_degree(left);
    auto dr = word_degree(right);
    if (dl != dr) return Scalar::zero(mode_);
    if (left.empty()) return word_counit(right, mode_);
    if (left.size() == 1) return pair_letter_word(left[0], right);
    auto key = std::make_pair(left, right);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<Letter> prefix(left.begin(), left.end() - 1);
    Letter last = left.back();
    // phi(prefix*last, y) = sum phi(prefix, y_(1)) phi(last, y_(2))
    Element y = normal_form(FreeWord(Scalar::one(mode_), right), low_);
    Scalar total = Scalar::zero(mode_);
    TensorElement dy = comultiply(y);
    for (const auto& [pq, c] : dy.terms()) {
        Element y1 = Element::monomial(low_, pq.first, Scalar::one(mode_));
        Element y2 = Element::monomial(low_, pq.second, Scalar::one(mode_));
        for (const FreeWord& w1 : expand_to_basic_words(y1))
            for (const FreeWord& w2 : expand_to_basic_words(y2)) {
                Scalar t = pair_letter_word(last, w2.letters);
                if (t.is_zero()) continue;
                Scalar s = pair_words(prefix, w1.letters);
                if (s.is_zero()) continue;
                total += c * w1.coeff * w2.coeff * s * t;
            }
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Scalar SkewPairing::pair_monomials(const PbwMonomial& x, const PbwMonomial& y) const {
    if (grade(x, up_) != grade(y, low_)) return Scalar::zero(mode_);
    auto key = std::make_pair(x, y);
    auto it = monomial_memo_.find(key);
    if (it != monomial_memo_.end()) return it->second;
    Scalar total = Scalar::zero(mode_);
    const Scalar one = Scalar::one(mode_);
    for (const FreeWord& wl : expand_to_basic_words(Element::monomial(up_, x, one)))
        for (const FreeWord& wr : expand_to_basic_words(Element::monomial(low_, y, one))) {
            Scalar s = pair_words(wl.letters, wr.letters);
            if (!s.is_zero()) total += wl.coeff * wr.coeff * s;
        }
    monomial_memo_.emplace(std::move(key), total);
    return total;
}

Scalar SkewPairing::pair(const Element& x, const Element& y) const {
    if (x.algebra().kind != AlgebraKind::uGeq0 || y.algebra().kind != AlgebraKind::uLeq0)
        throw std::invalid_argument("SkewPairing: arguments must lie in uGeq0 x uLeq0");
    if (!(x.algebra().mode == mode_) || !(y.algebra().mode == mode_))
        throw std::invalid_argument("SkewPairing: field mode mismatch");
    Scalar total = Scalar::zero(mode_);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            Scalar s = pair_monomials(mx, my);
            if (!s.is_zero()) total += cx * cy * s;
        }
    return total;
}

Scalar SkewPairing::pair_inverse(const Element& x, const Element& y) const {
    return pair(antipode(x), y);
}

TensorElement SkewPairing::double_multiply(const Element& a, const Element& x, const Element& b,
                                           const Element& y) const {
    if (a.algebra().kind != AlgebraKind::uGeq0 || b.algebra().kind != AlgebraKind::uGeq0 ||
        x.algebra().kind != AlgebraKind::uLeq0 || y.algebra().kind != AlgebraKind::uLeq0)
        throw std::invalid_argument("double_multiply: leg algebras must be uGeq0 / uLeq0");
    TensorElement out(up_, low_);
    Tensor3Element db = comultiply_left(b);
    Tensor3Element dx = comultiply_left(x);
    const Scalar one = Scalar::one(mode_);
    for (const auto& [bt, cb] : db.terms()) {
        const auto& [b1, b2, b3] = bt;
        Element eb1 = Element::monomial(up_, b1, one);
        Element eb2 = Element::monomial(up_, b2, one);
        Element eb3 = Element::monomial(up_, b3, one);
        for (const auto& [xt, cx] : dx.terms()) {
            const auto& [x1, x2, x3] = xt;
            Scalar f1 = pair(eb1, Element::monomial(low_, x1, one));
            if (f1.is_zero()) continue;
            Scalar f3 = pair_inverse(eb3, Element::monomial(low_, x3, one));
            if (f3.is_zero()) continue;
            Element legl = multiply(a, eb2);
            Element legr = multiply(Element::monomial(low_, x2, one), y);
            Scalar c = cb * cx * f1 * f3;
            for (const auto& [ml, cl] : legl.terms())
                for (const auto& [mr, cr] : legr.terms()) out.add_term(ml, mr, c * cl * cr);
        }
    }
    return out;
}

TensorElement SkewPairing::double_multiply(const TensorElement& p, const TensorElement& pp) const {
    TensorElement out(up_, low_);
    const Scalar one = Scalar::one(mode_);
    for (const auto& [kp, cp] : p.terms())
        for (const auto& [kq, cq] : pp.terms()) {
            TensorElement t = double_multiply(Element::monomial(up_, kp.first, one),
                                              Element::monomial(low_, kp.second, one),
                                              Element::monomial(up_, kq.first, one),
                                              Element::monomial(low_, kq.second, one));
            out = out + t.scaled(cp * cq);
        }
    return out;
}

}  // namespace hopfforge
