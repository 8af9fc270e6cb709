#include "hopfforge/verma.hpp"

#include "hopfforge/matrix.hpp"
#include "hopfforge/qcomb.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfforge {

Character Character::make(const Scalar& k1, const Scalar& k2) {
    if (k1.is_zero() || k2.is_zero())
        throw std::invalid_argument("Character: group-like values must be nonzero");
    if (!(k1.mode() == k2.mode())) throw std::invalid_argument("Character: mode mismatch");
    return Character{k1, k2};
}

std::string Character::to_string() const {
    return "(" + k1.to_string() + ", " + k2.to_string() + ")";
}

Character weight_character(long m1, long m2, const FieldMode& m) {
    // (w_i, alpha_j) runs through the Cartan matrix rows
    return Character::make(Scalar::q_power(2 * m1 - m2, m), Scalar::q_power(-m1 + 2 * m2, m));
}

FreeVermaVector::FreeVermaVector(AlgebraId alg, Character lambda)
    : alg_(std::move(alg)), lambda_(std::move(lambda)) {
    if (alg_.kind != AlgebraKind::U && alg_.kind != AlgebraKind::u)
        throw std::invalid_argument("FreeVermaVector: algebra must be U or u");
    if (!(lambda_.mode() == alg_.mode))
        throw std::invalid_argument("FreeVermaVector: character mode mismatch");
    if (alg_.kind == AlgebraKind::u) {
        // characters of u-modules take l-th roots of unity on the group-likes
        if (!lambda_.k1.pow(alg_.l()).is_one() || !lambda_.k2.pow(alg_.l()).is_one())
            throw std::invalid_argument("FreeVermaVector: character is not an l-torsion point");
    }
}

FreeVermaVector FreeVermaVector::cyclic(const AlgebraId& alg, const Character& lambda) {
    FreeVermaVector v(alg, lambda);
    v.add_term({0, 0, 0}, Scalar::one(alg.mode));
    return v;
}

void FreeVermaVector::add_term(const FExp& t, const Scalar& c) {
    if (c.is_zero()) return;
    if (alg_.kind == AlgebraKind::u) {
        for (int x : t)
            if (x >= alg_.l()) throw std::invalid_argument("FreeVermaVector: exponent out of range");
    }
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeVermaVector FreeVermaVector::operator+(const FreeVermaVector& o) const {
    FreeVermaVector r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

FreeVermaVector FreeVermaVector::operator-(const FreeVermaVector& o) const {
    FreeVermaVector r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

FreeVermaVector FreeVermaVector::scaled(const Scalar& c) const {
    FreeVermaVector r(alg_, lambda_);
    if (c.is_zero()) return r;
    for (const auto& [t, x] : terms_) r.terms_.emplace(t, x * c);
    return r;
}

bool FreeVermaVector::operator==(const FreeVermaVector& o) const {
    return alg_ == o.alg_ && lambda_ == o.lambda_ && terms_ == o.terms_;
}

std::string FreeVermaVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*";
        PbwMonomial m;
        m.f = t;
        out << (m.is_unit() ? "v" : m.to_string() + "*v");
    }
    return out.str();
}

FreeVermaVector verma_act_word(const std::vector<Letter>& word, const FreeVermaVector& w) {
    const AlgebraId& A = w.algebra();
    const Character& lam = w.character();
    FreeVermaVector out(A, lam);
    for (const auto& [t, c] : w.terms()) {
        std::vector<Letter> full = word;
        PbwMonomial fm;
        fm.f = t;
        std::vector<Letter> tail = monomial_letters(fm);
        full.insert(full.end(), tail.begin(), tail.end());
        Element nf = normal_form(FreeWord(c, full), A);
        for (const auto& [mon, c2] : nf.terms()) {
            if (mon.e != std::array<int, 3>{0, 0, 0}) continue;  // E-part kills the cyclic vector
            Scalar val = c2 * lam.k1.pow(mon.k[0]) * lam.k2.pow(mon.k[1]);
            out.add_term(mon.f, val);
        }
    }
    return out;
}

FreeVermaVector verma_act(Letter g, const FreeVermaVector& w) {
    return verma_act_word({g}, w);
}

FreeVermaVector verma_act_element(const Element& x, const FreeVermaVector& w) {
    if (!(x.algebra() == w.algebra())) throw std::invalid_argument("verma_act_element: algebra mismatch");
    FreeVermaVector out(w.algebra(), w.character());
    for (const auto& [mon, c] : x.terms())
        out = out + verma_act_word(monomial_letters(mon), w).scaled(c);
    return out;
}

Character basis_weight(const Character& lambda, const FExp& t, const FieldMode& m) {
    // K1 F1 = q^-2 F1 K1, K1 F12 = q^-1 F12 K1, K1 F2 = q F2 K1 and dually
    long e1 = -2L * t[0] - t[1] + t[2];
    long e2 = static_cast<long>(t[0]) - t[1] - 2L * t[2];
    return Character::make(lambda.k1 * Scalar::q_power(e1, m), lambda.k2 * Scalar::q_power(e2, m));
}

std::optional<Character> vector_weight(const FreeVermaVector& w) {
    if (w.is_zero()) return std::nullopt;
    const FieldMode& m = w.algebra().mode;
    std::optional<Character> weight;
    for (const auto& [t, c] : w.terms()) {
        Character bw = basis_weight(w.character(), t, m);
        if (!weight)
            weight = bw;
        else if (!(*weight == bw))
            return std::nullopt;
    }
    return weight;
}

FreeVermaVector hw_vector_vn(const Character& lambda, int n) {
    if (!lambda.mode().is_generic())
        throw std::invalid_argument("hw_vector_vn: generic mode required (q of infinite order)");
    if (n < 0) throw std::invalid_argument("hw_vector_vn: n must be non-negative");
    const FieldMode& m = lambda.mode();
    AlgebraId A = AlgebraId::make(AlgebraKind::U, m);
    FreeVermaVector v = FreeVermaVector::cyclic(A, lambda);
    FreeVermaVector out(A, lambda);
    for (int i = 0; i <= n; ++i) {
        // a_i = q^-(n-i) lambda1^-(n-i) [n-i]! [n over n-i] [lambda1;1 over n-i]
        long d = n - i;
        Scalar a = Scalar::q_power(-d, m) * lambda.k1.pow(-d) * q_factorial(d, m) *
                   q_binomial(n, d, m) * q_binomial_a(lambda.k1, 1, d);
        std::vector<Letter> word;
        for (int r = 0; r < i; ++r) word.push_back(Letter::F1);
        for (int r = 0; r < i; ++r) word.push_back(Letter::F2);
        for (int r = 0; r < n - i; ++r) word.push_back(Letter::F12);
        out = out + verma_act_word(word, v).scaled(a);
    }
    return out;
}

bool check_highest_weight(const FreeVermaVector& w) {
    if (w.is_zero()) throw std::invalid_argument("check_highest_weight: zero vector");
    if (!vector_weight(w)) return false;
    return verma_act(Letter::E1, w).is_zero() && verma_act(Letter::E2, w).is_zero();
}

FreeVermaVector reduce_filtration(const FreeVermaVector& w, int n) {
    FreeVermaVector out(w.algebra(), w.character());
    for (const auto& [t, c] : w.terms()) {
        if (t[1] + t[2] <= n) out.add_term(t, c);
    }
    return out;
}

std::vector<FExp> weight_space_exponents(int i, int j) {
    std::vector<FExp> out;
    for (int t2 = 0; t2 <= std::min(i, j); ++t2)
        out.push_back(FExp{i - t2, t2, j - t2});
    return out;
}

std::vector<FreeVermaVector> weight_space_vn_family(const Character& lambda, int i, int j) {
    std::vector<FreeVermaVector> out;
    for (int s = 0; s <= std::min(i, j); ++s) {
        FreeVermaVector vs = hw_vector_vn(lambda, s);
        std::vector<Letter> word;
        for (int r = 0; r < i - s; ++r) word.push_back(Letter::F1);
        for (int r = 0; r < j - s; ++r) word.push_back(Letter::F2);
        out.push_back(verma_act_word(word, vs));
    }
    return out;
}

std::vector<E1KernelEntry> kernel_of_E1_in_verma(const Character& lambda, int cap) {
    if (!lambda.mode().is_generic())
        throw std::invalid_argument("kernel_of_E1_in_verma: generic mode required");
    const FieldMode& m = lambda.mode();
    AlgebraId A = AlgebraId::make(AlgebraKind::U, m);
    std::vector<E1KernelEntry> out;
    for (int i = 0; i <= cap; ++i) {
        for (int j = 0; i + j <= cap; ++j) {
            std::vector<FExp> source = weight_space_exponents(i, j);
            std::vector<FExp> target = weight_space_exponents(i - 1, j);
            std::map<FExp, size_t> tindex;
            for (size_t r = 0; r < target.size(); ++r) tindex[target[r]] = r;
            // E1 drops (i, j) to (i-1, j)
            Matrix E1(target.size(), source.size(), m);
            for (size_t cidx = 0; cidx < source.size(); ++cidx) {
                FreeVermaVector b(A, lambda);
                b.add_term(source[cidx], Scalar::one(m));
                FreeVermaVector img = verma_act(Letter::E1, b);
                for (const auto& [t, c] : img.terms()) E1.at(tindex.at(t), cidx) = c;
            }
            auto kernel = E1.kernel();
            if (kernel.empty()) continue;
            // change of basis into the v_s family
            std::vector<FreeVermaVector> family = weight_space_vn_family(lambda, i, j);
            Matrix V(source.size(), family.size(), m);
            std::map<FExp, size_t> sindex;
            for (size_t r = 0; r < source.size(); ++r) sindex[source[r]] = r;
            for (size_t cidx = 0; cidx < family.size(); ++cidx)
                for (const auto& [t, c] : family[cidx].terms()) V.at(sindex.at(t), cidx) = c;
            Matrix Vinv = V.inverse();  // the family is a basis of the weight space
            E1KernelEntry entry{i, j, {}};
            for (const auto& kv : kernel) entry.vn_coords.push_back(Vinv.apply(kv));
            out.push_back(std::move(entry));
        }
    }
    return out;
}

bool check_filtration_component(const Character& lambda, int t2, int t3, int window,
                                Character* lambda_out) {
    if (!lambda.mode().is_generic())
        throw std::invalid_argument("check_filtration_component: generic mode required");
    const FieldMode& m = lambda.mode();
    const int n = t2 + t3;
    Character lp = Character::make(lambda.k1 * Scalar::q_power(t3 - t2, m),
                                   lambda.k2 * Scalar::q_power(-t2 - 2L * t3, m));
    if (lambda_out) *lambda_out = lp;

    AlgebraId A = AlgebraId::make(AlgebraKind::U, m);
    FreeVermaVector vt2 = hw_vector_vn(lambda, t2);
    // f(u_i) = F1^i F2^t3 . v_t2 reduced modulo the next filtration step
    auto f_of = [&](int i) {
        std::vector<Letter> word;
        for (int r = 0; r < i; ++r) word.push_back(Letter::F1);
        for (int r = 0; r < t3; ++r) word.push_back(Letter::F2);
        return reduce_filtration(verma_act_word(word, vt2), n);
    };
    std::vector<FreeVermaVector> fu;
    for (int i = 0; i <= window + 1; ++i) fu.push_back(f_of(i));

    for (int i = 0; i <= window; ++i) {
        // u_i is a weight vector of V(lambda'): K1 u_i = lambda1' q^-2i u_i, K2 u_i = lambda2' q^i u_i
        FreeVermaVector k1 = reduce_filtration(verma_act(Letter::K1, fu[i]), n);
        if (!(k1 == fu[i].scaled(lp.k1 * Scalar::q_power(-2L * i, m)))) return false;
        FreeVermaVector k2 = reduce_filtration(verma_act(Letter::K2, fu[i]), n);
        if (!(k2 == fu[i].scaled(lp.k2 * Scalar::q_power(i, m)))) return false;
        // F1 u_i = u_{i+1}
        FreeVermaVector f1 = reduce_filtration(verma_act(Letter::F1, fu[i]), n);
        if (!(f1 == fu[i + 1])) return false;
        // E1 u_i = [i][lambda1'; 1-i] u_{i-1}
        FreeVermaVector e1 = reduce_filtration(verma_act(Letter::E1, fu[i]), n);
        FreeVermaVector expect = (i == 0)
                                     ? FreeVermaVector(A, lambda)
                                     : fu[i - 1].scaled(q_int(i, m) * q_bracket_a(lp.k1, 1 - i));
        if (!(e1 == expect)) return false;
        // E2 and F2 act by zero on the component
        if (!reduce_filtration(verma_act(Letter::E2, fu[i]), n).is_zero()) return false;
        if (!reduce_filtration(verma_act(Letter::F2, fu[i]), n).is_zero()) return false;
    }
    return true;
}

}  // namespace hopfforge
