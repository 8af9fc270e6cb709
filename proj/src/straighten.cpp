#include "hopfforge/straighten.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hopfforge {

namespace {

struct RuleTerm {
    Scalar coeff;
    std::vector<Letter> letters;
};

bool is_k_letter(Letter g) {
    int p = letter_position(g);
    return p >= 3 && p <= 6;
}

bool is_e_letter(Letter g) { return letter_position(g) >= 7; }
bool is_f_letter(Letter g) { return letter_position(g) <= 2; }

// exponent sign of an inverse group-like letter
int k_sign(Letter g) {
    switch (g) {
        case Letter::K1i:
        case Letter::K2i:
        case Letter::Kt1i:
        case Letter::Kt2i: return -1;
        default: return 1;
    }
}

// index (0 or 1) of the group-like pair a K-letter belongs to
int k_index(Letter g) {
    switch (g) {
        case Letter::K1:
        case Letter::K1i:
        case Letter::Kt1:
        case Letter::Kt1i: return 0;
        default: return 1;
    }
}

// Cartan pairing exponent for moving E_a or F_a past K_i (a = letter index
// 0,1 for the simple root vectors, the composite E12/F12 pair to exponent 1).
int simple_index(Letter g) {
    switch (g) {
        case Letter::E1:
        case Letter::F1: return 0;
        case Letter::E2:
        case Letter::F2: return 1;
        default: return -1;  // composite
    }
}

// K_i x K_i^-1 = q^(c) x  =>  c for x in {E1,E12,E2,F1,F12,F2}
int conjugation_exponent(Letter x, int i) {
    int a = simple_index(x);
    int base = (a < 0) ? 1 : kCartan[a][i];  // composite letters conjugate by q^{+-1}
    return is_e_letter(x) ? base : -base;
}

// The group-like letter appearing in the E1/F1 commutator alongside K1:
// K1^-1 in U and its quotients, Kt1^-1 in the double crossproduct.
Letter commutator_partner(const AlgebraId& A) {
    return A.has_kt() ? Letter::Kt1i : Letter::K1i;
}

std::vector<RuleTerm> rewrite_pair(Letter X, Letter Y, const AlgebraId& A) {
    const FieldMode& m = A.mode;
    auto qp = [&](long e) { return Scalar::q_power(e, m); };
    const Scalar one = Scalar::one(m);

    // E past K / Kt: E K^eps = q^(-eps*c) K^eps E
    if (is_e_letter(X) && is_k_letter(Y)) {
        int c = conjugation_exponent(X, k_index(Y));
        return {{qp(-k_sign(Y) * c), {Y, X}}};
    }
    // K / Kt past F: K^eps F = q^(eps*c) F K^eps  (c is the F conjugation exponent)
    if (is_k_letter(X) && is_f_letter(Y)) {
        int c = conjugation_exponent(Y, k_index(X));
        return {{qp(k_sign(X) * c), {Y, X}}};
    }
    // commuting group-likes
    if (is_k_letter(X) && is_k_letter(Y)) return {{one, {Y, X}}};

    // E block: E12 E1 = q^-1 E1 E12, E2 E1 = q E1 E2 - q E12, E2 E12 = q^-1 E12 E2
    if (X == Letter::E12 && Y == Letter::E1) return {{qp(-1), {Y, X}}};
    if (X == Letter::E2 && Y == Letter::E1)
        return {{qp(1), {Letter::E1, Letter::E2}}, {-qp(1), {Letter::E12}}};
    if (X == Letter::E2 && Y == Letter::E12) return {{qp(-1), {Y, X}}};

    // F block: F12 F1 = q^-1 F1 F12, F2 F1 = F12 + q F1 F2, F2 F12 = q^-1 F12 F2
    if (X == Letter::F12 && Y == Letter::F1) return {{qp(-1), {Y, X}}};
    if (X == Letter::F2 && Y == Letter::F1)
        return {{one, {Letter::F12}}, {qp(1), {Letter::F1, Letter::F2}}};
    if (X == Letter::F2 && Y == Letter::F12) return {{qp(-1), {Y, X}}};

    if (is_e_letter(X) && is_f_letter(Y)) {
        Scalar inv_qq = (qp(1) - qp(-1)).inverse();
        // E1 F1 = F1 E1 + (K1 - K1^-1)/(q - q^-1), with Kt1^-1 in Dphi
        if (X == Letter::E1 && Y == Letter::F1)
            return {{one, {Letter::F1, Letter::E1}},
                    {inv_qq, {Letter::K1}},
                    {-inv_qq, {commutator_partner(A)}}};
        // E1 F12 = F12 E1 - K1 F2
        if (X == Letter::E1 && Y == Letter::F12)
            return {{one, {Letter::F12, Letter::E1}}, {-one, {Letter::K1, Letter::F2}}};
        // E12 F1 = F1 E12 - E2 K1^-1 (Kt1^-1 in Dphi)
        if (X == Letter::E12 && Y == Letter::F1)
            return {{one, {Letter::F1, Letter::E12}},
                    {-one, {Letter::E2, commutator_partner(A)}}};
        // every other E/F pair commutes
        return {{one, {Y, X}}};
    }

    throw std::logic_error("rewrite_pair: no rule for " + letter_name(X) + "*" + letter_name(Y));
}

// Fold a sorted word into a PBW monomial respecting the quotient bounds;
// returns false when the term vanishes (an l-th power of a root vector).
bool collect_sorted(const std::vector<Letter>& w, const AlgebraId& A, PbwMonomial& out) {
    PbwMonomial m;
    for (Letter g : w) {
        switch (g) {
            case Letter::F1: ++m.f[0]; break;
            case Letter::F12: ++m.f[1]; break;
            case Letter::F2: ++m.f[2]; break;
            case Letter::K1: ++m.k[0]; break;
            case Letter::K1i: --m.k[0]; break;
            case Letter::K2: ++m.k[1]; break;
            case Letter::K2i: --m.k[1]; break;
            case Letter::Kt1: ++m.kt[0]; break;
            case Letter::Kt1i: --m.kt[0]; break;
            case Letter::Kt2: ++m.kt[1]; break;
            case Letter::Kt2i: --m.kt[1]; break;
            case Letter::E1: ++m.e[0]; break;
            case Letter::E12: ++m.e[1]; break;
            case Letter::E2: ++m.e[2]; break;
        }
    }
    if (A.is_quotient()) {
        const int l = A.l();
        for (int x : m.f)
            if (x >= l) return false;
        for (int x : m.e)
            if (x >= l) return false;
        m.k[0] = static_cast<int>(mod_nonneg(m.k[0], l));
        m.k[1] = static_cast<int>(mod_nonneg(m.k[1], l));
        m.kt[0] = static_cast<int>(mod_nonneg(m.kt[0], l));
        m.kt[1] = static_cast<int>(mod_nonneg(m.kt[1], l));
    }
    out = m;
    return true;
}

void straighten_into(std::vector<FreeWord>& work, const AlgebraId& A, Element& out) {
    while (!work.empty()) {
        FreeWord w = std::move(work.back());
        work.pop_back();
        if (w.coeff.is_zero()) continue;
        size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.letters.size(); ++i) {
            if (letter_position(w.letters[i]) > letter_position(w.letters[i + 1])) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            PbwMonomial m;
            if (collect_sorted(w.letters, A, m)) out.add_term(m, w.coeff);
            continue;
        }
        auto terms = rewrite_pair(w.letters[i], w.letters[i + 1], A);
        for (auto& t : terms) {
            FreeWord nw;
            nw.coeff = w.coeff * t.coeff;
            nw.letters.reserve(w.letters.size() + t.letters.size());
            nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + i);
            nw.letters.insert(nw.letters.end(), t.letters.begin(), t.letters.end());
            nw.letters.insert(nw.letters.end(), w.letters.begin() + i + 2, w.letters.end());
            work.push_back(std::move(nw));
        }
    }
}

}  // namespace

Element normal_form(const std::vector<FreeWord>& ws, const AlgebraId& A) {
    std::vector<FreeWord> work;
    work.reserve(ws.size());
    for (const auto& w : ws) {
        if (!(w.coeff.mode() == A.mode))
            throw std::invalid_argument("normal_form: coefficient mode mismatch");
        for (Letter g : w.letters) {
            if (!letter_legal(g, A))
                throw std::invalid_argument("normal_form: illegal letter " + letter_name(g) +
                                            " for " + algebra_kind_name(A.kind));
        }
        work.push_back(w);
    }
    Element out(A);
    straighten_into(work, A, out);
    return out;
}

Element normal_form(const FreeWord& w, const AlgebraId& A) {
    return normal_form(std::vector<FreeWord>{w}, A);
}

namespace {

// Memoized straightenings of the three nontrivial junctions of a monomial
// product: the E-block against F-block crossing and the two block-internal
// reorderings. Group-like letters only contribute scalar twists, so a
// monomial product reduces to cache lookups plus exponent bookkeeping.
struct JunctionCache {
    std::mutex mu;
    std::map<std::tuple<AlgebraKind, FieldMode::Kind, int, std::array<int, 3>, std::array<int, 3>>,
             Element>
        ef, ff, ee;
};

JunctionCache& junction_cache() {
    static JunctionCache c;
    return c;
}

enum class JunctionKind { EF, FF, EE };

const Element& cached_junction(JunctionKind kind, const AlgebraId& A,
                               const std::array<int, 3>& left, const std::array<int, 3>& right) {
    JunctionCache& jc = junction_cache();
    auto& table = kind == JunctionKind::EF ? jc.ef : kind == JunctionKind::FF ? jc.ff : jc.ee;
    auto key = std::make_tuple(A.kind, A.mode.kind, A.mode.l, left, right);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    PbwMonomial ml, mr;
    if (kind == JunctionKind::FF)
        ml.f = left;
    else
        ml.e = left;
    if (kind == JunctionKind::EE)
        mr.e = right;
    else
        mr.f = right;
    std::vector<Letter> w = monomial_letters(ml);
    std::vector<Letter> wr = monomial_letters(mr);
    w.insert(w.end(), wr.begin(), wr.end());
    std::vector<FreeWord> work{FreeWord(Scalar::one(A.mode), std::move(w))};
    Element out(A);
    straighten_into(work, A, out);
    return table.emplace(std::move(key), std::move(out)).first->second;
}

// conjugation exponent of a whole block: K_i (block) K_i^-1 = q^(sum) (block)
long block_conjugation(const std::array<int, 3>& exps, int i, bool e_block) {
    Letter first = e_block ? Letter::E1 : Letter::F1;
    Letter mid = e_block ? Letter::E12 : Letter::F12;
    Letter last = e_block ? Letter::E2 : Letter::F2;
    return static_cast<long>(exps[0]) * conjugation_exponent(first, i) +
           static_cast<long>(exps[1]) * conjugation_exponent(mid, i) +
           static_cast<long>(exps[2]) * conjugation_exponent(last, i);
}

Element multiply_monomials(const AlgebraId& A, const PbwMonomial& m1, const Scalar& c1,
                           const PbwMonomial& m2, const Scalar& c2) {
    JunctionCache& jc = junction_cache();
    std::lock_guard<std::mutex> lock(jc.mu);
    const FieldMode& fm = A.mode;
    Element out(A);
    const Element& cross = cached_junction(JunctionKind::EF, A, m1.e, m2.f);
    for (const auto& [mid, cmid] : cross.terms()) {
        // assemble F^a K^(r) [F^f K^k E^eps] K^(r') E^e with scalar K-moves
        long twist = 0;
        for (int i = 0; i < 2; ++i) {
            // K^r and Kt^r of the left factor move right past the emitted F-block
            twist += (static_cast<long>(m1.k[i]) + m1.kt[i]) * block_conjugation(mid.f, i, false);
            // the emitted E-block moves right past K^(r') and Kt^(r') of the right factor
            twist -= (static_cast<long>(m2.k[i]) + m2.kt[i]) * block_conjugation(mid.e, i, true);
        }
        Scalar coeff = c1 * c2 * cmid * Scalar::q_power(twist, fm);
        PbwMonomial base;
        for (int i = 0; i < 2; ++i) {
            long k = static_cast<long>(m1.k[i]) + mid.k[i] + m2.k[i];
            long kt = static_cast<long>(m1.kt[i]) + mid.kt[i] + m2.kt[i];
            if (A.is_quotient()) {
                k = mod_nonneg(k, A.l());
                kt = mod_nonneg(kt, A.l());
            }
            base.k[i] = static_cast<int>(k);
            base.kt[i] = static_cast<int>(kt);
        }
        const Element& fprod = cached_junction(JunctionKind::FF, A, m1.f, mid.f);
        const Element& eprod = cached_junction(JunctionKind::EE, A, mid.e, m2.e);
        for (const auto& [fmon, cf] : fprod.terms()) {
            Scalar cleft = coeff * cf;
            for (const auto& [emon, ce] : eprod.terms()) {
                PbwMonomial m = base;
                m.f = fmon.f;
                m.e = emon.e;
                out.add_term(m, cleft * ce);
            }
        }
    }
    return out;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
    if (!(a.algebra() == b.algebra())) throw std::invalid_argument("multiply: algebra mismatch");
    const AlgebraId& A = a.algebra();
    Element out(A);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out += multiply_monomials(A, ma, ca, mb, cb);
    return out;
}

bool central_check(const Element& x) {
    const AlgebraId& A = x.algebra();
    static const Letter candidates[] = {Letter::F1, Letter::F2, Letter::K1, Letter::K2,
                                        Letter::Kt1, Letter::Kt2, Letter::E1, Letter::E2};
    for (Letter g : candidates) {
        if (!letter_legal(g, A)) continue;
        Element gen = Element::generator(A, g);
        if (multiply(x, gen) != multiply(gen, x)) return false;
    }
    return true;
}

std::pair<int, int> grade(const PbwMonomial& m, const AlgebraId& A) {
    if (A.kind == AlgebraKind::uGeq0) return {m.e[0] + m.e[1], m.e[1] + m.e[2]};
    if (A.kind == AlgebraKind::uLeq0) return {m.f[0] + m.f[1], m.f[1] + m.f[2]};
    throw std::invalid_argument("grade: defined on the Borel halves only");
}

unsigned long long basis_count(const AlgebraId& A, int cap) {
    if (A.kind == AlgebraKind::U) {
        if (cap < 0) throw std::invalid_argument("basis_count: U requires an explicit cap");
        unsigned long long ef = 1, kk = 1;
        for (int i = 0; i < 6; ++i) ef *= static_cast<unsigned long long>(cap) + 1;
        for (int i = 0; i < 2; ++i) kk *= 2ull * cap + 1;
        return ef * kk;
    }
    unsigned long long l = static_cast<unsigned long long>(A.l());
    switch (A.kind) {
        case AlgebraKind::u: {
            unsigned long long n = 1;
            for (int i = 0; i < 8; ++i) n *= l;
            return n;
        }
        case AlgebraKind::uGeq0:
        case AlgebraKind::uLeq0: {
            unsigned long long n = 1;
            for (int i = 0; i < 5; ++i) n *= l;
            return n;
        }
        case AlgebraKind::u1: return l * l * l;
        case AlgebraKind::Dphi: {
            unsigned long long n = 1;
            for (int i = 0; i < 10; ++i) n *= l;
            return n;
        }
        default: throw std::logic_error("basis_count");
    }
}

void for_each_basis_monomial(const AlgebraId& A,
                             const std::function<void(const PbwMonomial&)>& fn, int cap) {
    int flo[3] = {0, 0, 0}, fhi[3], elo[3] = {0, 0, 0}, ehi[3], klo[2], khi[2], ktlo[2] = {0, 0},
        kthi[2] = {0, 0};
    if (A.kind == AlgebraKind::U) {
        if (cap < 0) throw std::invalid_argument("for_each_basis_monomial: U requires a cap");
        for (int i = 0; i < 3; ++i) fhi[i] = ehi[i] = cap;
        klo[0] = klo[1] = -cap;
        khi[0] = khi[1] = cap;
    } else {
        const int l = A.l();
        for (int i = 0; i < 3; ++i) fhi[i] = ehi[i] = l - 1;
        klo[0] = klo[1] = 0;
        khi[0] = khi[1] = l - 1;
        if (A.has_kt()) kthi[0] = kthi[1] = l - 1;
        if (A.kind == AlgebraKind::uGeq0)
            fhi[0] = fhi[1] = fhi[2] = 0;
        else if (A.kind == AlgebraKind::uLeq0)
            ehi[0] = ehi[1] = ehi[2] = 0;
        else if (A.kind == AlgebraKind::u1) {
            fhi[1] = fhi[2] = ehi[1] = ehi[2] = 0;
            khi[1] = 0;
        }
    }
    PbwMonomial m;
    for (m.f[0] = flo[0]; m.f[0] <= fhi[0]; ++m.f[0])
        for (m.f[1] = flo[1]; m.f[1] <= fhi[1]; ++m.f[1])
            for (m.f[2] = flo[2]; m.f[2] <= fhi[2]; ++m.f[2])
                for (m.k[0] = klo[0]; m.k[0] <= khi[0]; ++m.k[0])
                    for (m.k[1] = klo[1]; m.k[1] <= khi[1]; ++m.k[1])
                        for (m.kt[0] = ktlo[0]; m.kt[0] <= kthi[0]; ++m.kt[0])
                            for (m.kt[1] = ktlo[1]; m.kt[1] <= kthi[1]; ++m.kt[1])
                                for (m.e[0] = elo[0]; m.e[0] <= ehi[0]; ++m.e[0])
                                    for (m.e[1] = elo[1]; m.e[1] <= ehi[1]; ++m.e[1])
                                        for (m.e[2] = elo[2]; m.e[2] <= ehi[2]; ++m.e[2]) fn(m);
}

namespace {

// (g, chi) data of a root vector: exponents of (g1, g2) and of (chi1, chi2).
struct RootDatum {
    int g[2];
    int chi[2];
};

RootDatum root_datum(Letter x) {
    switch (x) {
        case Letter::E1: return {{1, 0}, {1, 0}};
        case Letter::E2: return {{0, 1}, {0, 1}};
        case Letter::E12: return {{1, 1}, {1, 1}};
        case Letter::F1: return {{1, 0}, {-1, 0}};
        case Letter::F2: return {{0, 1}, {0, -1}};
        case Letter::F12: return {{1, 1}, {-1, -1}};
        default: throw std::invalid_argument("root_datum: not a root vector letter");
    }
}

}  // namespace

bool qcommutator_check(const AlgebraId& A, Letter alpha, Letter beta, long N) {
    if (!A.mode.is_root()) throw std::invalid_argument("qcommutator_check: root mode required");
    if (N != A.l()) throw std::invalid_argument("qcommutator_check: N must equal the root order");
    RootDatum da = root_datum(alpha), db = root_datum(beta);
    long pairing = 0;  // chi_beta(g_alpha) = q^pairing
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) pairing += static_cast<long>(da.g[i]) * kCartan[i][j] * db.chi[j];
    Scalar q_ab_N = Scalar::q_power(pairing * N, A.mode);

    std::vector<Letter> left{alpha}, right;
    for (long i = 0; i < N; ++i) left.push_back(beta);
    for (long i = 0; i < N; ++i) right.push_back(beta);
    right.push_back(alpha);
    Element lhs = normal_form(FreeWord(Scalar::one(A.mode), left), A);
    Element rhs = normal_form(FreeWord(q_ab_N, right), A);
    return (lhs - rhs).is_zero();
}

Element group_bracket(const AlgebraId& A, int which, bool inverted, long r) {
    if (which != 1 && which != 2) throw std::invalid_argument("group_bracket: which must be 1 or 2");
    const FieldMode& m = A.mode;
    Scalar inv_qq = (Scalar::q_power(1, m) - Scalar::q_power(-1, m)).inverse();
    Letter base = which == 1 ? Letter::K1 : Letter::K2;
    Letter binv = which == 1 ? Letter::K1i : Letter::K2i;
    Letter first = inverted ? binv : base;
    Letter second = inverted ? base : binv;
    // [K^e; r] = (K^e q^r - K^-e q^-r)/(q - q^-1)
    return normal_form({FreeWord(Scalar::q_power(r, m) * inv_qq, {first}),
                        FreeWord(-Scalar::q_power(-r, m) * inv_qq, {second})},
                       A);
}

Element e_power_monomial(const AlgebraId& A, int s1, int s2, int s3) {
    PbwMonomial m;
    m.e = {s1, s2, s3};
    if (!monomial_in_bounds(m, A)) return Element::zero(A);
    return Element::monomial(A, m, Scalar::one(A.mode));
}

Element f_power_monomial(const AlgebraId& A, int t1, int t2, int t3) {
    PbwMonomial m;
    m.f = {t1, t2, t3};
    if (!monomial_in_bounds(m, A)) return Element::zero(A);
    return Element::monomial(A, m, Scalar::one(A.mode));
}

}  // namespace hopfforge
