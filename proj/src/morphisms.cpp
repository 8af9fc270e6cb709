#include "hopfforge/morphisms.hpp"

#include "hopfforge/qcomb.hpp"

#include <stdexcept>

namespace hopfforge {

CentralParameter CentralParameter::make(const Scalar& z1, const Scalar& z2) {
    if (!z1.mode().is_root() || !(z1.mode() == z2.mode()))
        throw std::invalid_argument("CentralParameter: root-of-unity scalars required");
    if (!z1.as_zeta_power() || !z2.as_zeta_power())
        throw std::invalid_argument("CentralParameter: z_i must be l-th roots of unity");
    return CentralParameter{z1, z2};
}

CentralParameter CentralParameter::trivial(const FieldMode& m) {
    return CentralParameter{Scalar::one(m), Scalar::one(m)};
}

std::vector<RelationPair> dphi_relations(const FieldMode& m) {
    if (!m.is_root()) throw std::invalid_argument("dphi_relations: root mode required");
    const int l = m.l;
    const Scalar one = Scalar::one(m);
    auto qp = [&](long e) { return Scalar::q_power(e, m); };
    std::vector<RelationPair> rels;
    auto add = [&](std::string name, std::vector<FreeWord> lhs, std::vector<FreeWord> rhs) {
        rels.push_back(RelationPair{std::move(name), std::move(lhs), std::move(rhs)});
    };
    const Letter K[2] = {Letter::K1, Letter::K2};
    const Letter Ki[2] = {Letter::K1i, Letter::K2i};
    const Letter Kt[2] = {Letter::Kt1, Letter::Kt2};
    const Letter Kti[2] = {Letter::Kt1i, Letter::Kt2i};
    const Letter E[2] = {Letter::E1, Letter::E2};
    const Letter F[2] = {Letter::F1, Letter::F2};

    for (int i = 0; i < 2; ++i) {
        add("K" + std::to_string(i + 1) + " inverse", {FreeWord(one, {K[i], Ki[i]})},
            {FreeWord(one, {})});
        add("Kt" + std::to_string(i + 1) + " inverse", {FreeWord(one, {Kt[i], Kti[i]})},
            {FreeWord(one, {})});
        for (int j = 0; j < 2; ++j) {
            add("K commute", {FreeWord(one, {K[i], Kt[j]})}, {FreeWord(one, {Kt[j], K[i]})});
            if (i < j) {
                add("KK commute", {FreeWord(one, {K[i], K[j]})}, {FreeWord(one, {K[j], K[i]})});
                add("KtKt commute", {FreeWord(one, {Kt[i], Kt[j]})},
                    {FreeWord(one, {Kt[j], Kt[i]})});
            }
            // K_i E_j = q^{a_ji} E_j K_i and the Kt / F versions
            add("K conj E", {FreeWord(one, {K[i], E[j]})},
                {FreeWord(qp(kCartan[j][i]), {E[j], K[i]})});
            add("Kt conj E", {FreeWord(one, {Kt[i], E[j]})},
                {FreeWord(qp(kCartan[j][i]), {E[j], Kt[i]})});
            add("K conj F", {FreeWord(one, {K[i], F[j]})},
                {FreeWord(qp(-kCartan[j][i]), {F[j], K[i]})});
            add("Kt conj F", {FreeWord(one, {Kt[i], F[j]})},
                {FreeWord(qp(-kCartan[j][i]), {F[j], Kt[i]})});
        }
    }
    // E_i F_j - F_j E_i = delta_ij delta_i1 (K_1 - Kt_1^-1)/(q - q^-1)
    Scalar inv_qq = (qp(1) - qp(-1)).inverse();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<FreeWord> rhs;
            if (i == 0 && j == 0) {
                rhs.push_back(FreeWord(inv_qq, {Letter::K1}));
                rhs.push_back(FreeWord(-inv_qq, {Letter::Kt1i}));
            }
            add("EF commutator " + std::to_string(i + 1) + std::to_string(j + 1),
                {FreeWord(one, {E[i], F[j]}), FreeWord(-one, {F[j], E[i]})}, std::move(rhs));
        }
    // Serre relations of both halves
    Scalar two = q_int(2, m);
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        add("E Serre " + std::to_string(i + 1),
            {FreeWord(one, {E[i], E[i], E[j]}), FreeWord(-two, {E[i], E[j], E[i]}),
             FreeWord(one, {E[j], E[i], E[i]})},
            {});
        add("F Serre " + std::to_string(i + 1),
            {FreeWord(one, {F[i], F[i], F[j]}), FreeWord(-two, {F[i], F[j], F[i]}),
             FreeWord(one, {F[j], F[i], F[i]})},
            {});
    }
    // l-th powers
    for (int i = 0; i < 2; ++i) {
        std::vector<Letter> el(l, E[i]), fl(l, F[i]), kl(l, K[i]), ktl(l, Kt[i]);
        add("E^l", {FreeWord(one, el)}, {});
        add("F^l", {FreeWord(one, fl)}, {});
        add("K^l", {FreeWord(one, kl)}, {FreeWord(one, {})});
        add("Kt^l", {FreeWord(one, ktl)}, {FreeWord(one, {})});
    }
    return rels;
}

std::vector<RelationPair> algebra_relations(const AlgebraId& A) {
    if (A.kind == AlgebraKind::Dphi) return dphi_relations(A.mode);
    const FieldMode& m = A.mode;
    const Scalar one = Scalar::one(m);
    auto qp = [&](long e) { return Scalar::q_power(e, m); };
    std::vector<RelationPair> rels;
    auto add = [&](std::string name, std::vector<FreeWord> lhs, std::vector<FreeWord> rhs) {
        rels.push_back(RelationPair{std::move(name), std::move(lhs), std::move(rhs)});
    };
    const Letter K[2] = {Letter::K1, Letter::K2};
    const Letter Ki[2] = {Letter::K1i, Letter::K2i};
    const Letter E[2] = {Letter::E1, Letter::E2};
    const Letter F[2] = {Letter::F1, Letter::F2};
    const bool u1 = A.kind == AlgebraKind::u1;
    const bool has_e = A.kind != AlgebraKind::uLeq0;
    const bool has_f = A.kind != AlgebraKind::uGeq0;
    const int nidx = u1 ? 1 : 2;

    for (int i = 0; i < nidx; ++i) {
        add("K inverse", {FreeWord(one, {K[i], Ki[i]})}, {FreeWord(one, {})});
        for (int j = 0; j < nidx; ++j) {
            if (i < j)
                add("KK commute", {FreeWord(one, {K[i], K[j]})}, {FreeWord(one, {K[j], K[i]})});
            if (has_e)
                add("K conj E", {FreeWord(one, {K[i], E[j]})},
                    {FreeWord(qp(kCartan[j][i]), {E[j], K[i]})});
            if (has_f)
                add("K conj F", {FreeWord(one, {K[i], F[j]})},
                    {FreeWord(qp(-kCartan[j][i]), {F[j], K[i]})});
        }
    }
    if (has_e && has_f) {
        Scalar inv_qq = (qp(1) - qp(-1)).inverse();
        for (int i = 0; i < nidx; ++i)
            for (int j = 0; j < nidx; ++j) {
                std::vector<FreeWord> rhs;
                if (i == 0 && j == 0) {
                    rhs.push_back(FreeWord(inv_qq, {Letter::K1}));
                    rhs.push_back(FreeWord(-inv_qq, {Letter::K1i}));
                }
                add("EF commutator " + std::to_string(i + 1) + std::to_string(j + 1),
                    {FreeWord(one, {E[i], F[j]}), FreeWord(-one, {F[j], E[i]})}, std::move(rhs));
            }
    }
    if (!u1) {
        Scalar two = q_int(2, m);
        for (int i = 0; i < 2; ++i) {
            int j = 1 - i;
            if (has_e)
                add("E Serre " + std::to_string(i + 1),
                    {FreeWord(one, {E[i], E[i], E[j]}), FreeWord(-two, {E[i], E[j], E[i]}),
                     FreeWord(one, {E[j], E[i], E[i]})},
                    {});
            if (has_f)
                add("F Serre " + std::to_string(i + 1),
                    {FreeWord(one, {F[i], F[i], F[j]}), FreeWord(-two, {F[i], F[j], F[i]}),
                     FreeWord(one, {F[j], F[i], F[i]})},
                    {});
        }
    }
    if (A.is_quotient()) {
        const int l = A.l();
        for (int i = 0; i < nidx; ++i) {
            if (has_e) add("E^l", {FreeWord(one, std::vector<Letter>(l, E[i]))}, {});
            if (has_f) add("F^l", {FreeWord(one, std::vector<Letter>(l, F[i]))}, {});
            add("K^l", {FreeWord(one, std::vector<Letter>(l, K[i]))}, {FreeWord(one, {})});
        }
        if (!u1) {
            if (has_e) add("E12^l", {FreeWord(one, std::vector<Letter>(l, Letter::E12))}, {});
            if (has_f) add("F12^l", {FreeWord(one, std::vector<Letter>(l, Letter::F12))}, {});
        }
    }
    return rels;
}

Element project_pi(const Element& d) {
    if (d.algebra().kind != AlgebraKind::Dphi)
        throw std::invalid_argument("project_pi: Dphi element required");
    AlgebraId target = AlgebraId::make(AlgebraKind::u, d.algebra().mode);
    const int l = d.algebra().l();
    Element out(target);
    for (const auto& [m, c] : d.terms()) {
        PbwMonomial n = m;
        n.k[0] = static_cast<int>(mod_nonneg(n.k[0] + n.kt[0], l));
        n.k[1] = static_cast<int>(mod_nonneg(n.k[1] + n.kt[1], l));
        n.kt = {0, 0};
        out.add_term(n, c);
    }
    return out;
}

namespace {

// scalar picked up by a single letter under pi_z, along with its image letter
std::pair<Scalar, Letter> pi_z_letter(Letter g, const CentralParameter& z) {
    const FieldMode& m = z.mode();
    Scalar zh = zeta_sqrt(z.z1);
    switch (g) {
        case Letter::E1: return {zh, Letter::E1};
        case Letter::K1: return {zh, Letter::K1};
        case Letter::K1i: return {zh.inverse(), Letter::K1i};
        case Letter::Kt1: return {zh.inverse(), Letter::K1};
        case Letter::Kt1i: return {zh, Letter::K1i};
        case Letter::Kt2: return {z.z2.inverse(), Letter::K2};
        case Letter::Kt2i: return {z.z2, Letter::K2i};
        default: return {Scalar::one(m), g};  // E2, F1, F2, K2 and its inverse are fixed
    }
}

}  // namespace

Element pi_z(const Element& d, const CentralParameter& z) {
    if (d.algebra().kind != AlgebraKind::Dphi)
        throw std::invalid_argument("pi_z: Dphi element required");
    const FieldMode& m = d.algebra().mode;
    if (m.l % 2 == 0) throw std::invalid_argument("pi_z: odd l required");
    if (!(z.mode() == m)) throw std::invalid_argument("pi_z: parameter mode mismatch");
    AlgebraId target = AlgebraId::make(AlgebraKind::u, m);
    std::vector<FreeWord> words;
    for (const auto& [mon, c] : d.terms()) {
        FreeWord w(c, {});
        for (Letter g : monomial_letters(mon)) {
            if (g == Letter::E12) {
                // pi_z(E12) = z1^(1/2) E12 since only the E1 factor is scaled
                w.coeff = w.coeff * zeta_sqrt(z.z1);
                w.letters.push_back(Letter::E12);
            } else if (g == Letter::F12) {
                w.letters.push_back(Letter::F12);
            } else {
                auto [s, img] = pi_z_letter(g, z);
                w.coeff = w.coeff * s;
                w.letters.push_back(img);
            }
        }
        words.push_back(std::move(w));
    }
    return normal_form(words, target);
}

namespace {

// apply pi_z letterwise to a word sum and straighten in u
Element pi_z_words(const std::vector<FreeWord>& ws, const CentralParameter& z,
                   const AlgebraId& target) {
    std::vector<FreeWord> images;
    for (const FreeWord& w : ws) {
        FreeWord img(w.coeff, {});
        for (Letter g : w.letters) {
            auto [s, gi] = pi_z_letter(g, z);
            img.coeff = img.coeff * s;
            img.letters.push_back(gi);
        }
        images.push_back(std::move(img));
    }
    return normal_form(images, target);
}

}  // namespace

bool pi_z_well_defined(const CentralParameter& z, const FieldMode& m) {
    if (m.l % 2 == 0) throw std::invalid_argument("pi_z_well_defined: odd l required");
    AlgebraId target = AlgebraId::make(AlgebraKind::u, m);
    for (const RelationPair& rel : dphi_relations(m)) {
        Element lhs = pi_z_words(rel.lhs, z, target);
        Element rhs = pi_z_words(rel.rhs, z, target);
        if (lhs != rhs) return false;
    }
    return true;
}

std::map<Letter, Scalar> eps_z(const CentralParameter& z) {
    const FieldMode& m = z.mode();
    if (m.l % 2 == 0) throw std::invalid_argument("eps_z: odd l required");
    Scalar zh = zeta_sqrt(z.z1);
    Scalar zero = Scalar::zero(m), one = Scalar::one(m);
    return {
        {Letter::E1, zero},        {Letter::E2, zero},
        {Letter::E12, zero},       {Letter::F1, zero},
        {Letter::F2, zero},        {Letter::F12, zero},
        {Letter::K1, zh},          {Letter::K1i, zh.inverse()},
        {Letter::K2, one},         {Letter::K2i, one},
        {Letter::Kt1, zh.inverse()}, {Letter::Kt1i, zh},
        {Letter::Kt2, z.z2.inverse()}, {Letter::Kt2i, z.z2},
    };
}

Scalar eps_z_value(const Element& d, const CentralParameter& z) {
    if (d.algebra().kind != AlgebraKind::Dphi)
        throw std::invalid_argument("eps_z_value: Dphi element required");
    auto table = eps_z(z);
    Scalar total = Scalar::zero(z.mode());
    for (const auto& [mon, c] : d.terms()) {
        Scalar v = c;
        for (Letter g : monomial_letters(mon)) {
            v = v * table.at(g);
            if (v.is_zero()) break;
        }
        total += v;
    }
    return total;
}

bool eps_z_well_defined(const CentralParameter& z, const FieldMode& m) {
    auto table = eps_z(z);
    auto value = [&](const std::vector<FreeWord>& ws) {
        Scalar total = Scalar::zero(m);
        for (const FreeWord& w : ws) {
            Scalar v = w.coeff;
            for (Letter g : w.letters) {
                v = v * table.at(g);
                if (v.is_zero()) break;
            }
            total += v;
        }
        return total;
    };
    for (const RelationPair& rel : dphi_relations(m)) {
        if (value(rel.lhs) != value(rel.rhs)) return false;
    }
    return true;
}

}  // namespace hopfforge
