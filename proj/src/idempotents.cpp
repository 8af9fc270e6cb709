#include "hopfforge/idempotents.hpp"

#include "hopfforge/qcomb.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hopfforge {

namespace {

AlgebraId u_alg(int l) { return AlgebraId::make(AlgebraKind::u, FieldMode::root_of_unity(l)); }
AlgebraId u1_alg(int l) { return AlgebraId::make(AlgebraKind::u1, FieldMode::root_of_unity(l)); }

}  // namespace

Element e_K1(int i, int l) {
    AlgebraId A = u1_alg(l);
    const FieldMode& m = A.mode;
    Element e(A);
    Scalar inv_l = Scalar::from_rational(Rational(1, l), m);
    for (int s = 0; s < l; ++s) {
        PbwMonomial mon;
        mon.k[0] = s;
        e.add_term(mon, inv_l * Scalar::q_power(static_cast<long>(i) * s, m));
    }
    return e;
}

Element e_K2(int j, int l) {
    AlgebraId A = u_alg(l);
    const FieldMode& m = A.mode;
    Element e(A);
    Scalar inv_l = Scalar::from_rational(Rational(1, l), m);
    for (int s = 0; s < l; ++s) {
        PbwMonomial mon;
        mon.k[1] = s;
        e.add_term(mon, inv_l * Scalar::q_power(static_cast<long>(j) * s, m));
    }
    return e;
}

std::vector<Element> group_idempotents(int l) {
    AlgebraId A = u_alg(l);
    const FieldMode& m = A.mode;
    Scalar inv_l2 = Scalar::from_rational(Rational(1, static_cast<long>(l) * l), m);
    std::vector<Element> out;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Element e(A);
            for (int s = 0; s < l; ++s)
                for (int t = 0; t < l; ++t) {
                    PbwMonomial mon;
                    mon.k = {s, t};
                    e.add_term(mon, inv_l2 * Scalar::q_power(static_cast<long>(i) * s +
                                                                 static_cast<long>(j) * t,
                                                             m));
                }
            out.push_back(std::move(e));
        }
    return out;
}

Element embed_u1_in_u(const Element& x) {
    if (x.algebra().kind != AlgebraKind::u1)
        throw std::invalid_argument("embed_u1_in_u: u1 element required");
    Element out(u_alg(x.algebra().l()));
    for (const auto& [m, c] : x.terms()) out.add_term(m, c);
    return out;
}

Element closed_form_FmEs(const AlgebraId& A, int m, int s) {
    if (m < 0 || s < 0) throw std::invalid_argument("closed_form_FmEs: negative exponent");
    if (A.kind != AlgebraKind::U && A.kind != AlgebraKind::u1)
        throw std::invalid_argument("closed_form_FmEs: valid in U or u1");
    const FieldMode& fm = A.mode;
    Element total(A);
    for (int j = 0; j <= std::min(m, s); ++j) {
        Scalar c = q_factorial(j, fm) * q_binomial(m, j, fm) * q_binomial(s, j, fm);
        // E^(s-j) * prod_{r=j-m-s+1}^{2j-m-s} [K^-1; r] * F^(m-j)
        PbwMonomial em, fmn;
        em.e[0] = s - j;
        fmn.f[0] = m - j;
        Element prod = Element::monomial(A, em, c);
        for (long r = static_cast<long>(j) - m - s + 1; r <= 2L * j - m - s; ++r)
            prod = multiply(prod, group_bracket(A, 1, true, r));
        prod = multiply(prod, Element::monomial(A, fmn, Scalar::one(fm)));
        total += prod;
    }
    return total;
}

int min_residue(long n, int l) { return static_cast<int>(mod_nonneg(n, l)); }

Scalar structure_constant(int m, int s, int j, int i, int l) {
    if (j < 0 || j > std::min(m, s) || m >= l || s >= l)
        throw std::invalid_argument("structure_constant: index violation");
    FieldMode fm = FieldMode::root_of_unity(l);
    int res = min_residue(static_cast<long>(m) + s + i, l);
    if (res < j) return Scalar::zero(fm);
    Scalar fj = q_factorial(j, fm);
    return fj * fj * q_binomial(m, j, fm) * q_binomial(s, j, fm) * q_binomial(res, j, fm);
}

QuadraticSystem build_system(int i, int l) {
    if (l % 2 == 0) throw std::invalid_argument("build_system: odd l required");
    QuadraticSystem sys;
    sys.i = i;
    sys.l = l;
    sys.equations.resize(static_cast<size_t>(l));
    for (int p = 0; p < l; ++p) {
        for (int m = 0; m < l; ++m)
            for (int s = 0; s < l; ++s)
                for (int j = 0; j <= std::min(m, s); ++j) {
                    if (m + s - j != p) continue;
                    Scalar c = structure_constant(m, s, j, i, l);
                    if (c.is_zero()) continue;
                    sys.equations[static_cast<size_t>(p)].push_back(QuadraticTerm{m, s, j, c});
                }
    }
    return sys;
}

Element idempotent_element(int i, const std::vector<Scalar>& coeffs, int l) {
    AlgebraId A = u1_alg(l);
    const Scalar one = Scalar::one(A.mode);
    Element e(A);
    Element ei = e_K1(i, l);
    for (int p = 0; p < static_cast<int>(coeffs.size()); ++p) {
        if (coeffs[static_cast<size_t>(p)].is_zero()) continue;
        // e_i E^p F^p with the factors in that order (E^p F^p is not a PBW monomial)
        Element epfp = multiply(e_power_monomial(A, p, 0, 0), f_power_monomial(A, p, 0, 0));
        e += multiply(ei, epfp).scaled(coeffs[static_cast<size_t>(p)]);
    }
    return e;
}

std::vector<IdempotentSolution> solve_idempotents(int i, int l) {
    if (l % 2 == 0) throw std::invalid_argument("solve_idempotents: odd l required");
    const char* cap_env = std::getenv("HOPF_FORGE_CAP");
    int cap = cap_env ? std::max(3, atoi(cap_env)) : 7;
    if (l > cap) throw std::invalid_argument("solve_idempotents: l exceeds the solver cap");
    FieldMode fm = FieldMode::root_of_unity(l);
    QuadraticSystem sys = build_system(i, l);

    std::vector<std::vector<Scalar>> partials{{}};
    for (int p = 0; p < l; ++p) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& prefix : partials) {
            // a_p = A a_p^2 + L a_p + C with only indices < p in L and C
            Scalar A = Scalar::zero(fm), L = Scalar::zero(fm), C = Scalar::zero(fm);
            for (const QuadraticTerm& t : sys.equations[static_cast<size_t>(p)]) {
                if (t.m == p && t.s == p)
                    A += t.coeff;
                else if (t.m == p)
                    L += t.coeff * prefix[static_cast<size_t>(t.s)];
                else if (t.s == p)
                    L += t.coeff * prefix[static_cast<size_t>(t.m)];
                else
                    C += t.coeff * prefix[static_cast<size_t>(t.m)] * prefix[static_cast<size_t>(t.s)];
            }
            // roots of A x^2 + (L - 1) x + C = 0
            std::vector<Scalar> roots;
            Scalar B = L - Scalar::one(fm);
            if (A.is_zero()) {
                if (!B.is_zero()) {
                    roots.push_back(-C / B);
                } else if (C.is_zero()) {
                    throw std::runtime_error(
                        "solve_idempotents: free coefficient at step " + std::to_string(p) +
                        "; the solution set is not finite");
                }
            } else {
                Scalar disc = B * B - Scalar::from_int(4, fm) * A * C;
                auto sq = cyclotomic_sqrt_restricted(disc);
                if (sq) {
                    Scalar twoa = (A + A).inverse();
                    roots.push_back((-B + *sq) * twoa);
                    if (!sq->is_zero()) roots.push_back((-B - *sq) * twoa);
                }
            }
            for (const Scalar& r : roots) {
                std::vector<Scalar> ext = prefix;
                ext.push_back(r);
                next.push_back(std::move(ext));
            }
        }
        partials = std::move(next);
    }

    // deduplicate and order deterministically
    std::sort(partials.begin(), partials.end(), [](const auto& a, const auto& b) {
        for (size_t k = 0; k < a.size(); ++k) {
            int c = Scalar::compare(a[k], b[k]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    partials.erase(std::unique(partials.begin(), partials.end()), partials.end());

    std::vector<IdempotentSolution> out;
    for (auto& coeffs : partials) {
        Element e = idempotent_element(i, coeffs, l);
        bool verified = multiply(e, e) == e;
        if (!verified) throw std::logic_error("solve_idempotents: solver produced a non-idempotent");
        out.push_back(IdempotentSolution{i, std::move(coeffs), std::move(e), verified});
    }
    return out;
}

RegularRep regular_representation(int l) {
    RegularRep rep{u1_alg(l), {}};
    for_each_basis_monomial(rep.alg, [&](const PbwMonomial& m) { rep.basis.push_back(m); });
    return rep;
}

std::vector<Scalar> RegularRep::to_coords(const Element& x) const {
    std::vector<Scalar> v(basis.size(), Scalar::zero(alg.mode));
    for (const auto& [m, c] : x.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m)) throw std::logic_error("RegularRep: monomial not in basis");
        v[static_cast<size_t>(it - basis.begin())] = c;
    }
    return v;
}

Matrix RegularRep::left_multiplication(const Element& x) const {
    const FieldMode& m = alg.mode;
    Matrix L(basis.size(), basis.size(), m);
    for (size_t c = 0; c < basis.size(); ++c) {
        Element img = multiply(x, Element::monomial(alg, basis[c], Scalar::one(m)));
        std::vector<Scalar> v = to_coords(img);
        for (size_t r = 0; r < basis.size(); ++r) L.at(r, c) = v[r];
    }
    return L;
}

RadicalData radical_trace_form(int l) {
    RadicalData data{regular_representation(l), {}, {}};
    const RegularRep& rep = data.rep;
    const FieldMode& fm = rep.alg.mode;
    const size_t n = rep.basis.size();
    const Scalar one = Scalar::one(fm);
    // traces of left multiplication by each basis monomial
    std::vector<Scalar> traces(n, Scalar::zero(fm));
    for (size_t k = 0; k < n; ++k) {
        Element mk = Element::monomial(rep.alg, rep.basis[k], one);
        Scalar t = Scalar::zero(fm);
        for (size_t j = 0; j < n; ++j) {
            Element prod = multiply(mk, Element::monomial(rep.alg, rep.basis[j], one));
            auto it = prod.terms().find(rep.basis[j]);
            if (it != prod.terms().end()) t += it->second;
        }
        traces[k] = t;
    }
    // Gram matrix of (x, y) -> tr L_{xy}
    Matrix G(n, n, fm);
    for (size_t a = 0; a < n; ++a) {
        Element ma = Element::monomial(rep.alg, rep.basis[a], one);
        for (size_t b = a; b < n; ++b) {
            Element prod = multiply(ma, Element::monomial(rep.alg, rep.basis[b], one));
            Scalar g = Scalar::zero(fm);
            for (const auto& [mon, c] : prod.terms()) {
                auto it = std::lower_bound(rep.basis.begin(), rep.basis.end(), mon);
                g += c * traces[static_cast<size_t>(it - rep.basis.begin())];
            }
            G.at(a, b) = g;
            G.at(b, a) = g;
        }
    }
    for (auto& kv : G.kernel()) {
        Element r(rep.alg);
        for (size_t k = 0; k < n; ++k) r.add_term(rep.basis[k], kv[k]);
        data.radical_basis.push_back(std::move(r));
        data.radical_coords.push_back(std::move(kv));
    }
    return data;
}

namespace {

size_t corner_dimension(const Element& e, const std::vector<Element>& middles,
                        const RegularRep& rep) {
    std::vector<std::vector<Scalar>> rows;
    for (const Element& mid : middles) rows.push_back(rep.to_coords(multiply(multiply(e, mid), e)));
    return span_rank(rows, rep.alg.mode);
}

}  // namespace

bool is_primitive(const Element& e, const RadicalData& rad) {
    if (e.algebra().kind != AlgebraKind::u1)
        throw std::invalid_argument("is_primitive: u1 element required");
    if (!(multiply(e, e) == e)) throw std::invalid_argument("is_primitive: not an idempotent");
    if (e.is_zero()) return false;
    const RegularRep& rep = rad.rep;
    std::vector<Element> all;
    for (const PbwMonomial& m : rep.basis)
        all.push_back(Element::monomial(rep.alg, m, Scalar::one(rep.alg.mode)));
    size_t corner = corner_dimension(e, all, rep);
    size_t corner_rad = corner_dimension(e, rad.radical_basis, rep);
    return corner - corner_rad == 1;
}

bool is_primitive(const Element& e) {
    RadicalData rad = radical_trace_form(e.algebra().l());
    return is_primitive(e, rad);
}

RegularDecomposition decompose_regular_u1(int l) {
    if (l != 3)
        throw std::invalid_argument(
            "decompose_regular_u1: desk-scale pairing of solver branches is fixed at l = 3");
    RegularDecomposition dec;
    RadicalData rad = radical_trace_form(l);
    const RegularRep& rep = rad.rep;
    const FieldMode& fm = rep.alg.mode;
    for (int i = 0; i < l; ++i) {
        Element ei = e_K1(i, l);
        std::vector<IdempotentSolution> sols = solve_idempotents(i, l);
        // keep one complementary pair (x, e_i - x) of nontrivial solutions
        std::vector<IdempotentSolution> nontrivial;
        for (auto& s : sols) {
            if (s.element.is_zero() || s.element == ei) continue;
            nontrivial.push_back(s);
        }
        bool paired = false;
        for (size_t a = 0; a < nontrivial.size() && !paired; ++a)
            for (size_t b = a + 1; b < nontrivial.size() && !paired; ++b) {
                if (nontrivial[a].element + nontrivial[b].element == ei &&
                    multiply(nontrivial[a].element, nontrivial[b].element).is_zero()) {
                    for (size_t pick : {a, b}) {
                        dec.summands.push_back(RegularSummand{
                            i, nontrivial[pick].coeffs, nontrivial[pick].element, 0, false});
                    }
                    paired = true;
                }
            }
        if (!paired)
            throw std::runtime_error("decompose_regular_u1: no complementary pair in sector " +
                                     std::to_string(i));
    }
    // verify and annotate
    dec.orthogonal = true;
    Element total(rep.alg);
    for (size_t a = 0; a < dec.summands.size(); ++a) {
        total += dec.summands[a].idempotent;
        for (size_t b = 0; b < dec.summands.size(); ++b) {
            Element prod = multiply(dec.summands[a].idempotent, dec.summands[b].idempotent);
            if (a == b ? !(prod == dec.summands[a].idempotent) : !prod.is_zero())
                dec.orthogonal = false;
        }
    }
    dec.complete = total == Element::unit(rep.alg);
    for (RegularSummand& s : dec.summands) {
        std::vector<std::vector<Scalar>> rows;
        for (const PbwMonomial& m : rep.basis)
            rows.push_back(rep.to_coords(
                multiply(Element::monomial(rep.alg, m, Scalar::one(fm)), s.idempotent)));
        s.left_ideal_dim = span_rank(rows, fm);
        s.primitive = is_primitive(s.idempotent, rad);
    }
    return dec;
}

CongruenceSolution congruence_solve(long m1, long m2, int l) {
    long x, y;
    long g = ext_gcd(l, 3, x, y);
    if (g != 1) throw std::invalid_argument("congruence_solve: gcd(l, 3) must be 1");
    // p*l + 3*q = 1; unit targets are solved by (t2, t3) = (q-1, q) and (-q, -q)
    long q = y;
    long t2 = mod_nonneg(m1 * (q - 1) + m2 * (-q), l);
    long t3 = mod_nonneg(m1 * q + m2 * (-q), l);
    if (mod_nonneg(-t2 + t3 - m1, l) != 0 || mod_nonneg(-t2 - 2 * t3 - m2, l) != 0)
        throw std::logic_error("congruence_solve: verification failed");
    return CongruenceSolution{t2, t3};
}

}  // namespace hopfforge
