#include "hopfforge/matmodule.hpp"

#include "hopfforge/qcomb.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfforge {

const Matrix& MatrixModule::mat(Letter g) const {
    auto it = action.find(g);
    if (it == action.end())
        throw std::invalid_argument("MatrixModule: no action stored for " + letter_name(g));
    return it->second;
}

Matrix MatrixModule::e12() const {
    const Matrix& e1 = mat(Letter::E1);
    const Matrix& e2 = mat(Letter::E2);
    return e1 * e2 - (e2 * e1) * Scalar::q_power(-1, alg.mode);
}

Matrix MatrixModule::f12() const {
    const Matrix& f1 = mat(Letter::F1);
    const Matrix& f2 = mat(Letter::F2);
    return f2 * f1 - (f1 * f2) * Scalar::q_power(1, alg.mode);
}

Matrix MatrixModule::letter_matrix(Letter g) const {
    switch (g) {
        case Letter::K1i: return mat(Letter::K1).inverse();
        case Letter::K2i: return mat(Letter::K2).inverse();
        case Letter::Kt1i: return mat(Letter::Kt1).inverse();
        case Letter::Kt2i: return mat(Letter::Kt2).inverse();
        case Letter::E12: return e12();
        case Letter::F12: return f12();
        default: return mat(g);
    }
}

std::vector<Scalar> MatrixModule::act(const Element& x, const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(dim(), Scalar::zero(alg.mode));
    for (const auto& [mon, c] : x.terms()) {
        std::vector<Scalar> cur = v;
        std::vector<Letter> word = monomial_letters(mon);
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = letter_matrix(*it).apply(cur);
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * cur[i];
    }
    return out;
}

AxiomReport module_axiom_check(const MatrixModule& M) {
    AxiomReport report;
    const FieldMode& m = M.alg.mode;
    const size_t n = M.dim();
    auto eval = [&](const std::vector<FreeWord>& side) {
        Matrix total(n, n, m);
        for (const FreeWord& w : side) {
            Matrix prod = Matrix::identity(n, m);
            for (Letter g : w.letters) prod = prod * M.letter_matrix(g);
            total = total + prod * w.coeff;
        }
        return total;
    };
    for (const RelationPair& rel : algebra_relations(M.alg)) {
        if (!(eval(rel.lhs) == eval(rel.rhs))) {
            report.ok = false;
            report.violations.push_back(rel.name);
        }
    }
    return report;
}

namespace {

Matrix diagonal(const std::vector<Scalar>& d, const FieldMode& m) {
    Matrix r(d.size(), d.size(), m);
    for (size_t i = 0; i < d.size(); ++i) r.at(i, i) = d[i];
    return r;
}

// decompose lambda1 = eps q^m1 with m1 >= 0
std::pair<int, long> signed_power_or_throw(const Scalar& s) {
    auto p = s.as_signed_q_power();
    if (!p || p->second < 0)
        throw std::invalid_argument("build_L: K1-value must be +-q^m with m >= 0, got " +
                                    s.to_string());
    return *p;
}

}  // namespace

MatrixModule build_L(const Character& lambda) {
    const FieldMode& m = lambda.mode();
    if (!m.is_generic()) throw std::invalid_argument("build_L: generic mode required");
    auto [eps, m1] = signed_power_or_throw(lambda.k1);
    const size_t n = static_cast<size_t>(m1) + 1;
    MatrixModule M;
    M.alg = AlgebraId::make(AlgebraKind::U, m);
    std::vector<Scalar> k1d, k2d;
    for (size_t j = 0; j < n; ++j) {
        M.basis.push_back("u" + std::to_string(j));
        k1d.push_back(lambda.k1 * Scalar::q_power(-2L * j, m));
        k2d.push_back(lambda.k2 * Scalar::q_power(static_cast<long>(j), m));
    }
    Matrix E1(n, n, m), E2(n, n, m), F1(n, n, m), F2(n, n, m);
    for (size_t j = 0; j + 1 < n; ++j) F1.at(j + 1, j) = Scalar::one(m);
    for (size_t j = 1; j < n; ++j)
        E1.at(j - 1, j) = q_int(static_cast<long>(j), m) * q_bracket_a(lambda.k1, 1 - static_cast<long>(j));
    M.action = {{Letter::E1, E1}, {Letter::E2, E2}, {Letter::F1, F1},
                {Letter::F2, F2}, {Letter::K1, diagonal(k1d, m)}, {Letter::K2, diagonal(k2d, m)}};
    return M;
}

MatrixModule build_V_indecomposable(int eps1, int eps2, const Scalar& a) {
    const FieldMode& m = a.mode();
    if (a.is_zero()) throw std::invalid_argument("build_V_indecomposable: a must be nonzero");
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw std::invalid_argument("build_V_indecomposable: signs must be +-1");
    MatrixModule M;
    M.alg = AlgebraId::make(AlgebraKind::U, m);
    M.basis = {"v1", "v2"};
    Matrix E(2, 2, m), F1(2, 2, m), F2(2, 2, m);
    F2.at(1, 0) = Scalar::one(m);  // F2 v1 = v2
    M.action = {{Letter::E1, E},
                {Letter::E2, E},
                {Letter::F1, F1},
                {Letter::F2, F2},
                {Letter::K1, diagonal({Scalar::from_int(eps1, m), Scalar::from_int(eps2, m)}, m)},
                {Letter::K2, diagonal({a, a * Scalar::q_power(-2, m)}, m)}};
    return M;
}

MatrixModule build_V_u(int m1, int m2, int l) {
    if (m1 < 0 || m2 < 0 || m1 >= l || m2 >= l)
        throw std::invalid_argument("build_V_u: indices must lie in [0, l)");
    FieldMode m = FieldMode::root_of_unity(l);
    const size_t n = static_cast<size_t>(m1) + 1;
    MatrixModule M;
    M.alg = AlgebraId::make(AlgebraKind::u, m);
    std::vector<Scalar> k1d, k2d;
    for (size_t j = 0; j < n; ++j) {
        M.basis.push_back("w" + std::to_string(j));
        k1d.push_back(Scalar::q_power(m1 - 2L * j, m));
        k2d.push_back(Scalar::q_power(m2 + static_cast<long>(j), m));
    }
    Matrix E1(n, n, m), E2(n, n, m), F1(n, n, m), F2(n, n, m);
    for (size_t j = 1; j < n; ++j) E1.at(j - 1, j) = q_int(m1 + 1 - static_cast<long>(j), m);
    for (size_t j = 0; j + 1 < n; ++j) F1.at(j + 1, j) = q_int(static_cast<long>(j) + 1, m);
    M.action = {{Letter::E1, E1}, {Letter::E2, E2}, {Letter::F1, F1},
                {Letter::F2, F2}, {Letter::K1, diagonal(k1d, m)}, {Letter::K2, diagonal(k2d, m)}};
    return M;
}

MatrixModule build_verma_u(int m1, int m2, int l) {
    if (m1 < 0 || m2 < 0 || m1 >= l || m2 >= l)
        throw std::invalid_argument("build_verma_u: indices must lie in [0, l)");
    FieldMode m = FieldMode::root_of_unity(l);
    AlgebraId A = AlgebraId::make(AlgebraKind::u, m);
    Character lam = Character::make(Scalar::q_power(m1, m), Scalar::q_power(m2, m));

    std::vector<FExp> basis;
    std::map<FExp, size_t> index;
    for (int t1 = 0; t1 < l; ++t1)
        for (int t2 = 0; t2 < l; ++t2)
            for (int t3 = 0; t3 < l; ++t3) {
                index[FExp{t1, t2, t3}] = basis.size();
                basis.push_back(FExp{t1, t2, t3});
            }
    MatrixModule M;
    M.alg = A;
    for (const FExp& t : basis) {
        PbwMonomial mm;
        mm.f = t;
        M.basis.push_back(mm.is_unit() ? "v" : mm.to_string() + "*v");
    }
    const size_t n = basis.size();
    for (Letter g : {Letter::E1, Letter::E2, Letter::F1, Letter::F2, Letter::K1, Letter::K2}) {
        Matrix mat(n, n, m);
        for (size_t c = 0; c < n; ++c) {
            FreeVermaVector b(A, lam);
            b.add_term(basis[c], Scalar::one(m));
            FreeVermaVector img = verma_act(g, b);
            for (const auto& [t, s] : img.terms()) mat.at(index.at(t), c) = s;
        }
        M.action.emplace(g, std::move(mat));
    }
    return M;
}

MatrixModule tensor_module(const MatrixModule& M, const MatrixModule& N) {
    if (!(M.alg == N.alg)) throw std::invalid_argument("tensor_module: algebra mismatch");
    const FieldMode& m = M.alg.mode;
    const bool kt = M.alg.has_kt();
    MatrixModule T;
    T.alg = M.alg;
    for (const auto& a : M.basis)
        for (const auto& b : N.basis) T.basis.push_back(a + "(x)" + b);
    Matrix idm = Matrix::identity(M.dim(), m);
    Matrix idn = Matrix::identity(N.dim(), m);
    // Delta(E_i) = K_i (x) E_i + E_i (x) 1, Delta(F_i) = 1 (x) F_i + F_i (x) K_i^-1
    auto put = [&](Letter g, Matrix mat) { T.action.emplace(g, std::move(mat)); };
    for (int i = 0; i < 2; ++i) {
        Letter E = i == 0 ? Letter::E1 : Letter::E2;
        Letter F = i == 0 ? Letter::F1 : Letter::F2;
        Letter K = i == 0 ? Letter::K1 : Letter::K2;
        Letter Kinv_src = kt ? (i == 0 ? Letter::Kt1i : Letter::Kt2i)
                             : (i == 0 ? Letter::K1i : Letter::K2i);
        put(E, M.mat(K).kronecker(N.mat(E)) + M.mat(E).kronecker(idn));
        put(F, idm.kronecker(N.mat(F)) + M.mat(F).kronecker(N.letter_matrix(Kinv_src)));
        put(K, M.mat(K).kronecker(N.mat(K)));
        if (kt) {
            Letter Kt = i == 0 ? Letter::Kt1 : Letter::Kt2;
            put(Kt, M.mat(Kt).kronecker(N.mat(Kt)));
        }
    }
    return T;
}

std::vector<HighestWeightSpace> find_hw_vectors(const MatrixModule& M) {
    const FieldMode& m = M.alg.mode;
    const Matrix& K1 = M.mat(Letter::K1);
    const Matrix& K2 = M.mat(Letter::K2);
    if (!K1.is_diagonal() || !K2.is_diagonal())
        throw std::invalid_argument("find_hw_vectors: requires diagonal group-like action");
    const size_t n = M.dim();
    // group coordinates by weight
    std::vector<std::pair<Scalar, Scalar>> weights;
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) {
        std::pair<Scalar, Scalar> w{K1.at(i, i), K2.at(i, i)};
        size_t g = 0;
        for (; g < weights.size(); ++g)
            if (weights[g] == w) break;
        if (g == weights.size()) {
            weights.push_back(w);
            groups.emplace_back();
        }
        groups[g].push_back(i);
    }
    const Matrix& E1 = M.mat(Letter::E1);
    const Matrix& E2 = M.mat(Letter::E2);
    std::vector<HighestWeightSpace> out;
    for (size_t g = 0; g < weights.size(); ++g) {
        const auto& cols = groups[g];
        Matrix stacked(2 * n, cols.size(), m);
        for (size_t c = 0; c < cols.size(); ++c) {
            for (size_t r = 0; r < n; ++r) {
                stacked.at(r, c) = E1.at(r, cols[c]);
                stacked.at(n + r, c) = E2.at(r, cols[c]);
            }
        }
        auto ker = stacked.kernel();
        if (ker.empty()) continue;
        HighestWeightSpace hw{Character::make(weights[g].first, weights[g].second), {}};
        for (const auto& kv : ker) {
            std::vector<Scalar> full(n, Scalar::zero(m));
            for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = kv[c];
            hw.vectors.push_back(std::move(full));
        }
        out.push_back(std::move(hw));
    }
    return out;
}

size_t generated_submodule_dim(const MatrixModule& M, std::vector<std::vector<Scalar>> seed) {
    const FieldMode& m = M.alg.mode;
    std::vector<Letter> gens = {Letter::E1, Letter::E2, Letter::F1, Letter::F2,
                                Letter::K1, Letter::K2};
    if (M.alg.has_kt()) {
        gens.push_back(Letter::Kt1);
        gens.push_back(Letter::Kt2);
    }
    std::vector<std::vector<Scalar>> span = std::move(seed);
    size_t dim = span_rank(span, m);
    size_t frontier_begin = 0;
    while (true) {
        std::vector<std::vector<Scalar>> next;
        for (size_t i = frontier_begin; i < span.size(); ++i)
            for (Letter g : gens) next.push_back(M.mat(g).apply(span[i]));
        frontier_begin = span.size();
        for (auto& v : next) span.push_back(std::move(v));
        size_t ndim = span_rank(span, m);
        if (ndim == dim) return dim;
        dim = ndim;
    }
}

bool is_simple_module(const MatrixModule& M) {
    if (M.dim() == 0) return false;
    auto hw = find_hw_vectors(M);
    size_t lines = 0;
    for (const auto& h : hw) lines += h.vectors.size();
    if (lines != 1) return false;
    return generated_submodule_dim(M, {hw[0].vectors[0]}) == M.dim();
}

std::optional<Character> classify_simple_highest_weight(const MatrixModule& M) {
    if (M.alg.kind != AlgebraKind::U || !is_simple_module(M)) return std::nullopt;
    Character weight = find_hw_vectors(M)[0].weight;
    auto p = weight.k1.as_signed_q_power();
    if (!p || p->second < 0) return std::nullopt;
    if (M.dim() != static_cast<size_t>(p->second) + 1) return std::nullopt;
    return weight;
}

DecompositionReport clebsch_gordan(const Character& lambda, const Character& mu) {
    const FieldMode& m = lambda.mode();
    auto [e1, mm] = signed_power_or_throw(lambda.k1);
    auto [e2, nn] = signed_power_or_throw(mu.k1);
    MatrixModule T = tensor_module(build_L(lambda), build_L(mu));
    auto hw = find_hw_vectors(T);

    DecompositionReport rep;
    size_t dim_sum = 0;
    for (const auto& h : hw) {
        rep.factors.emplace_back(h.weight, static_cast<int>(h.vectors.size()));
        auto p = h.weight.k1.as_signed_q_power();
        size_t d = p ? static_cast<size_t>(p->second) + 1 : 0;
        rep.dims.push_back(d);
        dim_sum += d * h.vectors.size();
    }
    // expected factors: i = 0..min(m,n), weight (eps1 eps2 q^(m+n-2i), q^i lambda2 mu2)
    long kmin = std::min(mm, nn);
    bool ok = static_cast<long>(hw.size()) == kmin + 1 && dim_sum == T.dim();
    for (long i = 0; ok && i <= kmin; ++i) {
        Character expect = Character::make(
            Scalar::from_int(e1 * e2, m) * Scalar::q_power(mm + nn - 2 * i, m),
            Scalar::q_power(i, m) * lambda.k2 * mu.k2);
        bool found = false;
        for (const auto& h : hw) {
            if (h.weight == expect) {
                found = h.vectors.size() == 1;
                break;
            }
        }
        ok = ok && found;
    }
    rep.verified = ok;
    return rep;
}

MatrixModule pullback_z(const MatrixModule& M, const CentralParameter& z) {
    if (M.alg.kind != AlgebraKind::u)
        throw std::invalid_argument("pullback_z: u-module required");
    const FieldMode& m = M.alg.mode;
    if (m.l % 2 == 0) throw std::invalid_argument("pullback_z: odd l required");
    Scalar zh = zeta_sqrt(z.z1);
    MatrixModule P;
    P.alg = AlgebraId::make(AlgebraKind::Dphi, m);
    P.basis = M.basis;
    P.action = {{Letter::E1, M.mat(Letter::E1) * zh},
                {Letter::E2, M.mat(Letter::E2)},
                {Letter::F1, M.mat(Letter::F1)},
                {Letter::F2, M.mat(Letter::F2)},
                {Letter::K1, M.mat(Letter::K1) * zh},
                {Letter::K2, M.mat(Letter::K2)},
                {Letter::Kt1, M.mat(Letter::K1) * zh.inverse()},
                {Letter::Kt2, M.mat(Letter::K2) * z.z2.inverse()}};
    return P;
}

bool twist_check(const MatrixModule& M, const CentralParameter& z) {
    MatrixModule Mz = pullback_z(M, z);
    MatrixModule M1 = pullback_z(M, CentralParameter::trivial(M.alg.mode));
    // eps_z (x) M1: each generator acts through the coproduct with the
    // one-dimensional leg evaluated by eps_z
    auto table = eps_z(z);
    std::map<Letter, Matrix> twisted;
    // E_i: eps_z(K_i) M1(E_i); F_i: M1(F_i); group-likes: eps_z(g) M1(g)
    twisted.emplace(Letter::E1, M1.mat(Letter::E1) * table.at(Letter::K1));
    twisted.emplace(Letter::E2, M1.mat(Letter::E2) * table.at(Letter::K2));
    twisted.emplace(Letter::F1, M1.mat(Letter::F1));
    twisted.emplace(Letter::F2, M1.mat(Letter::F2));
    twisted.emplace(Letter::K1, M1.mat(Letter::K1) * table.at(Letter::K1));
    twisted.emplace(Letter::K2, M1.mat(Letter::K2) * table.at(Letter::K2));
    twisted.emplace(Letter::Kt1, M1.mat(Letter::Kt1) * table.at(Letter::Kt1));
    twisted.emplace(Letter::Kt2, M1.mat(Letter::Kt2) * table.at(Letter::Kt2));
    for (const auto& [g, mat] : twisted) {
        if (!(Mz.mat(g) == mat)) return false;
    }
    return true;
}

}  // namespace hopfforge
