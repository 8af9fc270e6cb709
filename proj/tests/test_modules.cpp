#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfforge/matmodule.hpp"
#include "hopfforge/qcomb.hpp"

#include "helpers.hpp"

#include <random>

using namespace hopfforge;

namespace {

const FieldMode kGen = FieldMode::generic();
const FieldMode kR3 = FieldMode::root_of_unity(3);
const AlgebraId kU = AlgebraId::make(AlgebraKind::U, kGen);

Scalar Q(long e, const FieldMode& m = kGen) { return Scalar::q_power(e, m); }

Character chr(const Scalar& a, const Scalar& b) { return Character::make(a, b); }

FreeVermaVector basis_vec(const Character& lam, FExp t) {
    FreeVermaVector v(kU, lam);
    v.add_term(t, Scalar::one(kGen));
    return v;
}

}  // namespace

TEST_CASE("weight characters") {
    CHECK(weight_character(0, 0, kGen) == chr(Q(0), Q(0)));
    CHECK(weight_character(1, 0, kGen) == chr(Q(2), Q(-1)));
    CHECK(weight_character(1, 1, kGen) == chr(Q(1), Q(1)));
    CHECK_THROWS_AS(Character::make(Scalar::zero(kGen), Q(0)), std::invalid_argument);
}

TEST_CASE("Verma actions") {
    Character lam = chr(Q(2), Q(1));
    FreeVermaVector v = FreeVermaVector::cyclic(kU, lam);
    CHECK(verma_act(Letter::K1, v) == v.scaled(lam.k1));
    CHECK(verma_act(Letter::K2, v) == v.scaled(lam.k2));
    CHECK(verma_act(Letter::E1, v).is_zero());
    CHECK(verma_act(Letter::E2, v).is_zero());
    // E2 annihilates everything: it commutes with all the F's
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        FExp e{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
               static_cast<int>(rng() % 4)};
        CHECK(verma_act(Letter::E2, basis_vec(lam, e)).is_zero());
    }
    // E1 F1 v = [1][lambda1; 0] v
    FreeVermaVector f1v = verma_act(Letter::F1, v);
    CHECK(verma_act(Letter::E1, f1v) == v.scaled(q_int(1, kGen) * q_bracket_a(lam.k1, 0)));
    // weights multiply correctly along the F's
    auto w = vector_weight(verma_act_word({Letter::F1, Letter::F12}, v));
    REQUIRE(w.has_value());
    CHECK(w->k1 == lam.k1 * Q(-3));
    CHECK(w->k2 == lam.k2 * Q(0));
}

TEST_CASE("singular vectors") {
    SUBCASE("v_0 is the cyclic vector") {
        Character lam = chr(Q(3), Q(2));
        CHECK(hw_vector_vn(lam, 0) == FreeVermaVector::cyclic(kU, lam));
    }
    SUBCASE("v_1 matches the closed formula") {
        Character lam = chr(Q(3), Q(2));
        FreeVermaVector v1 = hw_vector_vn(lam, 1);
        // q^-1 lambda1^-1 [lambda1; 1] F12 v + F1 F2 v, with F1 F2 already ordered
        FreeVermaVector expect(kU, lam);
        expect.add_term(FExp{0, 1, 0}, Q(-1) * lam.k1.inverse() * q_bracket_a(lam.k1, 1));
        expect.add_term(FExp{1, 0, 1}, Scalar::one(kGen));
        CHECK(v1 == expect);
    }
    SUBCASE("highest-weight property across characters") {
        std::vector<Character> chars;
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 2; ++b) chars.push_back(weight_character(a, b, kGen));
        chars.push_back(chr(Scalar::from_int(2, kGen), Q(1)));
        chars.push_back(chr(Scalar::from_int(3, kGen) * Q(1), Q(0)));
        for (const Character& lam : chars)
            for (int n = 0; n <= 4; ++n) {
                FreeVermaVector vn = hw_vector_vn(lam, n);
                CHECK(verma_act(Letter::E1, vn).is_zero());
                CHECK(verma_act(Letter::E2, vn).is_zero());
                CHECK(check_highest_weight(vn));
            }
    }
    SUBCASE("root mode is rejected") {
        Character lam = chr(Q(1, kR3), Q(0, kR3));
        CHECK_THROWS_AS(hw_vector_vn(lam, 1), std::invalid_argument);
    }
    SUBCASE("non-examples") {
        Character lam = chr(Scalar::from_int(2, kGen), Q(1));  // generic lambda1
        CHECK(!check_highest_weight(verma_act(Letter::F1, FreeVermaVector::cyclic(kU, lam))));
        CHECK_THROWS_AS(check_highest_weight(FreeVermaVector(kU, lam)), std::invalid_argument);
    }
}

TEST_CASE("finite simple quotients over U") {
    SUBCASE("one-dimensional case") {
        MatrixModule M = build_L(chr(Q(0), Scalar::from_int(5, kGen)));
        CHECK(M.dim() == 1);
        CHECK(M.mat(Letter::E1).is_zero());
        CHECK(M.mat(Letter::F1).is_zero());
        CHECK(M.mat(Letter::K2).at(0, 0) == Scalar::from_int(5, kGen));
        CHECK(module_axiom_check(M).ok);
    }
    SUBCASE("two-dimensional case") {
        Character lam = chr(Q(1), Scalar::from_int(7, kGen));
        MatrixModule M = build_L(lam);
        REQUIRE(M.dim() == 2);
        CHECK(M.mat(Letter::K1).at(1, 1) == Q(-1));
        // E1 u_1 = [1][lambda1; 0] u_0 = 1 * u_0
        CHECK(M.mat(Letter::E1).at(0, 1) == q_int(1, kGen) * q_bracket_a(lam.k1, 0));
        CHECK(M.mat(Letter::E2).is_zero());
        CHECK(M.mat(Letter::F2).is_zero());
        CHECK(module_axiom_check(M).ok);
        CHECK(is_simple_module(M));
    }
    SUBCASE("bad highest weights are rejected") {
        CHECK_THROWS_AS(build_L(chr(Scalar::from_int(2, kGen), Q(0))), std::invalid_argument);
        CHECK_THROWS_AS(build_L(chr(Q(-2), Q(0))), std::invalid_argument);
    }
    SUBCASE("negated highest weight") {
        MatrixModule M = build_L(chr(-Q(2), Q(1)));
        CHECK(M.dim() == 3);
        CHECK(module_axiom_check(M).ok);
        CHECK(is_simple_module(M));
    }
}

TEST_CASE("reducibility boundary of the induced line modules") {
    // the E1-coefficient [j][lambda1; 1-j] vanishes for some j >= 1 exactly
    // when lambda1 = +-q^{j-1}
    for (long m = 0; m <= 7; ++m) {
        for (int s : {1, -1}) {
            Scalar lam1 = Scalar::from_int(s, kGen) * Q(m);
            bool vanished = false;
            for (long j = 1; j <= 8; ++j)
                if ((q_int(j, kGen) * q_bracket_a(lam1, 1 - j)).is_zero()) {
                    CHECK(j == m + 1);
                    vanished = true;
                }
            CHECK(vanished);
        }
    }
    for (const Scalar& lam1 : {Scalar::from_int(2, kGen), Scalar::from_int(3, kGen) * Q(1)}) {
        for (long j = 1; j <= 8; ++j) CHECK(!(q_int(j, kGen) * q_bracket_a(lam1, 1 - j)).is_zero());
    }
}

TEST_CASE("filtration components") {
    Character lam = chr(Q(2), Q(1));
    Character out = lam;
    SUBCASE("base stratum") {
        CHECK(check_filtration_component(lam, 0, 0, 4, &out));
        CHECK(out == lam);
    }
    SUBCASE("shifted strata") {
        CHECK(check_filtration_component(lam, 1, 0, 3, &out));
        CHECK(out == chr(Q(-1) * lam.k1, Q(-1) * lam.k2));
        CHECK(check_filtration_component(lam, 0, 2, 3, &out));
        CHECK(out == chr(Q(2) * lam.k1, Q(-4) * lam.k2));
    }
    SUBCASE("a non-integral character") {
        Character nl = chr(Scalar::from_int(2, kGen), Q(1));
        CHECK(check_filtration_component(nl, 1, 1, 3, &out));
    }
}

namespace {

size_t vn_family_rank(const Character& lam, int i, int j) {
    auto exps = weight_space_exponents(i, j);
    auto family = weight_space_vn_family(lam, i, j);
    std::map<FExp, size_t> index;
    for (size_t r = 0; r < exps.size(); ++r) index[exps[r]] = r;
    Matrix M(exps.size(), family.size(), kGen);
    for (size_t c = 0; c < family.size(); ++c) {
        auto w = vector_weight(family[c]);
        REQUIRE(w.has_value());
        CHECK(*w == basis_weight(lam, exps[0], kGen));
        for (const auto& [t, s] : family[c].terms()) M.at(index.at(t), c) = s;
    }
    return M.rank();
}

}  // namespace

TEST_CASE("the filtration spans are stable and F2 lowers them") {
    // the span of basis vectors with t2 + t3 >= n is closed under every
    // generator, and F2 maps it into the next step
    Character lam = chr(Scalar::from_int(2, kGen), Q(1));
    std::mt19937 rng(59);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            FExp t{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                   static_cast<int>(rng() % 3)};
            if (t[1] + t[2] < n) continue;
            FreeVermaVector b(AlgebraId::make(AlgebraKind::U, kGen), lam);
            b.add_term(t, Scalar::one(kGen));
            for (Letter g : {Letter::E1, Letter::E2, Letter::F1, Letter::F2, Letter::K1,
                             Letter::K2, Letter::F12, Letter::E12}) {
                FreeVermaVector img = verma_act(g, b);
                for (const auto& [s, c] : img.terms()) CHECK(s[1] + s[2] >= n);
                if (g == Letter::F2) {
                    for (const auto& [s, c] : img.terms()) CHECK(s[1] + s[2] >= n + 1);
                }
            }
        }
    }
}

TEST_CASE("weight spaces of the Verma module") {
    // non-degenerate characters: the shifted singular vectors form a basis of
    // every weight space, whose dimension is min(i,j) + 1
    for (const Character& lam :
         {chr(Scalar::from_int(2, kGen), Q(1)), chr(Q(9), Q(1)), weight_character(4, 2, kGen)}) {
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) {
                CHECK(weight_space_exponents(i, j).size() ==
                      static_cast<size_t>(std::min(i, j)) + 1);
                CHECK(vn_family_rank(lam, i, j) == static_cast<size_t>(std::min(i, j)) + 1);
            }
    }
    // boundary behavior: for lambda1 = q^m1 the top coefficient of v_s is
    // [m1+1][m1]...[m1+2-s]/[s]!, which vanishes once s >= m1 + 2, so the
    // family degenerates (here m1 = 1, s = 3) although the weight space keeps
    // dimension min(i,j) + 1
    CHECK(vn_family_rank(chr(Q(1), Q(1)), 3, 3) == 3);
}

TEST_CASE("E1 kernels inside the Verma module") {
    SUBCASE("generic character sees only the first family") {
        Character lam = chr(Scalar::from_int(2, kGen), Q(1));
        for (const auto& entry : kernel_of_E1_in_verma(lam, 4)) {
            // kernel vectors are exactly the F2^t3 v_t2 lines: one per weight
            // with j >= i, the coordinate sitting at s = i
            REQUIRE(entry.vn_coords.size() == 1);
            CHECK(entry.j >= entry.i);
            const auto& coords = entry.vn_coords[0];
            for (size_t s = 0; s < coords.size(); ++s) {
                if (static_cast<int>(s) == entry.i)
                    CHECK(!coords[s].is_zero());
                else
                    CHECK(coords[s].is_zero());
            }
        }
    }
    SUBCASE("integral character adds the second family") {
        Character lam = chr(Q(2), Q(1));  // m1 = 2
        bool found_f1_cubed = false;
        for (const auto& entry : kernel_of_E1_in_verma(lam, 5)) {
            if (entry.i == 3 && entry.j == 0) {
                // F1^{m1+1} v = F1^3 v is in the kernel
                found_f1_cubed = !entry.vn_coords.empty();
            }
        }
        CHECK(found_f1_cubed);
    }
    SUBCASE("v_1 is annihilated") {
        Character lam = chr(Q(2), Q(1));
        CHECK(verma_act(Letter::E1, hw_vector_vn(lam, 1)).is_zero());
    }
}

TEST_CASE("the span of high F1-powers of singular vectors is not stable") {
    // For lambda1 = q^m1, let N be spanned by F1^t1 F2^t3 v_t2 with
    // t1 > max(t3 - t2 + m1, -1). At the boundary m1 + t3 - t2 + 1 = 0 the
    // vector F2^t3 v_t2 lies in N, but applying F2 once leaves it:
    // membership is checked exactly inside the relevant weight spaces.
    const int m1 = 1;
    Character lam = chr(Q(m1), Q(1));
    auto in_N_span = [&](const FreeVermaVector& w, int i, int j) {
        // basis of the weight space in the v_s coordinates, restricted to N
        auto family = weight_space_vn_family(lam, i, j);
        auto exps = weight_space_exponents(i, j);
        std::map<FExp, size_t> index;
        for (size_t r = 0; r < exps.size(); ++r) index[exps[r]] = r;
        std::vector<std::vector<Scalar>> rows;
        for (int s = 0; s <= std::min(i, j); ++s) {
            int t1 = i - s, t3 = j - s;
            if (t1 > std::max(t3 - s + m1, -1)) {
                std::vector<Scalar> row(exps.size(), Scalar::zero(kGen));
                for (const auto& [t, c] : family[static_cast<size_t>(s)].terms())
                    row[index.at(t)] = c;
                rows.push_back(std::move(row));
            }
        }
        std::vector<Scalar> target(exps.size(), Scalar::zero(kGen));
        for (const auto& [t, c] : w.terms()) target[index.at(t)] = c;
        size_t base = span_rank(rows, kGen);
        rows.push_back(std::move(target));
        return span_rank(rows, kGen) == base;
    };
    // t2 = m1 + t3 + 1 with t3 = 0: v_2 lies in N, F2 v_2 does not
    FreeVermaVector v2 = hw_vector_vn(lam, 2);
    CHECK(in_N_span(v2, 2, 2));
    CHECK(!in_N_span(verma_act(Letter::F2, v2), 2, 3));
}

TEST_CASE("simple u-modules") {
    SUBCASE("one-dimensional") {
        MatrixModule M = build_V_u(0, 2, 3);
        CHECK(M.dim() == 1);
        CHECK(M.mat(Letter::K2).at(0, 0) == Q(2, kR3));
        CHECK(module_axiom_check(M).ok);
    }
    SUBCASE("the defining table at (1,0)") {
        MatrixModule M = build_V_u(1, 0, 3);
        REQUIRE(M.dim() == 2);
        CHECK(M.mat(Letter::F1).at(1, 0) == q_int(1, kR3));
        CHECK(M.mat(Letter::E1).at(0, 1) == q_int(1, kR3));
        for (size_t j = 0; j < 2; ++j)
            CHECK(M.mat(Letter::K2).at(j, j) == Q(static_cast<long>(j), kR3));
        CHECK(module_axiom_check(M).ok);
        CHECK(is_simple_module(M));
    }
    SUBCASE("every V(m1,m2) is simple and passes the axioms, l = 3") {
        for (int m1 = 0; m1 < 3; ++m1)
            for (int m2 = 0; m2 < 3; ++m2) {
                MatrixModule M = build_V_u(m1, m2, 3);
                CHECK(module_axiom_check(M).ok);
                CHECK(is_simple_module(M));
                auto hw = find_hw_vectors(M);
                REQUIRE(hw.size() == 1);
                CHECK(hw[0].weight == chr(Q(m1, kR3), Q(m2, kR3)));
                CHECK(hw[0].vectors.size() == 1);
            }
    }
}

TEST_CASE("Verma modules of u") {
    MatrixModule M = build_verma_u(1, 2, 3);
    CHECK(M.dim() == 27);
    CHECK(module_axiom_check(M).ok);
    // E_i v = 0, K_i v = q^{m_i} v on the cyclic vector (index 0)
    for (size_t r = 0; r < 27; ++r) {
        CHECK(M.mat(Letter::E1).at(r, 0).is_zero());
        CHECK(M.mat(Letter::E2).at(r, 0).is_zero());
    }
    CHECK(M.mat(Letter::K1).at(0, 0) == Q(1, kR3));
    CHECK(M.mat(Letter::K2).at(0, 0) == Q(2, kR3));
}

TEST_CASE("tensor products") {
    SUBCASE("dimensions multiply and the axioms survive") {
        MatrixModule T = tensor_module(build_V_u(1, 0, 3), build_V_u(2, 1, 3));
        CHECK(T.dim() == 6);
        CHECK(module_axiom_check(T).ok);
    }
    SUBCASE("E1 action matches the hand expansion on 2 (x) 2") {
        Character lam = chr(Q(1), Q(0));
        MatrixModule L = build_L(lam);
        MatrixModule T = tensor_module(L, L);
        // Delta(E1) = K1 (x) E1 + E1 (x) 1 on u_j (x) u_k
        const Matrix& E1 = T.mat(Letter::E1);
        const Matrix& K1 = L.mat(Letter::K1);
        const Matrix& e1 = L.mat(Letter::E1);
        for (size_t a = 0; a < 2; ++a)
            for (size_t b = 0; b < 2; ++b)
                for (size_t j = 0; j < 2; ++j)
                    for (size_t k = 0; k < 2; ++k) {
                        Scalar expect = Scalar::zero(kGen);
                        if (a == j) expect += K1.at(j, j) * e1.at(b, k);
                        expect += e1.at(a, j) * (b == k ? Scalar::one(kGen) : Scalar::zero(kGen));
                        CHECK(E1.at(a * 2 + b, j * 2 + k) == expect);
                    }
        // group-likes act diagonally with products of eigenvalues
        CHECK(T.mat(Letter::K1).is_diagonal());
    }
}

TEST_CASE("Clebsch-Gordan decomposition") {
    SUBCASE("the (1,1) case") {
        Character lam = chr(Q(1), Q(1)), mu = chr(Q(1), Q(2));
        DecompositionReport rep = clebsch_gordan(lam, mu);
        CHECK(rep.verified);
        REQUIRE(rep.factors.size() == 2);
        bool top = false, bottom = false;
        for (size_t i = 0; i < rep.factors.size(); ++i) {
            if (rep.factors[i].first == chr(Q(2), Q(3))) top = rep.dims[i] == 3;
            if (rep.factors[i].first == chr(Q(0), Q(4))) bottom = rep.dims[i] == 1;
            CHECK(rep.factors[i].second == 1);
        }
        CHECK(top);
        CHECK(bottom);
    }
    SUBCASE("a one-dimensional factor is already simple") {
        DecompositionReport rep = clebsch_gordan(chr(Q(0), Q(1)), chr(Q(2), Q(1)));
        CHECK(rep.verified);
        CHECK(rep.factors.size() == 1);
    }
    SUBCASE("signs") {
        DecompositionReport rep = clebsch_gordan(chr(-Q(1), Q(0)), chr(Q(2), Q(1)));
        CHECK(rep.verified);
    }
}

TEST_CASE("highest-weight extraction") {
    SUBCASE("a simple has exactly one line") {
        MatrixModule M = build_L(chr(Q(2), Q(0)));
        auto hw = find_hw_vectors(M);
        REQUIRE(hw.size() == 1);
        CHECK(hw[0].weight == chr(Q(2), Q(0)));
        CHECK(hw[0].vectors.size() == 1);
    }
    SUBCASE("the two-dimensional indecomposable") {
        MatrixModule M = build_V_indecomposable(1, -1, Scalar::from_int(5, kGen));
        // both basis vectors are annihilated by the E's, so both lines are
        // highest weight, yet F2 v1 = v2 glues them together
        auto hw = find_hw_vectors(M);
        size_t lines = 0;
        for (const auto& h : hw) lines += h.vectors.size();
        CHECK(lines == 2);
        CHECK(!is_simple_module(M));
        CHECK(generated_submodule_dim(M, {{Scalar::one(kGen), Scalar::zero(kGen)}}) == 2);
        CHECK(generated_submodule_dim(M, {{Scalar::zero(kGen), Scalar::one(kGen)}}) == 1);
        // the displayed action table is not fully consistent: conjugating F2
        // by K1 must scale by q, which no pair of signs can satisfy, so
        // exactly the K1/F2 conjugation is reported as violated
        AxiomReport rep = module_axiom_check(M);
        CHECK(!rep.ok);
        for (const std::string& v : rep.violations) CHECK(v == "K conj F");
    }
}

TEST_CASE("finite simple highest-weight modules are classified by their top weight") {
    Character lam = chr(Q(2), Q(1));
    auto c = classify_simple_highest_weight(build_L(lam));
    REQUIRE(c.has_value());
    CHECK(*c == lam);
    Character neg = chr(-Q(1), Scalar::from_int(2, kGen));
    auto cn = classify_simple_highest_weight(build_L(neg));
    REQUIRE(cn.has_value());
    CHECK(*cn == neg);
    // glued highest-weight lines are rejected
    CHECK(!classify_simple_highest_weight(
               build_V_indecomposable(1, 1, Scalar::from_int(2, kGen)))
               .has_value());
    // tensor products with several factors are rejected
    CHECK(!classify_simple_highest_weight(tensor_module(build_L(lam), build_L(lam))).has_value());
}

TEST_CASE("module axiom check catches corruption") {
    MatrixModule M = build_V_u(1, 0, 3);
    M.action.at(Letter::E1).at(0, 1) = Q(1, kR3) + Scalar::one(kR3);
    AxiomReport rep = module_axiom_check(M);
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
}

TEST_CASE("pullbacks and the one-dimensional twist") {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CentralParameter z = CentralParameter::make(Q(a, kR3), Q(b, kR3));
            for (int m1 = 0; m1 < 3; ++m1) {
                MatrixModule M = build_V_u(m1, (m1 + b) % 3, 3);
                MatrixModule P = pullback_z(M, z);
                CHECK(module_axiom_check(P).ok);
                CHECK(twist_check(M, z));
                // K1 Kt1^-1 acts as z1 times the identity
                Matrix central = P.mat(Letter::K1) * P.mat(Letter::Kt1).inverse();
                CHECK(central == Matrix::identity(P.dim(), kR3) * z.z1);
            }
        }
}

TEST_CASE("window intertwiners between line modules") {
    // V(lambda) and V(mu) admit no nonzero intertwiner on a degree-4 window
    // unless lambda = mu (the K-spectra of the top vectors differ)
    const int W = 5;  // window holds u_0..u_4
    auto window_action = [&](const Character& lam) {
        // action matrices on the truncated window; F1 sends u_4 out, tracked separately
        Matrix K1(W, W, kGen), K2(W, W, kGen), E1(W, W, kGen);
        for (int j = 0; j < W; ++j) {
            K1.at(j, j) = lam.k1 * Q(-2 * j);
            K2.at(j, j) = lam.k2 * Q(j);
            if (j >= 1) E1.at(j - 1, j) = q_int(j, kGen) * q_bracket_a(lam.k1, 1 - j);
        }
        return std::tuple{K1, K2, E1};
    };
    auto intertwiner_dim = [&](const Character& lam, const Character& mu) {
        auto [K1a, K2a, E1a] = window_action(lam);
        auto [K1b, K2b, E1b] = window_action(mu);
        // unknowns f_{ij}; conditions f g_a = g_b f for g in {K1, K2, E1} and
        // f F1_a = F1_b f wherever the window keeps both sides
        std::vector<std::vector<Scalar>> rows;
        auto add_commute = [&](const Matrix& A, const Matrix& B, int limit) {
            // (f A - B f)_{i j} = sum_k f_{ik} A_{kj} - B_{ik} f_{kj}
            for (int i = 0; i < W; ++i)
                for (int j = 0; j < limit; ++j) {
                    std::vector<Scalar> row(W * W, Scalar::zero(kGen));
                    for (int k = 0; k < W; ++k) {
                        row[i * W + k] += A.at(k, j);
                        row[k * W + j] -= B.at(i, k);
                    }
                    rows.push_back(std::move(row));
                }
        };
        add_commute(K1a, K1b, W);
        add_commute(K2a, K2b, W);
        add_commute(E1a, E1b, W);
        Matrix F1a(W, W, kGen), F1b(W, W, kGen);
        for (int j = 0; j + 1 < W; ++j) {
            F1a.at(j + 1, j) = Scalar::one(kGen);
            F1b.at(j + 1, j) = Scalar::one(kGen);
        }
        add_commute(F1a, F1b, W - 1);
        Matrix M(rows.size(), W * W, kGen);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < static_cast<size_t>(W * W); ++c) M.at(r, c) = rows[r][c];
        return M.kernel().size();
    };
    Character a = chr(Scalar::from_int(2, kGen), Q(1));
    Character b = chr(Scalar::from_int(2, kGen), Q(2));
    Character c = chr(Q(3), Q(1));
    CHECK(intertwiner_dim(a, a) >= 1);
    CHECK(intertwiner_dim(a, b) == 0);
    CHECK(intertwiner_dim(a, c) == 0);
    CHECK(intertwiner_dim(c, c) >= 1);
}
