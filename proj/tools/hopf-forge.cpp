// hopf-forge: exact computations in the pointed Hopf algebra U of Cartan
// type A2 x A2 with one linked vertex pair, its root-of-unity quotient u,
// the double crossproduct of the Borel halves, their modules, and the
// primitive-idempotent machinery of the rank-one subalgebra.
//
// Every output is deterministic: identical invocations print identical bytes.

#include "hopfforge/idempotents.hpp"
#include "hopfforge/json_io.hpp"
#include "hopfforge/oracle.hpp"
#include "hopfforge/pairing.hpp"
#include "hopfforge/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>

using namespace hopfforge;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string mode = "generic";
    int l = 0;
    std::string format = "text";
    unsigned seed = 1;

    FieldMode field_mode() const {
        if (mode == "generic" && l == 0) return FieldMode::generic();
        if (l != 0) return FieldMode::root_of_unity(l);
        return FieldMode::generic();
    }
    bool json_out() const { return format == "json"; }
};

void emit(const GlobalOptions& g, const json& j, const std::string& text) {
    if (g.json_out())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

AlgebraId algebra_for(const std::string& name, const GlobalOptions& g) {
    AlgebraKind k = algebra_kind_from_name(name);
    return AlgebraId::make(k, g.field_mode());
}

json module_summary(const MatrixModule& M) {
    json j = module_to_json(M);
    AxiomReport rep = module_axiom_check(M);
    j["axioms_ok"] = rep.ok;
    j["violations"] = rep.violations;
    return j;
}

std::string hw_text(const MatrixModule& M) {
    std::ostringstream out;
    for (const auto& h : find_hw_vectors(M)) {
        out << "highest weight " << h.weight.to_string() << " multiplicity " << h.vectors.size()
            << "\n";
    }
    return out.str();
}

int run_selftest(const GlobalOptions& g, int words) {
    std::mt19937 rng(g.seed);
    const Letter basics[6] = {Letter::E1, Letter::E2, Letter::F1,
                              Letter::F2, Letter::K1, Letter::K2};
    int failures = 0;
    for (const char* mode : {"generic", "root"}) {
        FieldMode fm = mode[0] == 'g' ? FieldMode::generic() : FieldMode::root_of_unity(3);
        AlgebraId A = AlgebraId::make(mode[0] == 'g' ? AlgebraKind::U : AlgebraKind::u, fm);
        for (int n = 0; n < words; ++n) {
            std::vector<Letter> w;
            int len = 1 + static_cast<int>(rng() % 8);
            for (int i = 0; i < len; ++i) w.push_back(basics[rng() % 6]);
            FreeWord fw(Scalar::one(fm), w);
            if (!(normal_form(fw, A) == oracle_normal_form(fw, A))) ++failures;
        }
    }
    json j{{"oracle_words_per_mode", words}, {"failures", failures}};
    emit(g, j, failures == 0 ? "selftest: ok" : "selftest: FAILED");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic computations for a pointed Hopf algebra of type A2 x A2"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--mode", g.mode, "coefficient field: generic (default) or root");
    app.add_option("--l", g.l, "order of the root of unity (root-of-unity mode)");
    app.add_option("--format", g.format, "output format: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized subcommands");

    std::string algebra = "U", expr, expr2, expr3, expr4, normalization = "printed";
    int m1 = 0, m2 = 0, n1 = 0, n2 = 0, sector = 0, z1 = 0, z2 = 0, nlevel = 0;
    int eps1 = 1, eps2 = 1;
    std::string lambda2 = "1", mu2 = "1";
    bool as_verma = false;
    int words = 50;

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("--algebra", algebra, "U, u, uGeq0, uLeq0, u1, or Dphi");
    nf->add_option("expr", expr, "expression")->required();

    auto* mul = app.add_subcommand("mul", "product of two expressions");
    mul->add_option("--algebra", algebra);
    mul->add_option("lhs", expr)->required();
    mul->add_option("rhs", expr2)->required();

    auto* delta = app.add_subcommand("delta", "coproduct");
    delta->add_option("--algebra", algebra);
    delta->add_option("expr", expr)->required();

    auto* anti = app.add_subcommand("antipode", "antipode");
    anti->add_option("--algebra", algebra);
    anti->add_option("expr", expr)->required();

    auto* cou = app.add_subcommand("counit", "counit");
    cou->add_option("--algebra", algebra);
    cou->add_option("expr", expr)->required();

    auto* pair = app.add_subcommand("pair", "skew Hopf pairing of Borel elements");
    pair->add_option("upper", expr, "element of uGeq0")->required();
    pair->add_option("lower", expr2, "element of uLeq0")->required();
    pair->add_option("--normalization", normalization, "printed or presentation")
        ->check(CLI::IsMember({"printed", "presentation"}));

    auto* dmul = app.add_subcommand("double-mul", "double crossproduct product of leg pairs");
    dmul->add_option("a", expr, "uGeq0 leg of the first factor")->required();
    dmul->add_option("x", expr2, "uLeq0 leg of the first factor")->required();
    dmul->add_option("b", expr3, "uGeq0 leg of the second factor")->required();
    dmul->add_option("y", expr4, "uLeq0 leg of the second factor")->required();
    dmul->add_option("--normalization", normalization)
        ->check(CLI::IsMember({"printed", "presentation"}));

    auto* piz = app.add_subcommand("pi-z", "central twist map from Dphi to u");
    piz->add_option("expr", expr, "element of Dphi")->required();
    piz->add_option("--z1", z1, "exponent: z1 = zeta^z1")->required();
    piz->add_option("--z2", z2, "exponent: z2 = zeta^z2")->required();

    auto* verma = app.add_subcommand("verma", "Verma module of u with highest weight (q^m1, q^m2)");
    verma->add_option("--m1", m1)->required();
    verma->add_option("--m2", m2)->required();

    auto* simple = app.add_subcommand("simple", "simple module: V(m1,m2) over u, or L(lambda) over U");
    simple->add_option("--m1", m1);
    simple->add_option("--m2", m2);
    simple->add_option("--lambda1", expr, "generic mode: K1-value, of the form +-q^m");
    simple->add_option("--lambda2", lambda2, "generic mode: K2-value expression");

    auto* hwv = app.add_subcommand("hwv", "highest-weight vectors");
    hwv->add_option("--m1", m1);
    hwv->add_option("--m2", m2);
    hwv->add_flag("--verma", as_verma, "use the Verma module of u instead of V(m1,m2)");
    hwv->add_option("--n", nlevel, "generic mode: print the singular vector v_n");
    hwv->add_option("--lambda1", expr, "generic mode: K1-value expression");
    hwv->add_option("--lambda2", lambda2, "generic mode: K2-value expression");

    auto* tens = app.add_subcommand("tensor", "tensor product V(m1,m2) (x) V(n1,n2) over u");
    tens->add_option("--m1", m1)->required();
    tens->add_option("--m2", m2)->required();
    tens->add_option("--n1", n1)->required();
    tens->add_option("--n2", n2)->required();

    auto* cg = app.add_subcommand("cg", "Clebsch-Gordan decomposition of L (x) L (generic mode)");
    cg->add_option("--m", m1, "lambda1 = eps1 q^m")->required();
    cg->add_option("--n", n1, "mu1 = eps2 q^n")->required();
    cg->add_option("--eps1", eps1)->check(CLI::IsMember({-1, 1}));
    cg->add_option("--eps2", eps2)->check(CLI::IsMember({-1, 1}));
    cg->add_option("--lambda2", lambda2, "K2-value of lambda");
    cg->add_option("--mu2", mu2, "K2-value of mu");

    auto* pull = app.add_subcommand("pullback", "pullback of V(m1,m2) along pi_z");
    pull->add_option("--m1", m1)->required();
    pull->add_option("--m2", m2)->required();
    pull->add_option("--z1", z1)->required();
    pull->add_option("--z2", z2)->required();

    auto* idem = app.add_subcommand("idem", "idempotent computations in u1");
    idem->require_subcommand(1);
    auto* isolve = idem->add_subcommand("solve", "solve the idempotent equation system");
    isolve->add_option("--i", sector, "group-idempotent sector")->required();
    auto* iverify = idem->add_subcommand("verify", "verify an element JSON as an idempotent");
    iverify->add_option("json", expr, "Element JSON (algebra u1)")->required();
    auto* idecomp = idem->add_subcommand("decompose-u1", "orthogonal primitive decomposition of 1");

    auto* cong = app.add_subcommand("congruence", "weight congruence solver");
    cong->add_option("--m1", m1)->required();
    cong->add_option("--m2", m2)->required();

    auto* self = app.add_subcommand("selftest", "engine-versus-oracle fuzz check");
    self->add_option("--words", words, "random words per mode");

    // let the global flags (--l, --mode, --format, --seed) appear after the
    // subcommand name as well
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (*nf || *mul || *anti) {
            AlgebraId A = algebra_for(algebra, g);
            Element x = parse_element(expr, A);
            if (*mul) x = multiply(x, parse_element(expr2, A));
            if (*anti) x = antipode(x);
            emit(g, element_to_json(x), render_element(x));
        } else if (*delta) {
            AlgebraId A = algebra_for(algebra, g);
            TensorElement t = comultiply(parse_element(expr, A));
            emit(g, tensor_to_json(t), t.to_string());
        } else if (*cou) {
            AlgebraId A = algebra_for(algebra, g);
            Scalar c = counit(parse_element(expr, A));
            emit(g, scalar_to_json(c), c.to_string());
        } else if (*pair) {
            if (g.l == 0) throw std::invalid_argument("pair: requires --l");
            SkewPairing phi(g.l, normalization == "printed" ? PairingNormalization::Printed
                                                            : PairingNormalization::Presentation);
            AlgebraId up = AlgebraId::make(AlgebraKind::uGeq0, phi.mode());
            AlgebraId low = AlgebraId::make(AlgebraKind::uLeq0, phi.mode());
            Scalar v = phi.pair(parse_element(expr, up), parse_element(expr2, low));
            emit(g, scalar_to_json(v), v.to_string());
        } else if (*dmul) {
            if (g.l == 0) throw std::invalid_argument("double-mul: requires --l");
            SkewPairing phi(g.l, normalization == "printed" ? PairingNormalization::Printed
                                                            : PairingNormalization::Presentation);
            AlgebraId up = AlgebraId::make(AlgebraKind::uGeq0, phi.mode());
            AlgebraId low = AlgebraId::make(AlgebraKind::uLeq0, phi.mode());
            TensorElement t = phi.double_multiply(parse_element(expr, up), parse_element(expr2, low),
                                                  parse_element(expr3, up), parse_element(expr4, low));
            emit(g, tensor_to_json(t), t.to_string());
        } else if (*piz) {
            if (g.l == 0) throw std::invalid_argument("pi-z: requires --l");
            FieldMode fm = FieldMode::root_of_unity(g.l);
            AlgebraId D = AlgebraId::make(AlgebraKind::Dphi, fm);
            CentralParameter z = CentralParameter::make(Scalar::q_power(z1, fm),
                                                        Scalar::q_power(z2, fm));
            Element out = pi_z(parse_element(expr, D), z);
            emit(g, element_to_json(out), render_element(out));
        } else if (*verma) {
            if (g.l == 0) throw std::invalid_argument("verma: requires --l");
            MatrixModule M = build_verma_u(m1, m2, g.l);
            emit(g, module_summary(M),
                 "Verma module of u, dim " + std::to_string(M.dim()) + "\n" + hw_text(M));
        } else if (*simple) {
            if (g.l != 0) {
                MatrixModule M = build_V_u(m1, m2, g.l);
                emit(g, module_summary(M),
                     "V(" + std::to_string(m1) + "," + std::to_string(m2) + "), dim " +
                         std::to_string(M.dim()) + (is_simple_module(M) ? ", simple" : ""));
            } else {
                AlgebraId U = AlgebraId::make(AlgebraKind::U, FieldMode::generic());
                auto scalar_of = [&](const std::string& s) {
                    Element e = parse_element(s, U);
                    if (e.terms().size() != 1 || !e.terms().begin()->first.is_unit())
                        throw std::invalid_argument("expected a scalar expression");
                    return e.terms().begin()->second;
                };
                Character lam = Character::make(scalar_of(expr), scalar_of(lambda2));
                MatrixModule M = build_L(lam);
                emit(g, module_summary(M),
                     "L" + lam.to_string() + ", dim " + std::to_string(M.dim()) +
                         (is_simple_module(M) ? ", simple" : ""));
            }
        } else if (*hwv) {
            if (g.l != 0) {
                MatrixModule M = as_verma ? build_verma_u(m1, m2, g.l) : build_V_u(m1, m2, g.l);
                json j = json::array();
                for (const auto& h : find_hw_vectors(M))
                    j.push_back(json{{"weight", character_to_json(h.weight)},
                                     {"multiplicity", h.vectors.size()}});
                emit(g, j, hw_text(M));
            } else {
                AlgebraId U = AlgebraId::make(AlgebraKind::U, FieldMode::generic());
                auto scalar_of = [&](const std::string& s) {
                    Element e = parse_element(s, U);
                    if (e.terms().size() != 1 || !e.terms().begin()->first.is_unit())
                        throw std::invalid_argument("expected a scalar expression");
                    return e.terms().begin()->second;
                };
                Character lam = Character::make(scalar_of(expr.empty() ? "q" : expr),
                                                scalar_of(lambda2));
                FreeVermaVector vn = hw_vector_vn(lam, nlevel);
                bool ok = check_highest_weight(vn);
                json j{{"vn", vn.to_string()}, {"highest_weight", ok}};
                emit(g, j, vn.to_string() + (ok ? "\n(highest weight vector)" : "\n(NOT highest weight)"));
            }
        } else if (*tens) {
            if (g.l == 0) throw std::invalid_argument("tensor: requires --l");
            MatrixModule T = tensor_module(build_V_u(m1, m2, g.l), build_V_u(n1, n2, g.l));
            emit(g, module_summary(T),
                 "tensor product, dim " + std::to_string(T.dim()) + "\n" + hw_text(T));
        } else if (*cg) {
            FieldMode fm = FieldMode::generic();
            AlgebraId U = AlgebraId::make(AlgebraKind::U, fm);
            auto scalar_of = [&](const std::string& s) {
                Element e = parse_element(s, U);
                if (e.terms().size() != 1 || !e.terms().begin()->first.is_unit())
                    throw std::invalid_argument("expected a scalar expression");
                return e.terms().begin()->second;
            };
            Character lam = Character::make(Scalar::from_int(eps1, fm) * Scalar::q_power(m1, fm),
                                            scalar_of(lambda2));
            Character mu = Character::make(Scalar::from_int(eps2, fm) * Scalar::q_power(n1, fm),
                                           scalar_of(mu2));
            DecompositionReport rep = clebsch_gordan(lam, mu);
            json jf = json::array();
            std::ostringstream text;
            for (size_t i = 0; i < rep.factors.size(); ++i) {
                jf.push_back(json{{"weight", character_to_json(rep.factors[i].first)},
                                  {"multiplicity", rep.factors[i].second},
                                  {"dim", rep.dims[i]}});
                text << "L" << rep.factors[i].first.to_string() << " dim " << rep.dims[i]
                     << " multiplicity " << rep.factors[i].second << "\n";
            }
            text << (rep.verified ? "verified" : "NOT verified");
            emit(g, json{{"factors", jf}, {"verified", rep.verified}}, text.str());
        } else if (*pull) {
            if (g.l == 0) throw std::invalid_argument("pullback: requires --l");
            FieldMode fm = FieldMode::root_of_unity(g.l);
            CentralParameter z = CentralParameter::make(Scalar::q_power(z1, fm),
                                                        Scalar::q_power(z2, fm));
            MatrixModule M = build_V_u(m1, m2, g.l);
            MatrixModule P = pullback_z(M, z);
            json j = module_summary(P);
            bool tw = twist_check(M, z);
            j["twist_check"] = tw;
            emit(g, j,
                 "pullback of V(" + std::to_string(m1) + "," + std::to_string(m2) + "), twist " +
                     (tw ? "ok" : "FAILED"));
        } else if (*isolve) {
            if (g.l == 0) throw std::invalid_argument("idem solve: requires --l");
            json j = json::array();
            std::ostringstream text;
            for (const auto& s : solve_idempotents(sector, g.l)) {
                json coeffs = json::array();
                for (const auto& c : s.coeffs) coeffs.push_back(scalar_to_json(c));
                j.push_back(json{{"i", s.i},
                                 {"coeffs", coeffs},
                                 {"element", element_to_json(s.element)},
                                 {"verified", s.verified}});
                text << "(";
                for (size_t k = 0; k < s.coeffs.size(); ++k)
                    text << (k ? ", " : "") << s.coeffs[k].to_string();
                text << ")  ->  " << render_element(s.element) << "\n";
            }
            emit(g, j, text.str());
        } else if (*iverify) {
            Element e = element_from_json(json::parse(expr));
            bool idem_ok = multiply(e, e) == e;
            bool prim = idem_ok && !e.is_zero() ? is_primitive(e) : false;
            json j{{"idempotent", idem_ok}, {"primitive", prim}};
            emit(g, j,
                 std::string("idempotent: ") + (idem_ok ? "yes" : "no") +
                     ", primitive: " + (prim ? "yes" : "no"));
        } else if (*idecomp) {
            int l = g.l == 0 ? 3 : g.l;
            RegularDecomposition dec = decompose_regular_u1(l);
            json js = json::array();
            std::ostringstream text;
            size_t total = 0;
            for (const auto& s : dec.summands) {
                json coeffs = json::array();
                for (const auto& c : s.coeffs) coeffs.push_back(scalar_to_json(c));
                js.push_back(json{{"i", s.i},
                                  {"coeffs", coeffs},
                                  {"element", element_to_json(s.idempotent)},
                                  {"left_ideal_dim", s.left_ideal_dim},
                                  {"primitive", s.primitive}});
                total += s.left_ideal_dim;
                text << "sector " << s.i << ": " << render_element(s.idempotent) << "\n"
                     << "  left ideal dim " << s.left_ideal_dim
                     << (s.primitive ? ", primitive" : ", NOT primitive") << "\n";
            }
            text << "orthogonal: " << (dec.orthogonal ? "yes" : "no")
                 << ", sum = 1: " << (dec.complete ? "yes" : "no") << ", total dim " << total;
            emit(g,
                 json{{"summands", js},
                      {"orthogonal", dec.orthogonal},
                      {"complete", dec.complete},
                      {"total_dim", total}},
                 text.str());
        } else if (*cong) {
            if (g.l == 0) throw std::invalid_argument("congruence: requires --l");
            CongruenceSolution s = congruence_solve(m1, m2, g.l);
            emit(g, json{{"t2", s.t2}, {"t3", s.t3}},
                 "t2 = " + std::to_string(s.t2) + ", t3 = " + std::to_string(s.t3));
        } else if (*self) {
            return run_selftest(g, words);
        }
    } catch (const std::exception& ex) {
        std::cout << json{{"error", ex.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
