#include "hopfforge/json_io.hpp"

#include <stdexcept>

namespace hopfforge {

using nlohmann::json;

namespace {

json poly_to_pairs(const Poly& p) {
    json arr = json::array();
    for (int e = 0; e <= p.degree(); ++e) {
        if (p[e] == 0) continue;
        arr.push_back(json::array({e, rational_to_string(p[e])}));
    }
    return arr;
}

Poly poly_from_pairs(const json& arr) {
    Poly p;
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("scalar json: bad coefficient entry");
        long e = entry[0].get<long>();
        Rational c = rational_from_string(entry[1].get<std::string>());
        p = p + Poly::monomial(c, static_cast<int>(e));
    }
    return p;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    if (s.mode().is_root()) {
        json z = json::array();
        int deg = cyclotomic(s.mode().l).degree();
        for (int i = 0; i < deg; ++i) z.push_back(rational_to_string(s.num()[i]));
        return json{{"l", s.mode().l}, {"zeta", z}};
    }
    return json{{"num", poly_to_pairs(s.num())}, {"den", poly_to_pairs(s.den())}};
}

Scalar scalar_from_json(const json& j) {
    if (j.contains("l")) {
        int l = j.at("l").get<int>();
        FieldMode m = FieldMode::root_of_unity(l);
        const auto& z = j.at("zeta");
        if (static_cast<int>(z.size()) != cyclotomic(l).degree())
            throw std::invalid_argument("scalar json: zeta vector has the wrong length");
        Scalar out = Scalar::zero(m);
        for (size_t i = 0; i < z.size(); ++i) {
            Rational c = rational_from_string(z[i].get<std::string>());
            out += Scalar::from_rational(c, m) * Scalar::q_power(static_cast<long>(i), m);
        }
        return out;
    }
    std::vector<std::pair<long, Rational>> num, den;
    for (const auto& e : j.at("num")) num.emplace_back(e[0].get<long>(), rational_from_string(e[1].get<std::string>()));
    for (const auto& e : j.at("den")) den.emplace_back(e[0].get<long>(), rational_from_string(e[1].get<std::string>()));
    return Scalar::from_laurent_fraction(num, den, FieldMode::generic());
}

namespace {

json monomial_to_json(const PbwMonomial& m, bool with_kt) {
    json t{{"F", {m.f[0], m.f[1], m.f[2]}}, {"K", {m.k[0], m.k[1]}},
           {"E", {m.e[0], m.e[1], m.e[2]}}};
    if (with_kt) t["Kt"] = {m.kt[0], m.kt[1]};
    return t;
}

PbwMonomial monomial_from_json(const json& t) {
    PbwMonomial m;
    for (int i = 0; i < 3; ++i) m.f[i] = t.at("F")[i].get<int>();
    for (int i = 0; i < 2; ++i) m.k[i] = t.at("K")[i].get<int>();
    for (int i = 0; i < 3; ++i) m.e[i] = t.at("E")[i].get<int>();
    if (t.contains("Kt"))
        for (int i = 0; i < 2; ++i) m.kt[i] = t.at("Kt")[i].get<int>();
    return m;
}

json mode_fields(const AlgebraId& A, json j) {
    j["algebra"] = algebra_kind_name(A.kind);
    if (A.mode.is_root()) {
        j["mode"] = "root_of_unity";
        j["l"] = A.mode.l;
    } else {
        j["mode"] = "generic";
    }
    return j;
}

FieldMode mode_from_json(const json& j) {
    std::string m = j.at("mode").get<std::string>();
    if (m == "generic") return FieldMode::generic();
    if (m == "root_of_unity") return FieldMode::root_of_unity(j.at("l").get<int>());
    throw std::invalid_argument("element json: unknown mode " + m);
}

}  // namespace

json element_to_json(const Element& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json t = monomial_to_json(m, x.algebra().has_kt());
        t["coeff"] = scalar_to_json(c);
        terms.push_back(std::move(t));
    }
    return mode_fields(x.algebra(), json{{"terms", terms}});
}

Element element_from_json(const json& j) {
    AlgebraId A = AlgebraId::make(algebra_kind_from_name(j.at("algebra").get<std::string>()),
                                  mode_from_json(j));
    Element x(A);
    for (const auto& t : j.at("terms")) {
        Scalar c = scalar_from_json(t.at("coeff"));
        if (!(c.mode() == A.mode)) throw std::invalid_argument("element json: scalar mode mismatch");
        x.add_term(monomial_from_json(t), c);
    }
    return x;
}

json tensor_to_json(const TensorElement& t) {
    json terms = json::array();
    bool kt = t.left_algebra().has_kt() || t.right_algebra().has_kt();
    for (const auto& [k, c] : t.terms()) {
        terms.push_back(json{{"left", monomial_to_json(k.first, kt)},
                             {"right", monomial_to_json(k.second, kt)},
                             {"coeff", scalar_to_json(c)}});
    }
    json j = mode_fields(t.left_algebra(), json{{"terms", terms}});
    j["algebra"] = algebra_kind_name(t.left_algebra().kind);
    j["right_algebra"] = algebra_kind_name(t.right_algebra().kind);
    return j;
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            entries.push_back(json::array({i, j, scalar_to_json(m.at(i, j))}));
        }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json module_to_json(const MatrixModule& M) {
    json action;
    for (const auto& [g, mat] : M.action) action[letter_name(g)] = matrix_to_json(mat);
    return mode_fields(M.alg, json{{"basis", M.basis}, {"action", action}});
}

json character_to_json(const Character& c) {
    return json{{"K1", scalar_to_json(c.k1)}, {"K2", scalar_to_json(c.k2)}};
}

}  // namespace hopfforge
