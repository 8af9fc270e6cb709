#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfforge/json_io.hpp"
#include "hopfforge/parser.hpp"
#include "hopfforge/qcomb.hpp"

#include "helpers.hpp"

#include <random>

using namespace hopfforge;
using hopfforge::testing::random_element;

namespace {

const FieldMode kGen = FieldMode::generic();
const FieldMode kR3 = FieldMode::root_of_unity(3);
const AlgebraId kU = AlgebraId::make(AlgebraKind::U, kGen);
const AlgebraId ku = AlgebraId::make(AlgebraKind::u, kR3);

}  // namespace

TEST_CASE("expressions evaluate through the engine") {
    // the linked commutator
    Element x = parse_element("E1*F1 - F1*E1", kU);
    Element expected = multiply(Element::generator(kU, Letter::E1), Element::generator(kU, Letter::F1)) -
                       multiply(Element::generator(kU, Letter::F1), Element::generator(kU, Letter::E1));
    CHECK(x == expected);
    CHECK(x.terms().size() == 2);  // two group-like monomials

    CHECK(parse_element("qbinom(2,1)*K1", kU) ==
          Element::generator(kU, Letter::K1).scaled(q_int(2, kGen)));
    CHECK(parse_element("E1^3", ku).is_zero());
    CHECK(parse_element("qint(3)", ku).is_zero());
    CHECK(parse_element("qfac(2) - q - q^-1", kU).is_zero());
    CHECK(parse_element("K1^-2", kU) ==
          parse_element("K1^-1*K1^-1", kU));
    CHECK(parse_element("(E1 + F1)^2", kU) ==
          multiply(parse_element("E1 + F1", kU), parse_element("E1 + F1", kU)));
    CHECK(parse_element("2/3", kU) ==
          Element::unit(kU).scaled(Scalar::from_rational(Rational(2, 3), kGen)));
    CHECK(parse_element("-E1 + E1", kU).is_zero());
    CHECK(parse_element("Kt1*Kt1^-1", AlgebraId::make(AlgebraKind::Dphi, kR3)) ==
          Element::unit(AlgebraId::make(AlgebraKind::Dphi, kR3)));
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const std::string& text, const AlgebraId& A) {
        try {
            parse_element(text, A);
        } catch (const ParseError& e) {
            return std::pair{e.line, e.column};
        }
        return std::pair{-1, -1};
    };
    CHECK(pos_of("E1 + ", kU).second == 6);
    CHECK(pos_of("E1 ** F1", kU).second == 5);
    CHECK(pos_of("E3", kU).first == 1);
    CHECK(pos_of("Kt1", kU).second == 1);       // illegal generator for U
    CHECK(pos_of("E1^-1", kU).second == 4);     // negative exponent off a group-like
    CHECK(pos_of("qbinom(1,2)", kU).first == 1);
    CHECK(pos_of("E1 F1", kU).second == 4);     // trailing input
    CHECK_THROWS_AS(parse_element("1/0", kU), ParseError);
}

TEST_CASE("rendering round-trips") {
    std::mt19937 rng(91);
    for (const AlgebraId& A : {kU, ku, AlgebraId::make(AlgebraKind::Dphi, kR3),
                               AlgebraId::make(AlgebraKind::uGeq0, kR3)}) {
        for (int t = 0; t < 50; ++t) {
            Element x = random_element(A, rng, 3, 3);
            std::string text = render_element(x);
            CHECK(parse_element(text, A) == x);
            // rendering is deterministic
            CHECK(render_element(parse_element(text, A)) == text);
        }
    }
    // denominators appear wherever coefficients need them
    Element c = parse_element("E1*F1 - F1*E1", kU);
    CHECK(parse_element(render_element(c), kU) == c);
}

TEST_CASE("malformed JSON is rejected before any output") {
    CHECK_THROWS(element_from_json(nlohmann::json::parse("{\"algebra\":\"U\"}")));
    CHECK_THROWS(element_from_json(nlohmann::json::parse(
        "{\"algebra\":\"bogus\",\"mode\":\"generic\",\"terms\":[]}")));
    CHECK_THROWS(scalar_from_json(nlohmann::json::parse("{\"l\":3,\"zeta\":[\"1\"]}")));
    CHECK_THROWS(scalar_from_json(nlohmann::json::parse("{\"num\":[[0,\"x\"]],\"den\":[[0,\"1\"]]}")));
}
