// Expression parser for algebra elements, and the canonical renderer whose
// output parses back to the same element.
//
// Grammar:
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*     (divisor must be scalar)
//   factor := atom ("^" int)?
//   atom   := GEN | SCALAR | "(" expr ")"
//   GEN    := E1 | E2 | E12 | F1 | F2 | F12 | K1 | K2 | Kt1 | Kt2
//   SCALAR := rational | "q" | "qint(" int ")" | "qfac(" int ")"
//             | "qbinom(" int "," int ")"
// Negative exponents are allowed on the group-like generators and on q.
#pragma once

#include "hopfforge/straighten.hpp"

#include <stdexcept>

namespace hopfforge {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
};

// Parse and straighten; the result is in PBW normal form.
Element parse_element(const std::string& text, const AlgebraId& A);

// Deterministic rendering; parse_element(render_element(x), x.algebra()) == x.
std::string render_element(const Element& x);
std::string render_scalar(const Scalar& c);

}  // namespace hopfforge
