// JSON wire formats. Round-trips are bit-exact on canonical values.
//
//   Scalar   generic:      {"num": [[e, "p/q"], ...], "den": [[e, "p/q"], ...]}
//            root of unity: {"l": n, "zeta": ["p/q", ...]}  (length deg Phi_l)
//   Element  {"algebra": ..., "mode": "generic" | "root_of_unity", "l": n,
//             "terms": [{"F": [t1,t2,t3], "K": [r1,r2], "Kt": [c1,c2]?,
//                        "E": [s1,s2,s3], "coeff": Scalar}, ...]}
//   TensorElement mirrors Element with "left"/"right" monomial slots.
//   MatrixModule {"algebra": ..., "basis": [...], "action": {"E1": sparse, ...}}
//   with sparse matrices {"rows": n, "cols": n, "entries": [[i, j, Scalar], ...]}.
#pragma once

#include "hopfforge/coalgebra.hpp"
#include "hopfforge/matmodule.hpp"

#include <json.hpp>

namespace hopfforge {

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

nlohmann::json tensor_to_json(const TensorElement& t);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json module_to_json(const MatrixModule& M);

nlohmann::json character_to_json(const Character& c);

}  // namespace hopfforge
