// Independent normal-form oracle used to validate the straightening engine.
//
// It knows only the defining relations between the basic generators (the
// group-like conjugations, the E/F commutators, and the degree-3 Serre
// relations) plus the definitions of E12 and F12; ordered products are
// recovered by exact linear algebra over the span of raw words, never by the
// engine's derived swap rules.
#pragma once

#include "hopfforge/algebra.hpp"

namespace hopfforge {

// Same contract as normal_form, limited to words of at most
// kOracleMaxLetters letters (after E12/F12 elimination doubles some of them).
inline constexpr int kOracleMaxLetters = 12;

Element oracle_normal_form(const FreeWord& w, const AlgebraId& A);

}  // namespace hopfforge
