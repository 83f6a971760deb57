#pragma once

// JSON (de)serialisation of algebras and varieties.
//
// Algebra document:
//   {"name": str, "size": int, "elements": [str...], "unit": str,
//    "operations": {"sym": {"arity": int, "table": nested-row-major}}}
// where a table of arity k is a k-deep nested array of element names (a bare
// name for arity 0).  When no arity-0 operation is listed, the unit constant
// "1" is supplied implicitly.
//
// Variety document:
//   {"name": str, "identities": [{"lhs": str, "rhs": str}...],
//    "words": [str...]}   ("words" optional)
// Terms use the prefix grammar of parse_term.  A variety file carries no
// signature; identities are parsed against symbol/arity use and validated
// against a concrete signature only at application time.

#include <string>

#include "alglab/algebra.hpp"
#include "alglab/birkhoff.hpp"

namespace alglab {

// All loaders throw ValidationError with the offending file or key named.
AlgebraPtr load_algebra(const std::string& path);
VarietySpec load_variety(const std::string& path);
void save_algebra(const FiniteAlgebra& a, const std::string& path);
void save_variety(const VarietySpec& b, const std::string& path);

AlgebraPtr algebra_from_json(const std::string& text);
std::string algebra_to_json(const FiniteAlgebra& a);
VarietySpec variety_from_json(const std::string& text);
std::string variety_to_json(const VarietySpec& b);

}  // namespace alglab
