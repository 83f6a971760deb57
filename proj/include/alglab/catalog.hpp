#pragma once

// Bundled algebras and varieties, constructed and validated once on first
// use.  Lookup is case-insensitive.

#include <string>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/birkhoff.hpp"

namespace alglab {

// z2, z4, z6, z12, klein4, z2cube, s3, d4, q8, l5.  Throws ValidationError
// on an unknown name.
AlgebraPtr catalog_algebra(const std::string& name);

// ab, triv, nil2, gp-in-loops.  Throws ValidationError on an unknown name.
VarietySpec catalog_variety(const std::string& name);

bool is_catalog_algebra(const std::string& name);
bool is_catalog_variety(const std::string& name);

const std::vector<std::string>& catalog_algebra_names();
const std::vector<std::string>& catalog_variety_names();

}  // namespace alglab
