#pragma once

// Subvariety specifications, the radical congruence they induce, and the
// reflection (quotient into the subvariety) with its unit map.

#include <string>
#include <vector>

#include "alglab/congruence.hpp"
#include "alglab/kernels.hpp"

namespace alglab {

struct VarietySpec {
    std::string name;
    std::vector<Identity> identities;
    // Optional explicit scheme words for the word-formula commutators; empty
    // means none are bundled for this variety.
    std::vector<Term> word_scheme;
};

// Throws ValidationError when an identity or scheme word does not fit sig.
void validate_variety(const VarietySpec& b, const Signature& sig);
bool variety_applies(const VarietySpec& b, const Signature& sig);

struct Reflection {
    AlgebraPtr source;
    AlgebraPtr reflected;
    Homomorphism unit_map;      // source ->> reflected
    NormalSubobject radical;    // kernel of unit_map
};

// The congruence generated by all identity instance pairs.  Routes:
// satisfied identities give the diagonal outright; a pure group signature
// uses an iterative verbal-subgroup scan over coset representatives; the
// general case enumerates every instance pair (guarded).  All three produce
// the same congruence, so route selection never changes results.
Congruence radical_congruence(AlgebraPtr a, const VarietySpec& b, Exec exec = default_exec());
Reflection radical(AlgebraPtr a, const VarietySpec& b, Exec exec = default_exec());

// Same computation on a tuple view, as a partition of the member indices.
ViewPartition radical_partition(const PowerSubalgebra& v, const VarietySpec& b,
                                Exec exec = default_exec());

// Restriction of f to the radicals, as a map between the radical
// subalgebras.  Throws CrossCheckError if the image escapes the codomain
// radical (functoriality makes that impossible short of a bug).
Homomorphism radical_hom(const Homomorphism& f, const VarietySpec& b, Exec exec = default_exec());

// True iff the radical restriction of the surjection f is itself surjective.
bool birkhoff_square_check(const Homomorphism& f, const VarietySpec& b, Exec exec = default_exec());

}  // namespace alglab
