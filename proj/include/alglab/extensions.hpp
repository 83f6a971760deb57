#pragma once

// Extensions (surjections with their kernels), double extensions (regular
// pushout squares), and the trivial/central classification relative to a
// subvariety, including the three-fold extension criterion.

#include <utility>
#include <vector>

#include "alglab/birkhoff.hpp"
#include "alglab/commutators.hpp"
#include "alglab/congruence.hpp"

namespace alglab {

struct Extension {
    Homomorphism map;        // surjective
    NormalSubobject kernel;  // of map, cached
};
// Validates the map and its surjectivity.
Extension make_extension(Homomorphism f);

// Commutative square of surjections
//
//     X --c--> C
//     |d       |g        f∘d = g∘c
//     v        v
//     D --f--> Z
//
struct DoubleExtension {
    Homomorphism d, c, g, f;
};

// Pullback of f: A -> Z with g: B -> Z, realised as the subalgebra of pairs
// (a, b) with f(a) = g(b) in lexicographic order.
struct FibreProduct {
    AlgebraPtr algebra;
    std::vector<std::pair<int, int>> elems;
    Homomorphism proj0, proj1;
};
FibreProduct fibre_product(const Homomorphism& f, const Homomorphism& g);

// True iff the naturality square of the reflection unit is a pullback:
// the canonical map A -> B' x_{IB'} IA is bijective (injectivity plus
// fibre-size counting).
bool trivial_check(const Extension& e, const VarietySpec& b, Exec exec = default_exec());

// Central = normal here: the kernel commutator must vanish, cross-checked
// against triviality of the kernel-pair first projection.
bool central_check(const Extension& e, const VarietySpec& b, Exec exec = default_exec());

// Quotient by the kernel commutator with the induced map; the result is the
// universal central extension under e.
Extension centralisation(const Extension& e, const VarietySpec& b, Exec exec = default_exec());

// Double extension test: throws ValidationError when the four maps do not
// even compose into a square; otherwise true iff the square commutes, all
// four maps are surjective and the comparison X -> D x_Z C is surjective.
bool double_extension_check(const DoubleExtension& sq);

// Kernel-commutator comparison: the first kernel-pair projection restricts
// to a bijection from the commutator of K[r] in R[c] onto the commutator of
// K[d] in X.  For the abelian subvariety the equivalent Smith-commutator
// criterion is computed as well and any disagreement is fatal.
bool double_central_check(const DoubleExtension& sq, const VarietySpec& b, Exec exec = default_exec());

// The quotient square of M, N on their join: X = M∨N, C = X/N, D = X/M,
// Z = 0.  The canonical source of double (central) extensions.
DoubleExtension mn_square(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n);

// The first/second projection square of the kernel pair of g, a double
// extension with the same right edge as any square over g.
DoubleExtension kernel_pair_square(const Homomorphism& g);

// Degreewise pullback of sq along another double extension with the same
// right edge (identical g): X'' = X x_C X', D'' = D x_Z D'.  The result is
// the projection square onto along's left edge, so centrality of sq carries
// over to it.
DoubleExtension pullback_double(const DoubleExtension& sq, const DoubleExtension& along);

// M and N commute relative to b: the categorical commutator vanishes.
// Cross-checked against the direct pullback test on the reflected
// kernel-pair projections (injectivity plus block counting).
bool commute_check(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                   const VarietySpec& b, Exec exec = default_exec());

// q_J(M∧N) = q_J(M) ∧ q_J(N) in A/J.
bool threefold_criterion(AlgebraPtr a, const NormalSubobject& j, const NormalSubobject& m,
                         const NormalSubobject& n);

// True iff b presents the abelian subvariety of the signature (same identity
// set as ab_variety_for, up to order); gates the Smith and Huq routes.
bool is_abelian_spec(const VarietySpec& b, const Signature& sig);

}  // namespace alglab
