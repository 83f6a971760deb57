#pragma once

// The double relation on a pair of normal subobjects and the five commutator
// computations: categorical (radical of the quadruple algebra), word formula,
// Froehlich, Higgins, Huq and Smith.

#include <optional>
#include <span>
#include <vector>

#include "alglab/birkhoff.hpp"
#include "alglab/congruence.hpp"
#include "alglab/kernels.hpp"

namespace alglab {

// Quadruples (x,y,z,t) over the join of M and N whose columns (x,z),(y,t)
// are congruent mod M and whose rows (x,y),(z,t) are congruent mod N.
struct DoubleRelation {
    AlgebraPtr ambient;
    SubalgebraResult join;              // the base: M∨N as a subalgebra
    std::vector<int> m_local, n_local;  // M and N inside the base
    Congruence rm, rn;                  // congruences of M and N on the base
    PowerSubalgebra quads;              // width-4 view over the base
};
DoubleRelation double_relation(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                               Exec exec = default_exec());

// A commutator of M and N lives in their join; `members` is the same set
// written with ambient element ids.
struct CommutatorValue {
    AlgebraPtr ambient;
    SubalgebraResult join;
    NormalSubobject in_join;
    std::vector<int> members;
};

// Unit class of the radical of the quadruple algebra, restricted to the
// quadruples (1,1,1,t).
CommutatorValue commutator_categorical(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                                       const VarietySpec& b, Exec exec = default_exec());

// Normal closure in the join of the scheme-word values
//   w(m*n) * w(n)^-1 * w(m)^-1 * w(p),   m in M^r, n in N^r, p in (M^N)^r,
// products grouped left to right; loop signatures replace the inverses with
// right division.  The generated subobject is accumulated from the triple
// part and the w(p) part separately, which spans the same closure.
CommutatorValue commutator_words(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                                 std::span<const Term> scheme, Exec exec = default_exec());

// Kernel of the reflected first projection of the kernel pair: the set
// { y : (1,y) lies in the unit class of the radical of R[f] }.  When the
// variety ships scheme words and the algebra is a group or loop, the word
// route w(k*a) * w(a)^-1 is reported alongside.
struct FroehlichValue {
    NormalSubobject value;                       // subobject of f's domain
    std::optional<std::vector<int>> word_value;  // word route, when available
};
FroehlichValue froehlich_commutator(const Homomorphism& f, const VarietySpec& b,
                                    Exec exec = default_exec());

// Word formula over every term up to the given depth (height and variable
// count both bounded by it), without the w(p) factor.  `converged` reports
// whether the last depth step added anything; the depth bound is heuristic
// and the categorical value is the authority.
struct HigginsValue {
    CommutatorValue value;
    bool converged = false;
    int distinct_terms = 0;
};
HigginsValue higgins_commutator(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                                int depth, Exec exec = default_exec());

// Existence of the unique morphism M x N -> A restricting to the two
// inclusions: the relation generated by ((m,1),m) and ((1,n),n) must be
// total and single-valued.
bool huq_commute_check(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n);

// The categorical commutator relative to the abelian subvariety, checked
// against the least enumerated normal subobject of the join whose quotient
// makes the images commute.
CommutatorValue huq_commutator(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                               int bound = 24, Exec exec = default_exec());

// Term-condition commutator: matrix algebra M(R,S) generated inside A^4,
// then the least congruence closed under its row implication.
Congruence smith_commutator(AlgebraPtr a, const Congruence& r, const Congruence& s);

// True iff R and S admit a centralising double relation.
bool centralise_check(const Congruence& r, const Congruence& s);

// The abelian subvariety for a signature: commutativity for group
// signatures, commutativity plus associativity otherwise.
VarietySpec ab_variety_for(const Signature& sig);

}  // namespace alglab
