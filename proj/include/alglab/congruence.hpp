#pragma once

// Congruences as canonical block labellings, generation by saturation under
// one-position translations, quotients, kernels, normal subobjects (unit
// classes), and the diagram constructions built from them.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/view.hpp"

namespace alglab {

class Congruence {
  public:
    Congruence() = default;
    // Any labelling; it is re-canonicalised (blocks numbered by least member).
    Congruence(AlgebraPtr alg, std::vector<int> block_ids);

    static Congruence diagonal(AlgebraPtr alg);
    static Congruence full(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    bool same(int a, int b) const { return block_[static_cast<size_t>(a)] == block_[static_cast<size_t>(b)]; }
    int block_of(int e) const { return block_[static_cast<size_t>(e)]; }
    int block_count() const { return n_blocks_; }
    const std::vector<int>& block_ids() const { return block_; }
    std::vector<std::vector<int>> blocks() const;   // members ascending, blocks by id
    std::vector<int> unit_class() const;

    // Compatibility with the operations (one-position translation test).
    bool is_congruence() const;

    bool operator==(const Congruence& o) const {
        return alg_.get() == o.alg_.get() && block_ == o.block_;
    }
    // Refinement: every block of *this lies inside a block of o.
    bool refines(const Congruence& o) const;

  private:
    AlgebraPtr alg_;
    std::vector<int> block_;
    int n_blocks_ = 0;
};

// Least congruence containing the given pairs: union-find, saturated by
// translating each merged pair through one argument position of every
// operation with all constant fillings until fixpoint.
Congruence cg_generate(AlgebraPtr alg, std::span<const std::pair<int, int>> pairs);

// Congruences on tuple views, kept as bare canonical labellings of the
// member indices (no algebra tables exist to attach them to).
struct ViewPartition {
    std::vector<int> block;  // member index -> block id, canonical form
    int n_blocks = 0;

    bool same(int a, int b) const { return block[static_cast<size_t>(a)] == block[static_cast<size_t>(b)]; }
    std::vector<int> class_of(int member) const;
};
// Canonicalises an arbitrary labelling (blocks numbered by least member).
ViewPartition make_view_partition(std::vector<int> raw_ids);
// Same worklist as cg_generate, with translations through the view's
// componentwise operations.
ViewPartition view_cg_generate(const PowerSubalgebra& v, std::span<const std::pair<int, int>> pairs);

struct QuotientResult {
    AlgebraPtr algebra;   // carrier: blocks, unit block first, others by least member
    Homomorphism proj;
};
QuotientResult quotient(AlgebraPtr alg, const Congruence& theta);

Congruence kernel_pair(const Homomorphism& f);

// ---------------------------------------------------------------------------
// Normal subobjects: unit classes of congruences

struct NormalSubobject {
    AlgebraPtr algebra;
    std::vector<int> members;  // sorted, contains the unit

    bool contains(int e) const;
    bool is_whole() const { return static_cast<int>(members.size()) == algebra->size(); }
    bool is_unit_only() const { return members.size() == 1; }
    std::vector<std::string> member_names() const;

    // Validates the ideal condition: members must be exactly the unit class
    // of the congruence its pairs-to-unit generate.
    static NormalSubobject make(AlgebraPtr alg, std::vector<int> members);
};

NormalSubobject kernel(const Homomorphism& f);

// Unit class of cg_generate({(g,1)}); the least normal subobject containing gens.
NormalSubobject normal_closure(AlgebraPtr alg, std::span<const int> gens);

NormalSubobject join_normal(const NormalSubobject& m, const NormalSubobject& n);
NormalSubobject meet_normal(const NormalSubobject& m, const NormalSubobject& n);

// Image of a normal subobject under a surjection.
NormalSubobject direct_image(const Homomorphism& f, const NormalSubobject& m);

// The congruence with unit class m (generated by m x {1}).
Congruence congruence_of_normal(const NormalSubobject& m);

Congruence join_congruence(const Congruence& a, const Congruence& b);
Congruence meet_congruence(const Congruence& a, const Congruence& b);

// All congruences, as joins of principal ones.  `bound` caps the carrier.
std::vector<Congruence> congruence_lattice(AlgebraPtr alg, int bound = 24);

// Unit classes of all congruences, deduplicated, sorted by (size, members).
std::vector<NormalSubobject> normals_enumerate(AlgebraPtr alg, int bound = 24);

// ---------------------------------------------------------------------------
// Derived diagram objects

// Kernel-pair algebra of a surjection, table-backed: elements are the pairs
// (a,b) with f(a)=f(b), ordered lexicographically.
struct PairAlgebra {
    AlgebraPtr algebra;
    std::vector<std::pair<int, int>> elems;
    Homomorphism p0, p1;  // the two projections back to the domain of f
};
PairAlgebra pair_algebra(const Homomorphism& f);

// The nine objects and twelve arrows of the 3x3 diagram on (A, M, N) with
// M, N normal: rows are short exact sequences built from M∧N, M, N, M∨N.
// Construction validates exactness of every row and column.
struct ThreeByThree {
    // grid[r][c]: r=0 top row (meet, N, N/meet), r=1 middle (M, A, A/M),
    // r=2 bottom (M/meet, A/N, A/(M∨N)).
    AlgebraPtr grid[3][3];
    Homomorphism right[3][2];  // row arrows: grid[r][0]->grid[r][1]->grid[r][2]
    Homomorphism down[2][3];   // column arrows: grid[r][c]->grid[r+1][c]
    // Noether isomorphisms, present when A == M∨N:
    std::optional<Homomorphism> noether_n;  // N/(M∧N) -> (M∨N)/M
    std::optional<Homomorphism> noether_m;  // M/(M∧N) -> (M∨N)/N
};
ThreeByThree three_by_three(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n);

}  // namespace alglab
