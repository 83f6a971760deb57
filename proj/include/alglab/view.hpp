#pragma once

// Subalgebras of finite powers of a small table algebra, kept as packed tuple
// lists instead of materialised operation tables.  Relation algebras (pairs)
// and the quadruple algebras of double relations can reach ~3*10^5 elements,
// where an explicit binary table would not fit; operations act componentwise
// on the ground algebra, so a tuple list plus an index is all that is needed.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "alglab/algebra.hpp"

namespace alglab {

class PowerSubalgebra {
  public:
    static constexpr int kMaxWidth = 4;
    static constexpr int kShift = 16;  // component bits; ground size < 65536

    // `elems` are packed tuples (component 0 in the high bits, see pack);
    // they must be pairwise distinct, closed under the componentwise
    // operations, include the diagonal unit tuple, and arrive sorted.
    PowerSubalgebra(AlgebraPtr ground, int width, std::vector<uint64_t> elems);

    static uint64_t pack(std::span<const int> comps);
    // Builds the packed value from `width` leading components.
    static uint64_t pack2(int a, int b) { return (static_cast<uint64_t>(a) << kShift) | static_cast<uint64_t>(b); }

    int size() const { return static_cast<int>(elems_.size()); }
    int width() const { return width_; }
    int unit() const { return unit_; }
    const FiniteAlgebra& ground() const { return *ground_; }
    AlgebraPtr ground_ptr() const { return ground_; }
    const Signature& signature() const { return ground_->signature(); }
    uint64_t packed(int e) const { return elems_[static_cast<size_t>(e)]; }
    int component(int e, int c) const {
        return static_cast<int>((elems_[static_cast<size_t>(e)] >> (kShift * (width_ - 1 - c))) & 0xffffu);
    }
    // Index of a packed tuple, or -1.
    int find(uint64_t packed) const;

    // Componentwise application; the result must be a member (the element
    // list is closed), otherwise this throws.
    int apply(int op, std::span<const int> args) const;

    const std::vector<uint64_t>& elements() const { return elems_; }

  private:
    AlgebraPtr ground_;
    int width_;
    std::vector<uint64_t> elems_;
    std::unordered_map<uint64_t, int> index_;
    int unit_ = -1;
};

// Kernel-pair algebra of a congruence as a width-2 view: all pairs (a,b)
// with a ~ b, ordered lexicographically.
class Congruence;  // congruence.hpp
PowerSubalgebra relation_view(AlgebraPtr ground, const Congruence& theta);

}  // namespace alglab
