#pragma once

// The enumeration kernels behind satisfaction checks, radical generation and
// the word formulas.  Each kernel has a serial reference implementation and
// an OpenMP variant producing bit-identical results; Exec selects between
// them and bench_kernels compares their timings.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/congruence.hpp"
#include "alglab/view.hpp"

namespace alglab {

enum class Exec { serial, parallel };

// Process-wide default, parallel when OpenMP is compiled in.
Exec default_exec();
void set_default_exec(Exec e);

// Total environments |base|^vars for each identity summed, clamped; kernels
// throw BoundError above this.
constexpr uint64_t kEnvGuard = 2'000'000'000ull;
uint64_t env_count(uint64_t base, int vars);

struct CompiledIdentity {
    CompiledTerm lhs, rhs;
    int vars = 0;
};
std::vector<CompiledIdentity> compile_identities(std::span<const Identity> ids, const Signature& sig);

// Least (identity, environment) with lhs != rhs, scanning environments in
// lexicographic order per identity.
std::optional<Violation> violation_scan(const FiniteAlgebra& a, std::span<const Identity> ids, Exec exec);

// All value pairs (lhs(env), rhs(env)) over full environments, sorted and
// deduplicated.  These generate the radical congruence.
std::vector<std::pair<int, int>> instance_pairs(const FiniteAlgebra& a, std::span<const Identity> ids,
                                                Exec exec);
// Same on a tuple view; terms are evaluated componentwise on the ground and
// the resulting tuples resolved to member indices.
std::vector<std::pair<int, int>> instance_pairs(const PowerSubalgebra& v, std::span<const Identity> ids,
                                                Exec exec);

// Group-word defect scan used by the iterative radical: evaluates every
// identity over environments drawn from `reps` and collects the member
// indices of the defects lhs(env)*inv(rhs(env)) that fall outside the set
// flagged by `in_v`.  Sorted and deduplicated.
std::vector<int> defect_scan(const PowerSubalgebra& g, const GroupOps& ops,
                             std::span<const CompiledIdentity> ids, std::span<const int> reps,
                             const std::vector<char>& in_v, Exec exec);

// Packed quadruples (x,y,z,t) over the carrier of `base` whose columns
// (x,z), (y,t) lie in rm and rows (x,y), (z,t) lie in rn; ascending.
std::vector<uint64_t> quad_filter(const FiniteAlgebra& base, const Congruence& rm, const Congruence& rn,
                                  Exec exec);

// Word-formula value sets.  All patterns evaluate one scheme word w of arity
// r over environments from the given member lists and collect the sorted set
// of resulting elements.
enum class WordPattern {
    triple_group,  // w(x*y) * inv(w(y)) * inv(w(x)),   x in xs^r, y in ys^r
    triple_loop,   // rdiv(rdiv(w(x*y), w(y)), w(x))
    pair_group,    // w(x*y) * inv(w(y)),               Froehlich's pattern
    pair_loop,     // rdiv(w(x*y), w(y))
    plain,         // w(x),                             ys ignored
};
struct WordOps {
    int mul = -1;
    int inv = -1;   // group patterns
    int rdiv = -1;  // loop patterns
};
std::vector<int> word_values(const FiniteAlgebra& a, const CompiledTerm& w, WordPattern pattern,
                             const WordOps& ops, std::span<const int> xs, std::span<const int> ys,
                             Exec exec);

}  // namespace alglab
