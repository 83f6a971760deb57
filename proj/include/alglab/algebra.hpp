#pragma once

// Finite pointed algebras: operation tables over a dense carrier 0..n-1 with
// one distinguished constant (the unit).  Terms, identities and homomorphisms
// over such algebras, plus the elementary constructions (products,
// subalgebras) everything else builds on.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alglab/error.hpp"

namespace alglab {

struct OpDecl {
    std::string symbol;
    int arity = 0;
};

// Operation symbols with arities.  Exactly one arity-0 symbol is allowed and
// it is the unit constant; this keeps every algebra pointed.
class Signature {
  public:
    Signature() = default;
    Signature(std::vector<OpDecl> ops, std::string unit_symbol);

    int op_count() const { return static_cast<int>(ops_.size()); }
    const OpDecl& op(int i) const { return ops_[static_cast<size_t>(i)]; }
    int unit_op() const { return unit_op_; }
    const std::string& unit_symbol() const { return ops_[static_cast<size_t>(unit_op_)].symbol; }
    // Index of a symbol, or -1.
    int find(const std::string& symbol) const;
    int max_arity() const;

    bool operator==(const Signature& o) const;

  private:
    std::vector<OpDecl> ops_;
    int unit_op_ = -1;
};

// Designated group structure: indices of a binary "mul" and unary "inv" that
// together with the unit satisfy the group laws on the carrier.
struct GroupOps {
    int mul = -1;
    int inv = -1;
};

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

class FiniteAlgebra {
  public:
    // Tables are row-major, one flat vector of size n^arity per operation.
    // Throws ValidationError on inconsistent input.  When `group_hint` is
    // given it is trusted (used by constructions that preserve group
    // structure); otherwise group laws are checked whenever n is small.
    FiniteAlgebra(std::string name, Signature sig, std::vector<std::string> element_names,
                  int unit, std::vector<std::vector<int>> tables,
                  std::optional<GroupOps> group_hint = std::nullopt);

    int size() const { return n_; }
    int unit() const { return unit_; }
    const Signature& signature() const { return sig_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& element_names() const { return names_; }
    const std::string& element_name(int e) const { return names_[static_cast<size_t>(e)]; }
    // Throws ValidationError when the name is unknown.
    int element_by_name(const std::string& name) const;

    int apply(int op, std::span<const int> args) const;
    int apply2(int op, int a, int b) const {  // binary fast path
        return tables_[static_cast<size_t>(op)][static_cast<size_t>(a) * n_ + b];
    }
    int apply1(int op, int a) const { return tables_[static_cast<size_t>(op)][static_cast<size_t>(a)]; }
    const std::vector<int>& table(int op) const { return tables_[static_cast<size_t>(op)]; }

    // Present iff the signature has mul/inv and the group laws hold.
    const std::optional<GroupOps>& group_ops() const { return group_; }

  private:
    std::string name_;
    Signature sig_;
    int n_ = 0;
    std::vector<std::string> names_;
    int unit_ = 0;
    std::vector<std::vector<int>> tables_;
    std::optional<GroupOps> group_;
};

AlgebraPtr make_algebra(std::string name, Signature sig, std::vector<std::string> element_names,
                        int unit, std::vector<std::vector<int>> tables,
                        std::optional<GroupOps> group_hint = std::nullopt);

// ---------------------------------------------------------------------------
// Terms

struct Term {
    int var = -1;               // >= 0: variable index, rest unused
    std::string symbol;         // operation symbol otherwise
    std::vector<Term> args;

    static Term variable(int index);
    static Term apply(std::string symbol, std::vector<Term> args = {});
    bool is_var() const { return var >= 0; }
    // 1 + largest variable index occurring, 0 for closed terms.
    int var_count() const;
    int height() const;  // leaves have height 0
    bool operator==(const Term& o) const;
};

struct Identity {
    Term lhs, rhs;
    int var_count() const { return std::max(lhs.var_count(), rhs.var_count()); }
};

// Grammar:  term := ident "(" term ("," term)* ")" | ident
// where "1" is the unit constant, x<digits> a variable, and any other ident
// must be an operation symbol of the signature.  Whitespace is insignificant.
// Errors carry 1-based character positions.
Term parse_term(const std::string& src, const Signature& sig);
// Structure-only variant for signature-free documents (variety files):
// symbols and arities are taken as written and checked only when the term
// meets a concrete signature.
Term parse_term(const std::string& src);
std::string print_term(const Term& t);

// Throws ValidationError on unknown symbols or arity mismatches.
void validate_term(const Term& t, const Signature& sig);

// Structural evaluation; env[i] is the value of x<i>.  Throws on unbound
// variable indices.
int eval_term(const Term& t, const FiniteAlgebra& a, std::span<const int> env);

// Flat postfix form used by the enumeration kernels.
struct CompiledTerm {
    struct Ins {
        int op;   // operation index when var < 0
        int var;  // variable index when >= 0
    };
    std::vector<Ins> code;
    int var_count = 0;
    int stack_need = 0;

    static CompiledTerm compile(const Term& t, const Signature& sig);

    int eval(const FiniteAlgebra& a, std::span<const int> env) const;
};

// ---------------------------------------------------------------------------
// Homomorphisms

struct Homomorphism {
    AlgebraPtr domain;
    AlgebraPtr codomain;
    std::vector<int> map;  // element-wise

    int operator()(int e) const { return map[static_cast<size_t>(e)]; }
    bool is_surjective() const;
    bool is_injective() const;
};

// Validates that `map` commutes with every operation and preserves the unit;
// reports the first operation and argument tuple where commutation fails.
Homomorphism hom_check(AlgebraPtr domain, AlgebraPtr codomain, std::vector<int> map);

Homomorphism identity_hom(AlgebraPtr a);
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  // g after f

// ---------------------------------------------------------------------------
// Constructions

struct ProductResult {
    AlgebraPtr algebra;   // element (a,b) has index a*|B|+b
    Homomorphism proj0, proj1;
};
// Requires equal signatures.  Carrier ordered lexicographically, so the unit
// pair lands at index 0 when both factors have unit 0.
ProductResult product(AlgebraPtr a, AlgebraPtr b);

// The pairing <f,g> into a product previously built with `product`.
Homomorphism pair_into_product(const ProductResult& p, const Homomorphism& f, const Homomorphism& g);

// Least subuniverse containing gens and the unit; worklist saturation.
std::vector<int> subalgebra_generate(const FiniteAlgebra& a, std::span<const int> gens);

struct SubalgebraResult {
    AlgebraPtr algebra;
    std::vector<int> to_ambient;  // local index -> ambient element
    Homomorphism inclusion;
};
// `members` must be closed under the operations and contain the unit.
SubalgebraResult subalgebra(AlgebraPtr a, std::span<const int> members);

// Exhaustive check of a list of identities.
bool satisfies(const FiniteAlgebra& a, std::span<const Identity> ids);

// Lexicographically least violation, if any: identity index plus environment.
struct Violation {
    int identity;
    std::vector<int> env;
};
std::optional<Violation> find_violation(const FiniteAlgebra& a, std::span<const Identity> ids);

}  // namespace alglab
