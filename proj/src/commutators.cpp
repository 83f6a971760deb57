#include "alglab/commutators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace alglab {

namespace {

// Local index of an ambient element in a sorted carrier list, -1 if absent.
int local_of(const std::vector<int>& to_ambient, int e) {
    auto it = std::lower_bound(to_ambient.begin(), to_ambient.end(), e);
    if (it == to_ambient.end() || *it != e) return -1;
    return static_cast<int>(it - to_ambient.begin());
}

std::vector<int> locals_of(const std::vector<int>& to_ambient, const std::vector<int>& members,
                           const char* who) {
    std::vector<int> out;
    out.reserve(members.size());
    for (int e : members) {
        int l = local_of(to_ambient, e);
        if (l < 0) throw CrossCheckError(std::string(who) + ": subobject member escapes its own join");
        out.push_back(l);
    }
    return out;
}

std::vector<int> to_ambient_members(const SubalgebraResult& join, const std::vector<int>& locals) {
    std::vector<int> out;
    out.reserve(locals.size());
    for (int t : locals) out.push_back(join.to_ambient[static_cast<size_t>(t)]);
    return out;
}

// Word-formula operation selection: designated group structure wins, a loop
// signature falls back to right division.
struct WordPlan {
    WordOps ops;
    WordPattern triple;
    WordPattern pair;
};

WordPlan word_plan(const FiniteAlgebra& a, const char* who) {
    WordPlan p;
    if (a.group_ops()) {
        p.ops.mul = a.group_ops()->mul;
        p.ops.inv = a.group_ops()->inv;
        p.triple = WordPattern::triple_group;
        p.pair = WordPattern::pair_group;
        return p;
    }
    const Signature& sig = a.signature();
    int mul = sig.find("mul"), rdiv = sig.find("rdiv");
    if (mul < 0 || sig.op(mul).arity != 2 || rdiv < 0 || sig.op(rdiv).arity != 2)
        throw ValidationError(std::string(who) +
                              ": needs designated group structure or binary mul/rdiv on '" + a.name() + "'");
    p.ops.mul = mul;
    p.ops.rdiv = rdiv;
    p.triple = WordPattern::triple_loop;
    p.pair = WordPattern::pair_loop;
    return p;
}

}  // namespace

DoubleRelation double_relation(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                               Exec exec) {
    NormalSubobject jn = join_normal(m, n);
    SubalgebraResult join = subalgebra(a, jn.members);
    NormalSubobject mj = NormalSubobject::make(join.algebra, locals_of(join.to_ambient, m.members, "double_relation"));
    NormalSubobject nj = NormalSubobject::make(join.algebra, locals_of(join.to_ambient, n.members, "double_relation"));
    Congruence rm = congruence_of_normal(mj);
    Congruence rn = congruence_of_normal(nj);
    std::vector<uint64_t> quads = quad_filter(*join.algebra, rm, rn, exec);
    PowerSubalgebra view(join.algebra, 4, std::move(quads));
    return DoubleRelation{std::move(a),         std::move(join), std::move(mj.members),
                          std::move(nj.members), std::move(rm),   std::move(rn),
                          std::move(view)};
}

CommutatorValue commutator_categorical(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                                       const VarietySpec& b, Exec exec) {
    validate_variety(b, a->signature());
    DoubleRelation d = double_relation(a, m, n, exec);
    ViewPartition rad = radical_partition(d.quads, b, exec);
    const int u = d.join.algebra->unit();
    int comps[4] = {u, u, u, u};
    int uq = d.quads.find(PowerSubalgebra::pack(comps));
    if (uq < 0) throw CrossCheckError("commutator: unit quadruple missing from the double relation");
    std::vector<int> members;
    for (int t = 0; t < d.join.algebra->size(); ++t) {
        comps[3] = t;
        int q = d.quads.find(PowerSubalgebra::pack(comps));
        if (q >= 0 && rad.same(q, uq)) members.push_back(t);
    }
    // Everything declared commutator must lie in both subobjects; anything
    // else means the machinery above broke.
    for (int t : members)
        if (!std::binary_search(d.m_local.begin(), d.m_local.end(), t) ||
            !std::binary_search(d.n_local.begin(), d.n_local.end(), t))
            throw CrossCheckError("commutator: value escapes the meet of the arguments");
    NormalSubobject in_join;
    try {
        in_join = NormalSubobject::make(d.join.algebra, std::move(members));
    } catch (const ValidationError& e) {
        throw CrossCheckError(std::string("commutator: value is not normal in the join: ") + e.what());
    }
    std::vector<int> amb = to_ambient_members(d.join, in_join.members);
    return CommutatorValue{std::move(a), std::move(d.join), std::move(in_join), std::move(amb)};
}

CommutatorValue commutator_words(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                                 std::span<const Term> scheme, Exec exec) {
    if (scheme.empty()) throw ValidationError("commutator_words: the scheme is empty");
    const Signature& sig = a->signature();
    WordPlan plan = word_plan(*a, "commutator_words");
    NormalSubobject jn = join_normal(m, n);
    SubalgebraResult join = subalgebra(a, jn.members);
    std::vector<int> m_local = locals_of(join.to_ambient, m.members, "commutator_words");
    std::vector<int> n_local = locals_of(join.to_ambient, n.members, "commutator_words");
    std::vector<int> meet_local;
    std::set_intersection(m_local.begin(), m_local.end(), n_local.begin(), n_local.end(),
                          std::back_inserter(meet_local));
    // The generating set is a pointwise product U * W with unit in both
    // factors (take the all-unit environment), so its normal closure equals
    // the closure of U and W collected separately.
    std::vector<char> flag(static_cast<size_t>(join.algebra->size()), 0);
    for (const Term& w : scheme) {
        validate_term(w, sig);
        CompiledTerm cw = CompiledTerm::compile(w, sig);
        for (int v : word_values(*join.algebra, cw, plan.triple, plan.ops, m_local, n_local, exec))
            flag[static_cast<size_t>(v)] = 1;
        for (int v : word_values(*join.algebra, cw, WordPattern::plain, plan.ops, meet_local, {}, exec))
            flag[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> gens;
    for (int e = 0; e < join.algebra->size(); ++e)
        if (flag[static_cast<size_t>(e)]) gens.push_back(e);
    NormalSubobject in_join = normal_closure(join.algebra, gens);
    std::vector<int> amb = to_ambient_members(join, in_join.members);
    return CommutatorValue{std::move(a), std::move(join), std::move(in_join), std::move(amb)};
}

FroehlichValue froehlich_commutator(const Homomorphism& f, const VarietySpec& b, Exec exec) {
    if (!f.domain || !f.codomain) throw ValidationError("froehlich_commutator: incomplete homomorphism");
    if (!f.is_surjective()) throw ValidationError("froehlich_commutator: the map is not surjective");
    AlgebraPtr a = f.domain;
    validate_variety(b, a->signature());
    PowerSubalgebra rel = relation_view(a, kernel_pair(f));
    ViewPartition rad = radical_partition(rel, b, exec);
    const int u = a->unit();
    int up = rel.find(PowerSubalgebra::pack2(u, u));
    if (up < 0) throw CrossCheckError("froehlich_commutator: unit pair missing from the kernel pair");
    std::vector<int> members;
    for (int y = 0; y < a->size(); ++y) {
        int idx = rel.find(PowerSubalgebra::pack2(u, y));
        if (idx >= 0 && rad.same(idx, up)) members.push_back(y);
    }
    FroehlichValue out{NormalSubobject::make(a, std::move(members)), std::nullopt};
    if (!b.word_scheme.empty() && a->group_ops()) {
        WordPlan plan = word_plan(*a, "froehlich_commutator");
        std::vector<int> ker = kernel(f).members;
        std::vector<int> all(static_cast<size_t>(a->size()));
        std::iota(all.begin(), all.end(), 0);
        std::vector<char> flag(static_cast<size_t>(a->size()), 0);
        for (const Term& w : b.word_scheme) {
            CompiledTerm cw = CompiledTerm::compile(w, a->signature());
            for (int v : word_values(*a, cw, plan.pair, plan.ops, ker, all, exec))
                flag[static_cast<size_t>(v)] = 1;
        }
        std::vector<int> gens;
        for (int e = 0; e < a->size(); ++e)
            if (flag[static_cast<size_t>(e)]) gens.push_back(e);
        out.word_value = normal_closure(a, gens).members;
    }
    return out;
}

HigginsValue higgins_commutator(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                                int depth, Exec exec) {
    if (depth < 1) throw ValidationError("higgins_commutator: depth must be at least 1");
    if (!a->group_ops())
        throw ValidationError("higgins_commutator: '" + a->name() + "' has no designated group structure");
    const GroupOps g = *a->group_ops();
    const Signature& sig = a->signature();
    NormalSubobject jn = join_normal(m, n);
    SubalgebraResult join = subalgebra(a, jn.members);
    const FiniteAlgebra& J = *join.algebra;
    std::vector<int> m_local = locals_of(join.to_ambient, m.members, "higgins_commutator");
    std::vector<int> n_local = locals_of(join.to_ambient, n.members, "higgins_commutator");

    // Terms over {mul, inv, unit} in `depth` variables, deduplicated by their
    // value table over the join; the table domain is every environment.
    uint64_t envs = env_count(static_cast<uint64_t>(J.size()), depth);
    if (envs > (1u << 20))
        throw BoundError("higgins_commutator: " + std::to_string(envs) + " environments per term table");
    const size_t n_envs = static_cast<size_t>(envs);
    constexpr size_t kTermCap = 20000;

    struct Rep {
        Term term;
        std::vector<int> table;
        int height;
    };
    std::vector<Rep> reps;
    std::map<std::vector<int>, int> seen;
    auto try_add = [&](Term t, std::vector<int> table, int height) {
        auto it = seen.find(table);
        if (it != seen.end()) return;
        if (reps.size() >= kTermCap)
            throw BoundError("higgins_commutator: more than " + std::to_string(kTermCap) + " distinct terms");
        if ((reps.size() + 1) * n_envs > (1u << 24))
            throw BoundError("higgins_commutator: term tables exceed the memory bound");
        seen.emplace(table, static_cast<int>(reps.size()));
        reps.push_back(Rep{std::move(t), std::move(table), height});
    };

    {  // height 0: the unit and the variables
        std::vector<int> unit_table(n_envs, J.unit());
        try_add(Term::apply(sig.unit_symbol()), std::move(unit_table), 0);
        for (int v = 0; v < depth; ++v) {
            std::vector<int> t(n_envs);
            // Environment digits: variable 0 varies slowest.
            size_t stride = 1;
            for (int i = depth - 1; i > v; --i) stride *= static_cast<size_t>(J.size());
            for (size_t e = 0; e < n_envs; ++e)
                t[e] = static_cast<int>(e / stride % static_cast<size_t>(J.size()));
            try_add(Term::variable(v), std::move(t), 0);
        }
    }
    for (int h = 1; h <= depth; ++h) {
        size_t snap = reps.size();
        for (size_t i = 0; i < snap; ++i) {
            if (reps[i].height != h - 1) continue;
            std::vector<int> t(n_envs);
            for (size_t e = 0; e < n_envs; ++e) t[e] = J.apply1(g.inv, reps[i].table[e]);
            try_add(Term::apply(sig.op(g.inv).symbol, {reps[i].term}), std::move(t), h);
        }
        for (size_t i = 0; i < snap; ++i)
            for (size_t j = 0; j < snap; ++j) {
                if (std::max(reps[i].height, reps[j].height) != h - 1) continue;
                std::vector<int> t(n_envs);
                for (size_t e = 0; e < n_envs; ++e) t[e] = J.apply2(g.mul, reps[i].table[e], reps[j].table[e]);
                try_add(Term::apply(sig.op(g.mul).symbol, {reps[i].term, reps[j].term}), std::move(t), h);
            }
    }

    // Collect the triple-pattern values per height stratum; generators land
    // in the meet by construction, which the assert below pins down.
    std::vector<char> flag_all(static_cast<size_t>(J.size()), 0);
    std::vector<char> flag_prev(static_cast<size_t>(J.size()), 0);
    WordOps ops;
    ops.mul = g.mul;
    ops.inv = g.inv;
    for (const Rep& r : reps) {
        CompiledTerm cw = CompiledTerm::compile(r.term, sig);
        for (int v : word_values(J, cw, WordPattern::triple_group, ops, m_local, n_local, exec)) {
            if (!std::binary_search(m_local.begin(), m_local.end(), v) ||
                !std::binary_search(n_local.begin(), n_local.end(), v))
                throw CrossCheckError("higgins_commutator: generator escapes the meet");
            flag_all[static_cast<size_t>(v)] = 1;
            if (r.height < depth) flag_prev[static_cast<size_t>(v)] = 1;
        }
    }
    std::vector<int> gens_all, gens_prev;
    for (int e = 0; e < J.size(); ++e) {
        if (flag_all[static_cast<size_t>(e)]) gens_all.push_back(e);
        if (flag_prev[static_cast<size_t>(e)]) gens_prev.push_back(e);
    }
    NormalSubobject in_join = normal_closure(join.algebra, gens_all);
    bool converged = depth == 1 ? in_join.is_unit_only()
                                : normal_closure(join.algebra, gens_prev).members == in_join.members;
    std::vector<int> amb = to_ambient_members(join, in_join.members);
    HigginsValue out;
    out.value = CommutatorValue{std::move(a), std::move(join), std::move(in_join), std::move(amb)};
    out.converged = converged;
    out.distinct_terms = static_cast<int>(reps.size());
    return out;
}

bool huq_commute_check(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n) {
    SubalgebraResult ms = subalgebra(a, m.members);
    SubalgebraResult ns = subalgebra(a, n.members);
    ProductResult p = product(ms.algebra, ns.algebra);
    ProductResult p2 = product(p.algebra, a);
    const int na = a->size();
    const int nn = ns.algebra->size();
    std::vector<int> gens;
    gens.reserve(static_cast<size_t>(ms.algebra->size() + nn));
    for (int i = 0; i < ms.algebra->size(); ++i)
        gens.push_back((i * nn + ns.algebra->unit()) * na + ms.to_ambient[static_cast<size_t>(i)]);
    for (int j = 0; j < nn; ++j)
        gens.push_back((ms.algebra->unit() * nn + j) * na + ns.to_ambient[static_cast<size_t>(j)]);
    std::vector<int> graph = subalgebra_generate(*p2.algebra, gens);
    // The generated relation is the candidate morphism M x N -> A; it exists
    // iff the relation is a totally defined function.
    const int np = p.algebra->size();
    std::vector<int> val(static_cast<size_t>(np), -1);
    int covered = 0;
    for (int e : graph) {
        int pi = e / na, x = e % na;
        if (val[static_cast<size_t>(pi)] < 0) {
            val[static_cast<size_t>(pi)] = x;
            ++covered;
        } else if (val[static_cast<size_t>(pi)] != x) {
            return false;
        }
    }
    return covered == np;
}

CommutatorValue huq_commutator(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n,
                               int bound, Exec exec) {
    CommutatorValue v = commutator_categorical(a, m, n, ab_variety_for(a->signature()), exec);
    NormalSubobject mj = NormalSubobject::make(v.join.algebra, locals_of(v.join.to_ambient, m.members, "huq_commutator"));
    NormalSubobject nj = NormalSubobject::make(v.join.algebra, locals_of(v.join.to_ambient, n.members, "huq_commutator"));
    // Independent route: the least normal subobject of the join whose
    // quotient makes the images admit the pairing morphism.
    const std::vector<int>* least = nullptr;
    std::vector<NormalSubobject> candidates = normals_enumerate(v.join.algebra, bound);
    for (const NormalSubobject& j : candidates) {
        QuotientResult q = quotient(v.join.algebra, congruence_of_normal(j));
        NormalSubobject qm = direct_image(q.proj, mj);
        NormalSubobject qn = direct_image(q.proj, nj);
        if (huq_commute_check(q.algebra, qm, qn)) {
            least = &j.members;
            break;
        }
    }
    if (!least || *least != v.in_join.members)
        throw CrossCheckError("huq_commutator: least commuting quotient disagrees with the abelian-subvariety value");
    return v;
}

namespace {

int quad_comp(uint64_t q, int c) { return static_cast<int>((q >> (16 * (3 - c))) & 0xffffu); }

uint64_t quad_pack(int a, int b, int c, int d) {
    return (static_cast<uint64_t>(a) << 48) | (static_cast<uint64_t>(b) << 32) |
           (static_cast<uint64_t>(c) << 16) | static_cast<uint64_t>(d);
}

uint64_t quad_mul2(const FiniteAlgebra& g, int op, uint64_t x, uint64_t y) {
    uint64_t out = 0;
    for (int c = 0; c < 4; ++c)
        out = (out << 16) | static_cast<uint64_t>(g.apply2(op, quad_comp(x, c), quad_comp(y, c)));
    return out;
}

uint64_t quad_apply(const FiniteAlgebra& g, int op, const std::vector<uint64_t>& args,
                    std::vector<int>& scratch) {
    uint64_t out = 0;
    scratch.resize(args.size());
    for (int c = 0; c < 4; ++c) {
        for (size_t i = 0; i < args.size(); ++i) scratch[i] = quad_comp(args[i], c);
        out = (out << 16) | static_cast<uint64_t>(g.apply(op, scratch));
    }
    return out;
}

// Closure of the generator quadruples under the componentwise operations.
// With designated group structure the generators are symmetric (congruences
// respect inversion), so right multiplication alone saturates the subgroup.
std::vector<uint64_t> matrix_algebra(const FiniteAlgebra& a, const std::vector<uint64_t>& gens) {
    std::vector<uint64_t> mem;
    std::unordered_set<uint64_t> in;
    auto add = [&](uint64_t q) {
        if (in.insert(q).second) mem.push_back(q);
    };
    for (uint64_t q : gens) add(q);
    if (a.group_ops()) {
        int mul = a.group_ops()->mul;
        for (size_t next = 0; next < mem.size(); ++next)
            for (uint64_t q : gens) add(quad_mul2(a, mul, mem[next], q));
        return mem;
    }
    const Signature& sig = a.signature();
    std::vector<uint64_t> args;
    std::vector<int> scratch;
    for (size_t next = 0; next < mem.size(); ++next) {
        uint64_t x = mem[next];
        for (int op = 0; op < sig.op_count(); ++op) {
            int k = sig.op(op).arity;
            if (k == 0) continue;
            if (k == 1) {
                args.assign(1, x);
                add(quad_apply(a, op, args, scratch));
                continue;
            }
            size_t snap = mem.size();
            if (k == 2) {
                for (size_t i = 0; i < snap; ++i) {
                    args = {x, mem[i]};
                    add(quad_apply(a, op, args, scratch));
                    args = {mem[i], x};
                    add(quad_apply(a, op, args, scratch));
                }
                continue;
            }
            size_t count = 1;
            for (int i = 0; i < k; ++i) count *= snap;
            args.assign(static_cast<size_t>(k), 0);
            for (size_t flat = 0; flat < count; ++flat) {
                size_t rest = flat;
                bool uses_x = false;
                for (int i = k - 1; i >= 0; --i) {
                    args[static_cast<size_t>(i)] = mem[rest % snap];
                    if (args[static_cast<size_t>(i)] == x) uses_x = true;
                    rest /= snap;
                }
                if (uses_x) add(quad_apply(a, op, args, scratch));
            }
        }
    }
    return mem;
}

}  // namespace

Congruence smith_commutator(AlgebraPtr a, const Congruence& r, const Congruence& s) {
    if (r.algebra().get() != a.get() || s.algebra().get() != a.get())
        throw ValidationError("smith_commutator: the congruences live on a different algebra");
    if (a->size() >= (1 << 16)) throw BoundError("smith_commutator: carrier too large to pack");
    std::vector<uint64_t> gens;
    for (const std::vector<int>& blk : r.blocks())
        for (int x : blk)
            for (int y : blk) gens.push_back(quad_pack(x, x, y, y));
    for (const std::vector<int>& blk : s.blocks())
        for (int u : blk)
            for (int v : blk) gens.push_back(quad_pack(u, v, u, v));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<uint64_t> mat = matrix_algebra(*a, gens);
    // Least congruence closed under the row implication: a bottom row inside
    // delta forces the top row in.  Monotone, so iterate to the fixpoint.
    Congruence delta = Congruence::diagonal(a);
    for (;;) {
        std::vector<std::pair<int, int>> tops;
        for (uint64_t q : mat)
            if (delta.same(quad_comp(q, 2), quad_comp(q, 3)))
                tops.emplace_back(quad_comp(q, 0), quad_comp(q, 1));
        std::sort(tops.begin(), tops.end());
        tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
        Congruence next = cg_generate(a, tops);
        if (next == delta) break;
        delta = std::move(next);
    }
    return delta;
}

bool centralise_check(const Congruence& r, const Congruence& s) {
    AlgebraPtr a = r.algebra();
    if (!a) throw ValidationError("centralise_check: empty congruence");
    return smith_commutator(a, r, s) == Congruence::diagonal(a);
}

VarietySpec ab_variety_for(const Signature& sig) {
    int mul = sig.find("mul");
    if (mul < 0 || sig.op(mul).arity != 2)
        throw ValidationError("ab_variety_for: the signature has no binary 'mul'");
    Term x0 = Term::variable(0), x1 = Term::variable(1), x2 = Term::variable(2);
    VarietySpec b;
    b.name = "ab";
    b.identities.push_back(Identity{Term::apply("mul", {x0, x1}), Term::apply("mul", {x1, x0})});
    int inv = sig.find("inv");
    if (inv >= 0 && sig.op(inv).arity == 1) {
        b.word_scheme.push_back(Term::apply(
            "mul", {Term::apply("mul", {Term::apply("mul", {x0, x1}), Term::apply("inv", {x0})}),
                    Term::apply("inv", {x1})}));
    } else {
        // Without designated inverses commutativity alone does not cut the
        // abelian-group objects out; associativity finishes the job.
        b.identities.push_back(Identity{Term::apply("mul", {Term::apply("mul", {x0, x1}), x2}),
                                        Term::apply("mul", {x0, Term::apply("mul", {x1, x2})})});
    }
    return b;
}

}  // namespace alglab
