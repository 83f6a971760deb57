#include "alglab/birkhoff.hpp"

#include <algorithm>
#include <numeric>

#include "alglab/error.hpp"

namespace alglab {

void validate_variety(const VarietySpec& b, const Signature& sig) {
    if (b.identities.empty())
        throw ValidationError("variety '" + b.name + "' has no identities");
    for (const Identity& id : b.identities) {
        validate_term(id.lhs, sig);
        validate_term(id.rhs, sig);
    }
    for (const Term& w : b.word_scheme) validate_term(w, sig);
}

bool variety_applies(const VarietySpec& b, const Signature& sig) {
    try {
        validate_variety(b, sig);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

namespace {

// A width-1 view over the whole carrier lets the table and tuple cases share
// the verbal-subgroup machinery.
PowerSubalgebra full_view(AlgebraPtr a) {
    std::vector<uint64_t> elems(static_cast<size_t>(a->size()));
    std::iota(elems.begin(), elems.end(), 0);
    return PowerSubalgebra(std::move(a), 1, std::move(elems));
}

bool pure_group_signature(const FiniteAlgebra& a) {
    return a.group_ops().has_value() && a.signature().op_count() == 3;
}

int view_mul(const PowerSubalgebra& v, int op, int x, int y) {
    const int args[2] = {x, y};
    return v.apply(op, args);
}

int view_inv(const PowerSubalgebra& v, int op, int x) {
    const int args[1] = {x};
    return v.apply(op, args);
}

// Subgroup of a group view kept as membership flags, a member list and the
// generator list it is the closure of.  Growth is by right-multiplication
// orbit: starting from a set containing the unit and closed under nothing
// else, BFS under x -> x*g, x -> x*inv(g) over the whole generator list
// reaches exactly the generated subgroup.  Total lifetime cost is
// |subgroup| * |generators| applications, which keeps the large product
// views tractable.
struct SubgroupState {
    std::vector<char> in;
    std::vector<int> members;  // unsorted, insertion order
    std::vector<int> gens;
};

void orbit_extend(const PowerSubalgebra& v, const GroupOps& ops, SubgroupState& s,
                  std::span<const int> new_gens) {
    if (s.in.empty()) {
        s.in.assign(static_cast<size_t>(v.size()), 0);
        s.in[static_cast<size_t>(v.unit())] = 1;
        s.members.push_back(v.unit());
    }
    std::vector<int> fresh;
    for (int g : new_gens)
        if (!s.in[static_cast<size_t>(g)]) fresh.push_back(g);
    if (fresh.empty()) return;

    std::vector<int> work;
    auto push = [&](int e) {
        if (!s.in[static_cast<size_t>(e)]) {
            s.in[static_cast<size_t>(e)] = 1;
            s.members.push_back(e);
            work.push_back(e);
        }
    };
    // Settled members must still meet the new generators once.
    const size_t settled = s.members.size();
    for (int g : fresh) {
        const int gi = view_inv(v, ops.inv, g);
        for (size_t i = 0; i < settled; ++i) {
            push(view_mul(v, ops.mul, s.members[i], g));
            push(view_mul(v, ops.mul, s.members[i], gi));
        }
    }
    s.gens.insert(s.gens.end(), fresh.begin(), fresh.end());
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        for (int g : s.gens) {
            push(view_mul(v, ops.mul, x, g));
            push(view_mul(v, ops.mul, x, view_inv(v, ops.inv, g)));
        }
    }
}

// Grows the subgroup to one closed under conjugation by the given ambient
// generators; conjugation by a generating set extends to the whole group.
void normal_close(const PowerSubalgebra& v, const GroupOps& ops, SubgroupState& s,
                  std::span<const int> added, std::span<const int> ambient_gens) {
    orbit_extend(v, ops, s, added);
    while (true) {
        std::vector<int> escaped;
        for (int g : ambient_gens) {
            const int gi = view_inv(v, ops.inv, g);
            for (size_t i = 0; i < s.members.size(); ++i) {
                const int c = view_mul(v, ops.mul, view_mul(v, ops.mul, g, s.members[i]), gi);
                if (!s.in[static_cast<size_t>(c)]) escaped.push_back(c);
            }
        }
        if (escaped.empty()) return;
        orbit_extend(v, ops, s, escaped);
    }
}

// Small generating set of a group view, greedily adjoining the least element
// outside the running subgroup.
std::vector<int> greedy_generators(const PowerSubalgebra& v, const GroupOps& ops) {
    SubgroupState s;
    std::vector<int> gens;
    orbit_extend(v, ops, s, {});
    for (int e = 0; e < v.size(); ++e) {
        if (s.in[static_cast<size_t>(e)]) continue;
        gens.push_back(e);
        const int one[1] = {e};
        orbit_extend(v, ops, s, one);
    }
    return gens;
}

// Verbal-subgroup route: grow V from seeded defects, rescanning over coset
// representatives until no defect escapes.  Environments agreeing with their
// representatives mod V have congruent defects, so an empty scan over
// representatives settles every environment.
std::vector<int> verbal_partition(const PowerSubalgebra& v, const VarietySpec& b,
                                  std::span<const int> seed, Exec exec) {
    const GroupOps ops = *v.ground().group_ops();
    const auto ids = compile_identities(b.identities, v.signature());
    const int n = v.size();

    const std::vector<int> gens = greedy_generators(v, ops);
    SubgroupState s;
    normal_close(v, ops, s, seed, gens);

    // Bootstrap pass over the generators themselves.  For the commutator
    // style words (derived, lower central, trivial) the normal closure of
    // the generator defects is already the full verbal subgroup, so the scan
    // below merely confirms the fixpoint.
    std::vector<int> pool = gens;
    pool.push_back(v.unit());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::vector<int> defects = defect_scan(v, ops, ids, pool, s.in, exec);

    // New defects join the generator list a bounded slice at a time; the
    // subgroup strictly grows per round, so this terminates regardless.
    constexpr size_t kBatch = 4096;
    std::vector<int> label(static_cast<size_t>(n), -1);
    while (true) {
        if (!defects.empty()) {
            if (defects.size() > kBatch) defects.resize(kBatch);
            normal_close(v, ops, s, defects, gens);
        }
        // Coset representatives: least member of each right coset eV.
        std::fill(label.begin(), label.end(), -1);
        std::vector<int> reps;
        for (int e = 0; e < n; ++e) {
            if (label[static_cast<size_t>(e)] >= 0) continue;
            reps.push_back(e);
            for (int x : s.members) label[static_cast<size_t>(view_mul(v, ops.mul, e, x))] = e;
        }
        defects = defect_scan(v, ops, ids, reps, s.in, exec);
        if (defects.empty()) break;
    }
    return label;
}

std::vector<int> diagonal_seed(const PowerSubalgebra& v, const NormalSubobject& ground_radical) {
    std::vector<int> seed;
    int comps[PowerSubalgebra::kMaxWidth];
    for (int u : ground_radical.members) {
        for (int c = 0; c < v.width(); ++c) comps[c] = u;
        const int idx = v.find(PowerSubalgebra::pack(std::span<const int>(comps, static_cast<size_t>(v.width()))));
        if (idx >= 0) seed.push_back(idx);
    }
    return seed;
}

}  // namespace

Congruence radical_congruence(AlgebraPtr a, const VarietySpec& b, Exec exec) {
    validate_variety(b, a->signature());
    const auto viol = violation_scan(*a, b.identities, exec);
    if (!viol.has_value()) return Congruence::diagonal(a);
    if (pure_group_signature(*a)) {
        PowerSubalgebra v = full_view(a);
        // The witnessing violation provides a nontrivial defect up front, so
        // the first representative scan never covers the whole carrier.
        const Identity& id = b.identities[static_cast<size_t>(viol->identity)];
        const GroupOps ops = *a->group_ops();
        const int d = a->apply2(ops.mul, eval_term(id.lhs, *a, viol->env),
                                a->apply1(ops.inv, eval_term(id.rhs, *a, viol->env)));
        const int seed[1] = {d};
        std::vector<int> labels = verbal_partition(v, b, seed, exec);
        return Congruence(a, std::move(labels));
    }
    auto pairs = instance_pairs(*a, b.identities, exec);
    return cg_generate(a, pairs);
}

Reflection radical(AlgebraPtr a, const VarietySpec& b, Exec exec) {
    Congruence theta = radical_congruence(a, b, exec);
    QuotientResult q = quotient(a, theta);
    NormalSubobject rad{a, theta.unit_class()};
    return Reflection{std::move(a), q.algebra, std::move(q.proj), std::move(rad)};
}

ViewPartition radical_partition(const PowerSubalgebra& v, const VarietySpec& b, Exec exec) {
    validate_variety(b, v.signature());
    if (!violation_scan(v.ground(), b.identities, exec).has_value()) {
        std::vector<int> ids(static_cast<size_t>(v.size()));
        std::iota(ids.begin(), ids.end(), 0);
        return make_view_partition(std::move(ids));
    }
    if (pure_group_signature(v.ground())) {
        // Seed with the ground radical embedded along the diagonal; its
        // members are defect values already, which shortens the first scan.
        Reflection ground_refl = radical(v.ground_ptr(), b, exec);
        std::vector<int> seed = diagonal_seed(v, ground_refl.radical);
        return make_view_partition(verbal_partition(v, b, seed, exec));
    }
    auto pairs = instance_pairs(v, b.identities, exec);
    return view_cg_generate(v, pairs);
}

Homomorphism radical_hom(const Homomorphism& f, const VarietySpec& b, Exec exec) {
    Reflection ra = radical(f.domain, b, exec);
    Reflection rb = radical(f.codomain, b, exec);
    auto sub_a = subalgebra(f.domain, ra.radical.members);
    auto sub_b = subalgebra(f.codomain, rb.radical.members);
    std::vector<int> map(static_cast<size_t>(sub_a.algebra->size()));
    for (int i = 0; i < sub_a.algebra->size(); ++i) {
        const int img = f.map[static_cast<size_t>(sub_a.to_ambient[static_cast<size_t>(i)])];
        const auto it = std::lower_bound(sub_b.to_ambient.begin(), sub_b.to_ambient.end(), img);
        if (it == sub_b.to_ambient.end() || *it != img)
            throw CrossCheckError("radical_hom: image of the radical escapes the codomain radical");
        map[static_cast<size_t>(i)] = static_cast<int>(it - sub_b.to_ambient.begin());
    }
    return hom_check(sub_a.algebra, sub_b.algebra, std::move(map));
}

bool birkhoff_square_check(const Homomorphism& f, const VarietySpec& b, Exec exec) {
    Homomorphism r = radical_hom(f, b, exec);
    std::vector<char> hit(static_cast<size_t>(r.codomain->size()), 0);
    for (int v : r.map) hit[static_cast<size_t>(v)] = 1;
    return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

}  // namespace alglab
