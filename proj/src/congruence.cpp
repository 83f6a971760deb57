#include "alglab/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "alglab/error.hpp"

namespace alglab {

namespace {

// Relabel arbitrary block ids so the block of the least unseen element gets
// the next id; this is the canonical form used for equality tests.
std::vector<int> canonicalise(const std::vector<int>& raw, int* count_out) {
    std::vector<int> out(raw.size(), -1);
    std::map<int, int> relabel;
    int next = 0;
    for (size_t e = 0; e < raw.size(); ++e) {
        auto [it, fresh] = relabel.try_emplace(raw[e], next);
        if (fresh) ++next;
        out[e] = it->second;
    }
    *count_out = next;
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // True when the roots were distinct.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smaller element as root
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

}  // namespace

Congruence::Congruence(AlgebraPtr alg, std::vector<int> block_ids) : alg_(std::move(alg)) {
    if (!alg_) throw ValidationError("congruence: null algebra");
    if (static_cast<int>(block_ids.size()) != alg_->size())
        throw ValidationError("congruence: labelling size does not match the carrier");
    block_ = canonicalise(block_ids, &n_blocks_);
}

Congruence Congruence::diagonal(AlgebraPtr alg) {
    std::vector<int> ids(static_cast<size_t>(alg->size()));
    std::iota(ids.begin(), ids.end(), 0);
    return Congruence(std::move(alg), std::move(ids));
}

Congruence Congruence::full(AlgebraPtr alg) {
    std::vector<int> ids(static_cast<size_t>(alg->size()), 0);
    return Congruence(std::move(alg), std::move(ids));
}

std::vector<std::vector<int>> Congruence::blocks() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n_blocks_));
    for (int e = 0; e < static_cast<int>(block_.size()); ++e)
        out[static_cast<size_t>(block_[static_cast<size_t>(e)])].push_back(e);
    return out;
}

std::vector<int> Congruence::unit_class() const {
    std::vector<int> out;
    const int ub = block_[static_cast<size_t>(alg_->unit())];
    for (int e = 0; e < static_cast<int>(block_.size()); ++e)
        if (block_[static_cast<size_t>(e)] == ub) out.push_back(e);
    return out;
}

bool Congruence::is_congruence() const {
    // It suffices to translate pairs (first member, other member) of each
    // block through one argument position at a time: transitivity recovers
    // arbitrary pairs, chaining positions recovers simultaneous substitution.
    const FiniteAlgebra& a = *alg_;
    const int n = a.size();
    const Signature& sig = a.signature();
    auto bl = blocks();
    std::vector<int> args;
    for (const auto& members : bl) {
        for (size_t i = 1; i < members.size(); ++i) {
            const int x = members[0];
            const int y = members[i];
            for (int op = 0; op < sig.op_count(); ++op) {
                const int r = sig.op(op).arity;
                if (r == 0) continue;
                if (r == 1) {
                    if (!same(a.apply1(op, x), a.apply1(op, y))) return false;
                    continue;
                }
                if (r == 2) {
                    for (int c = 0; c < n; ++c) {
                        if (!same(a.apply2(op, x, c), a.apply2(op, y, c))) return false;
                        if (!same(a.apply2(op, c, x), a.apply2(op, c, y))) return false;
                    }
                    continue;
                }
                args.assign(static_cast<size_t>(r), 0);
                for (int pos = 0; pos < r; ++pos) {
                    // Odometer over the other r-1 positions.
                    std::fill(args.begin(), args.end(), 0);
                    bool done = false;
                    while (!done) {
                        args[static_cast<size_t>(pos)] = x;
                        const int vx = a.apply(op, args);
                        args[static_cast<size_t>(pos)] = y;
                        const int vy = a.apply(op, args);
                        if (!same(vx, vy)) return false;
                        done = true;
                        for (int p = r - 1; p >= 0; --p) {
                            if (p == pos) continue;
                            if (++args[static_cast<size_t>(p)] < n) {
                                done = false;
                                break;
                            }
                            args[static_cast<size_t>(p)] = 0;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool Congruence::refines(const Congruence& o) const {
    if (alg_.get() != o.alg_.get() || block_.size() != o.block_.size()) return false;
    // Same block here must imply same block there; check against each
    // block's first member.
    std::vector<int> first(static_cast<size_t>(n_blocks_), -1);
    for (int e = 0; e < static_cast<int>(block_.size()); ++e) {
        int& f = first[static_cast<size_t>(block_[static_cast<size_t>(e)])];
        if (f < 0) {
            f = e;
        } else if (!o.same(f, e)) {
            return false;
        }
    }
    return true;
}

Congruence cg_generate(AlgebraPtr alg, std::span<const std::pair<int, int>> pairs) {
    const FiniteAlgebra& a = *alg;
    const int n = a.size();
    const Signature& sig = a.signature();
    UnionFind uf(n);
    std::deque<std::pair<int, int>> work;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw ValidationError("cg_generate: pair element out of range");
        if (uf.unite(x, y)) work.emplace_back(x, y);
    }
    // One representative pair per union event is enough: any two elements of
    // a class are linked by a chain of processed pairs, and translation
    // images of a chain chain up by transitivity.
    std::vector<int> args;
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (int op = 0; op < sig.op_count(); ++op) {
            const int r = sig.op(op).arity;
            if (r == 0) continue;
            if (r == 1) {
                const int vx = a.apply1(op, x);
                const int vy = a.apply1(op, y);
                if (uf.unite(vx, vy)) work.emplace_back(vx, vy);
                continue;
            }
            if (r == 2) {
                for (int c = 0; c < n; ++c) {
                    int vx = a.apply2(op, x, c);
                    int vy = a.apply2(op, y, c);
                    if (uf.unite(vx, vy)) work.emplace_back(vx, vy);
                    vx = a.apply2(op, c, x);
                    vy = a.apply2(op, c, y);
                    if (uf.unite(vx, vy)) work.emplace_back(vx, vy);
                }
                continue;
            }
            for (int pos = 0; pos < r; ++pos) {
                args.assign(static_cast<size_t>(r), 0);
                bool done = false;
                while (!done) {
                    args[static_cast<size_t>(pos)] = x;
                    const int vx = a.apply(op, args);
                    args[static_cast<size_t>(pos)] = y;
                    const int vy = a.apply(op, args);
                    if (uf.unite(vx, vy)) work.emplace_back(vx, vy);
                    done = true;
                    for (int p = r - 1; p >= 0; --p) {
                        if (p == pos) continue;
                        if (++args[static_cast<size_t>(p)] < n) {
                            done = false;
                            break;
                        }
                        args[static_cast<size_t>(p)] = 0;
                    }
                }
            }
        }
    }
    std::vector<int> ids(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) ids[static_cast<size_t>(e)] = uf.find(e);
    return Congruence(std::move(alg), std::move(ids));
}

std::vector<int> ViewPartition::class_of(int member) const {
    std::vector<int> out;
    const int b = block[static_cast<size_t>(member)];
    for (int e = 0; e < static_cast<int>(block.size()); ++e)
        if (block[static_cast<size_t>(e)] == b) out.push_back(e);
    return out;
}

ViewPartition make_view_partition(std::vector<int> raw_ids) {
    ViewPartition p;
    p.block = canonicalise(raw_ids, &p.n_blocks);
    return p;
}

ViewPartition view_cg_generate(const PowerSubalgebra& v, std::span<const std::pair<int, int>> pairs) {
    const int n = v.size();
    const Signature& sig = v.signature();
    UnionFind uf(n);
    std::deque<std::pair<int, int>> work;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw ValidationError("view_cg_generate: pair element out of range");
        if (uf.unite(x, y)) work.emplace_back(x, y);
    }
    std::vector<int> args;
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (int op = 0; op < sig.op_count(); ++op) {
            const int r = sig.op(op).arity;
            if (r == 0) continue;
            for (int pos = 0; pos < r; ++pos) {
                args.assign(static_cast<size_t>(r), 0);
                bool done = false;
                while (!done) {
                    args[static_cast<size_t>(pos)] = x;
                    const int vx = v.apply(op, args);
                    args[static_cast<size_t>(pos)] = y;
                    const int vy = v.apply(op, args);
                    if (uf.unite(vx, vy)) work.emplace_back(vx, vy);
                    done = true;
                    for (int p = r - 1; p >= 0; --p) {
                        if (p == pos) continue;
                        if (++args[static_cast<size_t>(p)] < n) {
                            done = false;
                            break;
                        }
                        args[static_cast<size_t>(p)] = 0;
                    }
                }
            }
        }
    }
    std::vector<int> ids(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) ids[static_cast<size_t>(e)] = uf.find(e);
    return make_view_partition(std::move(ids));
}

QuotientResult quotient(AlgebraPtr alg, const Congruence& theta) {
    if (theta.algebra().get() != alg.get())
        throw ValidationError("quotient: congruence belongs to a different algebra");
    const FiniteAlgebra& a = *alg;
    auto bl = theta.blocks();
    const int nb = theta.block_count();

    // Carrier order: the unit block first, the rest by least member.
    std::vector<int> order(static_cast<size_t>(nb));
    std::iota(order.begin(), order.end(), 0);
    const int unit_block = theta.block_of(a.unit());
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        if ((p == unit_block) != (q == unit_block)) return p == unit_block;
        return bl[static_cast<size_t>(p)][0] < bl[static_cast<size_t>(q)][0];
    });
    std::vector<int> new_id(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i) new_id[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    std::vector<int> proj(static_cast<size_t>(a.size()));
    for (int e = 0; e < a.size(); ++e) proj[static_cast<size_t>(e)] = new_id[static_cast<size_t>(theta.block_of(e))];

    std::vector<std::string> names(static_cast<size_t>(nb));
    std::vector<int> rep(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i) {
        const int b = order[static_cast<size_t>(i)];
        rep[static_cast<size_t>(i)] = bl[static_cast<size_t>(b)][0];
        names[static_cast<size_t>(i)] = "[" + a.element_name(bl[static_cast<size_t>(b)][0]) + "]";
    }

    const Signature& sig = a.signature();
    std::vector<std::vector<int>> tables(static_cast<size_t>(sig.op_count()));
    std::vector<int> args;
    for (int op = 0; op < sig.op_count(); ++op) {
        const int r = sig.op(op).arity;
        size_t entries = 1;
        for (int i = 0; i < r; ++i) entries *= static_cast<size_t>(nb);
        auto& t = tables[static_cast<size_t>(op)];
        t.resize(entries);
        args.assign(static_cast<size_t>(std::max(r, 1)), 0);
        std::vector<int> idx(static_cast<size_t>(std::max(r, 1)), 0);
        for (size_t flat = 0; flat < entries; ++flat) {
            size_t rest = flat;
            for (int p = r - 1; p >= 0; --p) {
                idx[static_cast<size_t>(p)] = static_cast<int>(rest % static_cast<size_t>(nb));
                rest /= static_cast<size_t>(nb);
            }
            for (int p = 0; p < r; ++p) args[static_cast<size_t>(p)] = rep[static_cast<size_t>(idx[static_cast<size_t>(p)])];
            t[flat] = proj[static_cast<size_t>(a.apply(op, std::span<const int>(args.data(), static_cast<size_t>(r))))];
        }
    }

    // Group laws are equational, hence inherited by quotients.
    auto q = make_algebra(a.name() + "/~", sig, std::move(names), proj[static_cast<size_t>(a.unit())],
                          std::move(tables), a.group_ops());
    Homomorphism h = hom_check(alg, q, std::move(proj));
    return {std::move(q), std::move(h)};
}

Congruence kernel_pair(const Homomorphism& f) {
    return Congruence(f.domain, f.map);
}

bool NormalSubobject::contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

std::vector<std::string> NormalSubobject::member_names() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (int e : members) out.push_back(algebra->element_name(e));
    return out;
}

NormalSubobject NormalSubobject::make(AlgebraPtr alg, std::vector<int> members) {
    if (!alg) throw ValidationError("normal subobject: null algebra");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() < 0 || members.back() >= alg->size())
        throw ValidationError("normal subobject: members out of range");
    if (!std::binary_search(members.begin(), members.end(), alg->unit()))
        throw ValidationError("normal subobject: the unit is missing");
    // The set is normal exactly when it is the whole unit class of the
    // congruence its pairs-to-unit generate; anything extra in that class is
    // forced, so the given set was not closed.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(members.size());
    for (int e : members) pairs.emplace_back(e, alg->unit());
    Congruence theta = cg_generate(alg, pairs);
    std::vector<int> closed = theta.unit_class();
    if (closed != members) {
        std::string msg = "normal subobject: set is not normal in " + alg->name() + "; closure adds {";
        bool first = true;
        for (int e : closed)
            if (!std::binary_search(members.begin(), members.end(), e)) {
                if (!first) msg += ", ";
                msg += alg->element_name(e);
                first = false;
            }
        msg += "}";
        throw ValidationError(msg);
    }
    return NormalSubobject{std::move(alg), std::move(members)};
}

NormalSubobject kernel(const Homomorphism& f) {
    std::vector<int> members;
    const int cu = f.codomain->unit();
    for (int e = 0; e < f.domain->size(); ++e)
        if (f.map[static_cast<size_t>(e)] == cu) members.push_back(e);
    // Kernels are unit classes of kernel pairs, no validation needed.
    return NormalSubobject{f.domain, std::move(members)};
}

NormalSubobject normal_closure(AlgebraPtr alg, std::span<const int> gens) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(gens.size());
    for (int g : gens) pairs.emplace_back(g, alg->unit());
    Congruence theta = cg_generate(alg, pairs);
    return NormalSubobject{std::move(alg), theta.unit_class()};
}

NormalSubobject join_normal(const NormalSubobject& m, const NormalSubobject& n) {
    if (m.algebra.get() != n.algebra.get())
        throw ValidationError("join: normal subobjects of different algebras");
    std::vector<int> gens = m.members;
    gens.insert(gens.end(), n.members.begin(), n.members.end());
    return normal_closure(m.algebra, gens);
}

NormalSubobject meet_normal(const NormalSubobject& m, const NormalSubobject& n) {
    if (m.algebra.get() != n.algebra.get())
        throw ValidationError("meet: normal subobjects of different algebras");
    std::vector<int> members;
    std::set_intersection(m.members.begin(), m.members.end(), n.members.begin(), n.members.end(),
                          std::back_inserter(members));
    // Intersection of unit classes is the unit class of the meet congruence.
    return NormalSubobject{m.algebra, std::move(members)};
}

NormalSubobject direct_image(const Homomorphism& f, const NormalSubobject& m) {
    if (f.domain.get() != m.algebra.get())
        throw ValidationError("direct image: subobject lives in a different algebra");
    std::vector<int> image;
    image.reserve(m.members.size());
    for (int e : m.members) image.push_back(f.map[static_cast<size_t>(e)]);
    // For surjective f the set image is already normal; the closure then
    // changes nothing and otherwise gives the regular image.
    return normal_closure(f.codomain, image);
}

Congruence congruence_of_normal(const NormalSubobject& m) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m.members.size());
    for (int e : m.members) pairs.emplace_back(e, m.algebra->unit());
    return cg_generate(m.algebra, pairs);
}

Congruence join_congruence(const Congruence& a, const Congruence& b) {
    if (a.algebra().get() != b.algebra().get())
        throw ValidationError("join: congruences on different algebras");
    std::vector<std::pair<int, int>> pairs;
    auto add_blocks = [&](const Congruence& c) {
        for (const auto& members : c.blocks())
            for (size_t i = 1; i < members.size(); ++i) pairs.emplace_back(members[0], members[i]);
    };
    add_blocks(a);
    add_blocks(b);
    return cg_generate(a.algebra(), pairs);
}

Congruence meet_congruence(const Congruence& a, const Congruence& b) {
    if (a.algebra().get() != b.algebra().get())
        throw ValidationError("meet: congruences on different algebras");
    const int n = a.algebra()->size();
    std::vector<int> ids(static_cast<size_t>(n));
    const int nb = b.block_count();
    for (int e = 0; e < n; ++e) ids[static_cast<size_t>(e)] = a.block_of(e) * nb + b.block_of(e);
    return Congruence(a.algebra(), std::move(ids));
}

std::vector<Congruence> congruence_lattice(AlgebraPtr alg, int bound) {
    const int n = alg->size();
    if (n > bound)
        throw BoundError("congruence lattice: carrier size " + std::to_string(n) +
                         " exceeds bound " + std::to_string(bound));
    std::vector<Congruence> found;
    auto add = [&](Congruence c) {
        for (const auto& f : found)
            if (f == c) return false;
        found.push_back(std::move(c));
        return true;
    };
    add(Congruence::diagonal(alg));
    std::pair<int, int> gen[1];
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            gen[0] = {x, y};
            add(cg_generate(alg, gen));
        }
    // Close under pairwise joins; principal congruences generate everything.
    for (size_t i = 0; i < found.size(); ++i)
        for (size_t j = 0; j < i; ++j) add(join_congruence(found[i], found[j]));
    std::sort(found.begin(), found.end(),
              [](const Congruence& p, const Congruence& q) { return p.block_ids() < q.block_ids(); });
    return found;
}

std::vector<NormalSubobject> normals_enumerate(AlgebraPtr alg, int bound) {
    auto lattice = congruence_lattice(alg, bound);
    std::set<std::vector<int>> seen;
    std::vector<NormalSubobject> out;
    for (const auto& c : lattice) {
        auto uc = c.unit_class();
        if (seen.insert(uc).second) out.push_back(NormalSubobject{alg, std::move(uc)});
    }
    std::sort(out.begin(), out.end(), [](const NormalSubobject& p, const NormalSubobject& q) {
        if (p.members.size() != q.members.size()) return p.members.size() < q.members.size();
        return p.members < q.members;
    });
    return out;
}

PairAlgebra pair_algebra(const Homomorphism& f) {
    const FiniteAlgebra& a = *f.domain;
    const int n = a.size();
    std::vector<std::pair<int, int>> elems;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.map[static_cast<size_t>(x)] == f.map[static_cast<size_t>(y)]) elems.emplace_back(x, y);
    const int m = static_cast<int>(elems.size());
    if (m > 1024)
        throw BoundError("pair algebra: " + std::to_string(m) +
                         " elements exceed the table bound; use the tuple views instead");
    std::vector<int> index(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (int i = 0; i < m; ++i)
        index[static_cast<size_t>(elems[static_cast<size_t>(i)].first) * n + elems[static_cast<size_t>(i)].second] = i;

    const Signature& sig = a.signature();
    std::vector<std::string> names(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        names[static_cast<size_t>(i)] =
            "(" + a.element_name(elems[static_cast<size_t>(i)].first) + "," + a.element_name(elems[static_cast<size_t>(i)].second) + ")";

    std::vector<std::vector<int>> tables(static_cast<size_t>(sig.op_count()));
    std::vector<int> ax, ay, idx;
    for (int op = 0; op < sig.op_count(); ++op) {
        const int r = sig.op(op).arity;
        size_t entries = 1;
        for (int i = 0; i < r; ++i) entries *= static_cast<size_t>(m);
        auto& t = tables[static_cast<size_t>(op)];
        t.resize(entries);
        ax.assign(static_cast<size_t>(std::max(r, 1)), 0);
        ay.assign(static_cast<size_t>(std::max(r, 1)), 0);
        idx.assign(static_cast<size_t>(std::max(r, 1)), 0);
        for (size_t flat = 0; flat < entries; ++flat) {
            size_t rest = flat;
            for (int p = r - 1; p >= 0; --p) {
                idx[static_cast<size_t>(p)] = static_cast<int>(rest % static_cast<size_t>(m));
                rest /= static_cast<size_t>(m);
            }
            for (int p = 0; p < r; ++p) {
                ax[static_cast<size_t>(p)] = elems[static_cast<size_t>(idx[static_cast<size_t>(p)])].first;
                ay[static_cast<size_t>(p)] = elems[static_cast<size_t>(idx[static_cast<size_t>(p)])].second;
            }
            const int vx = a.apply(op, std::span<const int>(ax.data(), static_cast<size_t>(r)));
            const int vy = a.apply(op, std::span<const int>(ay.data(), static_cast<size_t>(r)));
            t[flat] = index[static_cast<size_t>(vx) * n + vy];
        }
    }

    const int unit_idx = index[static_cast<size_t>(a.unit()) * n + a.unit()];
    auto alg = make_algebra("R(" + f.codomain->name() + ")", sig, std::move(names), unit_idx,
                            std::move(tables), a.group_ops());
    std::vector<int> m0(static_cast<size_t>(m)), m1(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        m0[static_cast<size_t>(i)] = elems[static_cast<size_t>(i)].first;
        m1[static_cast<size_t>(i)] = elems[static_cast<size_t>(i)].second;
    }
    PairAlgebra out;
    out.p0 = hom_check(alg, f.domain, std::move(m0));
    out.p1 = hom_check(alg, f.domain, std::move(m1));
    out.algebra = std::move(alg);
    out.elems = std::move(elems);
    return out;
}

namespace {

// Exactness of K -> X -> Q at X: the first arrow is injective with image
// exactly the kernel of the second, and the second is surjective.
void check_exact(const Homomorphism& in, const Homomorphism& out, const std::string& where) {
    if (in.codomain.get() != out.domain.get())
        throw ValidationError("three_by_three: mismatched arrows at " + where);
    std::vector<char> hit(static_cast<size_t>(in.codomain->size()), 0);
    for (int e = 0; e < in.domain->size(); ++e) {
        int v = in.map[static_cast<size_t>(e)];
        if (hit[static_cast<size_t>(v)])
            throw ValidationError("three_by_three: arrow into " + where + " is not injective");
        hit[static_cast<size_t>(v)] = 1;
    }
    const int cu = out.codomain->unit();
    for (int e = 0; e < out.domain->size(); ++e) {
        const bool in_kernel = out.map[static_cast<size_t>(e)] == cu;
        if (in_kernel != (hit[static_cast<size_t>(e)] != 0))
            throw ValidationError("three_by_three: sequence not exact at " + where);
    }
    std::vector<char> onto(static_cast<size_t>(out.codomain->size()), 0);
    for (int v : out.map) onto[static_cast<size_t>(v)] = 1;
    for (char c : onto)
        if (!c) throw ValidationError("three_by_three: arrow out of " + where + " is not surjective");
}

}  // namespace

ThreeByThree three_by_three(AlgebraPtr a, const NormalSubobject& m, const NormalSubobject& n) {
    if (m.algebra.get() != a.get() || n.algebra.get() != a.get())
        throw ValidationError("three_by_three: subobjects live in a different algebra");
    const NormalSubobject meet = meet_normal(m, n);
    const NormalSubobject join = join_normal(m, n);

    auto sub_m = subalgebra(a, m.members);
    auto sub_n = subalgebra(a, n.members);
    auto sub_meet = subalgebra(a, meet.members);

    auto local = [](const SubalgebraResult& sub, const std::vector<int>& ambient) {
        std::vector<int> out;
        for (int i = 0; i < sub.algebra->size(); ++i)
            if (std::binary_search(ambient.begin(), ambient.end(), sub.to_ambient[static_cast<size_t>(i)]))
                out.push_back(i);
        return out;
    };
    // An ideal of A contained in a subalgebra S is an ideal of S: the ideal
    // conditions for S are among those for A.
    NormalSubobject meet_in_m{sub_m.algebra, local(sub_m, meet.members)};
    NormalSubobject meet_in_n{sub_n.algebra, local(sub_n, meet.members)};

    auto q_n_by_meet = quotient(sub_n.algebra, congruence_of_normal(meet_in_n));
    auto q_m_by_meet = quotient(sub_m.algebra, congruence_of_normal(meet_in_m));
    auto q_a_by_m = quotient(a, congruence_of_normal(m));
    auto q_a_by_n = quotient(a, congruence_of_normal(n));
    auto q_a_by_join = quotient(a, congruence_of_normal(join));

    ThreeByThree d;
    d.grid[0][0] = sub_meet.algebra;
    d.grid[0][1] = sub_n.algebra;
    d.grid[0][2] = q_n_by_meet.algebra;
    d.grid[1][0] = sub_m.algebra;
    d.grid[1][1] = a;
    d.grid[1][2] = q_a_by_m.algebra;
    d.grid[2][0] = q_m_by_meet.algebra;
    d.grid[2][1] = q_a_by_n.algebra;
    d.grid[2][2] = q_a_by_join.algebra;

    // Index-translation helpers between the derived carriers.
    auto embed = [&](const SubalgebraResult& small, const SubalgebraResult& big) {
        std::vector<int> map(static_cast<size_t>(small.algebra->size()));
        for (int i = 0; i < small.algebra->size(); ++i) {
            const int amb = small.to_ambient[static_cast<size_t>(i)];
            const auto it = std::find(big.to_ambient.begin(), big.to_ambient.end(), amb);
            map[static_cast<size_t>(i)] = static_cast<int>(it - big.to_ambient.begin());
        }
        return map;
    };
    auto through = [&](const SubalgebraResult& sub, const Homomorphism& after) {
        std::vector<int> map(static_cast<size_t>(sub.algebra->size()));
        for (int i = 0; i < sub.algebra->size(); ++i)
            map[static_cast<size_t>(i)] = after.map[static_cast<size_t>(sub.to_ambient[static_cast<size_t>(i)])];
        return map;
    };

    d.right[0][0] = hom_check(sub_meet.algebra, sub_n.algebra, embed(sub_meet, sub_n));
    d.right[0][1] = q_n_by_meet.proj;
    d.right[1][0] = sub_m.inclusion;
    d.right[1][1] = q_a_by_m.proj;
    d.down[0][0] = hom_check(sub_meet.algebra, sub_m.algebra, embed(sub_meet, sub_m));
    d.down[0][1] = sub_n.inclusion;
    d.down[1][0] = q_m_by_meet.proj;
    d.down[1][1] = q_a_by_n.proj;

    // N/(M∧N) -> A/M: well defined because M∧N maps into M.
    {
        std::vector<int> nm = through(sub_n, q_a_by_m.proj);
        std::vector<int> map(static_cast<size_t>(q_n_by_meet.algebra->size()), -1);
        for (int i = 0; i < sub_n.algebra->size(); ++i) {
            int& slot = map[static_cast<size_t>(q_n_by_meet.proj.map[static_cast<size_t>(i)])];
            const int v = nm[static_cast<size_t>(i)];
            if (slot >= 0 && slot != v)
                throw ValidationError("three_by_three: N/(M∧N) -> A/M is not well defined");
            slot = v;
        }
        d.down[0][2] = hom_check(q_n_by_meet.algebra, q_a_by_m.algebra, std::move(map));
    }
    // M/(M∧N) -> A/N, same construction on the other side.
    {
        std::vector<int> mn = through(sub_m, q_a_by_n.proj);
        std::vector<int> map(static_cast<size_t>(q_m_by_meet.algebra->size()), -1);
        for (int i = 0; i < sub_m.algebra->size(); ++i) {
            int& slot = map[static_cast<size_t>(q_m_by_meet.proj.map[static_cast<size_t>(i)])];
            const int v = mn[static_cast<size_t>(i)];
            if (slot >= 0 && slot != v)
                throw ValidationError("three_by_three: M/(M∧N) -> A/N is not well defined");
            slot = v;
        }
        d.right[2][0] = hom_check(q_m_by_meet.algebra, q_a_by_n.algebra, std::move(map));
    }
    // A/M -> A/(M∨N) and A/N -> A/(M∨N), induced on classes.
    auto induced = [&](const QuotientResult& from) {
        std::vector<int> map(static_cast<size_t>(from.algebra->size()), -1);
        for (int e = 0; e < a->size(); ++e) {
            int& slot = map[static_cast<size_t>(from.proj.map[static_cast<size_t>(e)])];
            const int v = q_a_by_join.proj.map[static_cast<size_t>(e)];
            if (slot >= 0 && slot != v)
                throw ValidationError("three_by_three: induced quotient map is not well defined");
            slot = v;
        }
        return hom_check(from.algebra, q_a_by_join.algebra, std::move(map));
    };
    d.down[1][2] = induced(q_a_by_m);
    d.right[2][1] = induced(q_a_by_n);

    // Every row and column is short exact.
    for (int r = 0; r < 3; ++r)
        check_exact(d.right[r][0], d.right[r][1], "row " + std::to_string(r));
    for (int c = 0; c < 3; ++c)
        check_exact(d.down[0][c], d.down[1][c], "column " + std::to_string(c));
    // The four squares commute.
    auto square = [&](const Homomorphism& top, const Homomorphism& rightv, const Homomorphism& leftv,
                      const Homomorphism& bottom) {
        for (int e = 0; e < top.domain->size(); ++e)
            if (rightv.map[static_cast<size_t>(top.map[static_cast<size_t>(e)])] !=
                bottom.map[static_cast<size_t>(leftv.map[static_cast<size_t>(e)])])
                throw ValidationError("three_by_three: a square does not commute");
    };
    square(d.right[0][0], d.down[0][1], d.down[0][0], d.right[1][0]);
    square(d.right[0][1], d.down[0][2], d.down[0][1], d.right[1][1]);
    square(d.right[1][0], d.down[1][1], d.down[1][0], d.right[2][0]);
    square(d.right[1][1], d.down[1][2], d.down[1][1], d.right[2][1]);

    if (join.is_whole()) {
        auto bijective = [](const Homomorphism& h) {
            if (h.domain->size() != h.codomain->size()) return false;
            std::vector<char> hit(static_cast<size_t>(h.codomain->size()), 0);
            for (int v : h.map) {
                if (hit[static_cast<size_t>(v)]) return false;
                hit[static_cast<size_t>(v)] = 1;
            }
            return true;
        };
        if (bijective(d.down[0][2])) d.noether_n = d.down[0][2];
        if (bijective(d.right[2][0])) d.noether_m = d.right[2][0];
    }
    return d;
}

}  // namespace alglab
