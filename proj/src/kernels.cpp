#include "alglab/kernels.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "alglab/error.hpp"

#ifdef ALGLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace alglab {

namespace {

Exec g_default =
#ifdef ALGLAB_HAVE_OPENMP
    Exec::parallel;
#else
    Exec::serial;
#endif

// Dense bit accumulator used by every set-building kernel; merging per-thread
// copies with OR keeps the result independent of the thread schedule.
class BitAcc {
  public:
    explicit BitAcc(uint64_t bits) : words_((bits + 63) / 64, 0) {}
    void set(uint64_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    void merge(const BitAcc& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    }
    template <class F>
    void for_each_set(F&& f) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                const int b = __builtin_ctzll(w);
                f(static_cast<uint64_t>(k) * 64 + static_cast<uint64_t>(b));
                w &= w - 1;
            }
        }
    }

  private:
    std::vector<uint64_t> words_;
};

void decode_env(uint64_t flat, int base, std::span<int> env) {
    for (int p = static_cast<int>(env.size()) - 1; p >= 0; --p) {
        env[static_cast<size_t>(p)] = static_cast<int>(flat % static_cast<uint64_t>(base));
        flat /= static_cast<uint64_t>(base);
    }
}

// Member-index environments drawn from an explicit list.
void decode_env_from(uint64_t flat, std::span<const int> pool, std::span<int> env) {
    const uint64_t m = pool.size();
    for (int p = static_cast<int>(env.size()) - 1; p >= 0; --p) {
        env[static_cast<size_t>(p)] = pool[static_cast<size_t>(flat % m)];
        flat /= m;
    }
}

void guard_envs(uint64_t total, const char* what) {
    if (total > kEnvGuard)
        throw BoundError(std::string(what) + ": " + std::to_string(total) +
                         " environments exceed the enumeration guard");
}

constexpr uint64_t kPairBitsetCap = 1ull << 28;  // bits per thread-local pair accumulator

}  // namespace

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

uint64_t env_count(uint64_t base, int vars) {
    if (base == 0) return vars == 0 ? 1 : 0;
    uint64_t total = 1;
    for (int i = 0; i < vars; ++i) {
        if (total > std::numeric_limits<uint64_t>::max() / base)
            return std::numeric_limits<uint64_t>::max();
        total *= base;
    }
    return total;
}

std::vector<CompiledIdentity> compile_identities(std::span<const Identity> ids, const Signature& sig) {
    std::vector<CompiledIdentity> out;
    out.reserve(ids.size());
    for (const Identity& id : ids) {
        CompiledIdentity c;
        c.lhs = CompiledTerm::compile(id.lhs, sig);
        c.rhs = CompiledTerm::compile(id.rhs, sig);
        c.vars = id.var_count();
        if (c.vars > 16) throw BoundError("identity uses more than 16 variables");
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<Violation> violation_scan(const FiniteAlgebra& a, std::span<const Identity> ids, Exec exec) {
    for (const Identity& id : ids)
        guard_envs(env_count(static_cast<uint64_t>(a.size()), id.var_count()), "violation_scan");
    if (exec == Exec::serial) return find_violation(a, ids);
#ifndef ALGLAB_HAVE_OPENMP
    return find_violation(a, ids);
#else
    const auto compiled = compile_identities(ids, a.signature());
    const int n = a.size();
    for (size_t i = 0; i < compiled.size(); ++i) {
        const CompiledIdentity& c = compiled[i];
        const uint64_t total = env_count(static_cast<uint64_t>(n), c.vars);
        constexpr uint64_t kNone = std::numeric_limits<uint64_t>::max();
        // Ordered chunks, doubling: cheap early exit near the origin, full
        // bandwidth on satisfied identities.
        uint64_t chunk = 1ull << 14;
        uint64_t start = 0;
        while (start < total) {
            const uint64_t end = std::min(total, start + chunk);
            uint64_t best = kNone;
#pragma omp parallel for schedule(static) reduction(min : best)
            for (long long flat = static_cast<long long>(start); flat < static_cast<long long>(end); ++flat) {
                int env[16];
                decode_env(static_cast<uint64_t>(flat), n, std::span<int>(env, static_cast<size_t>(c.vars)));
                const std::span<const int> e(env, static_cast<size_t>(c.vars));
                if (c.lhs.eval(a, e) != c.rhs.eval(a, e))
                    best = std::min(best, static_cast<uint64_t>(flat));
            }
            if (best != kNone) {
                std::vector<int> env(static_cast<size_t>(c.vars));
                decode_env(best, n, env);
                return Violation{static_cast<int>(i), std::move(env)};
            }
            start = end;
            chunk = std::min<uint64_t>(chunk * 2, 1ull << 22);
        }
    }
    return std::nullopt;
#endif
}

namespace {

// Shared shape of both instance_pairs overloads: enumerate environments,
// evaluate one identity, feed the (lhs, rhs) key to an accumulator.
template <class EvalPair>
std::vector<std::pair<int, int>> collect_pairs(uint64_t m, std::span<const CompiledIdentity> ids,
                                               uint64_t pool_size, EvalPair&& ev, Exec exec) {
    uint64_t total = 0;
    for (const auto& c : ids) {
        const uint64_t t = env_count(pool_size, c.vars);
        total = (t > std::numeric_limits<uint64_t>::max() - total) ? std::numeric_limits<uint64_t>::max()
                                                                   : total + t;
    }
    guard_envs(total, "instance_pairs");

    const uint64_t key_space = m * m;
    std::vector<std::pair<int, int>> out;
    if (key_space <= kPairBitsetCap) {
        BitAcc acc(key_space);
#ifdef ALGLAB_HAVE_OPENMP
        if (exec == Exec::parallel) {
            for (const auto& c : ids) {
                const uint64_t t = env_count(pool_size, c.vars);
#pragma omp parallel
                {
                    BitAcc local(key_space);
#pragma omp for schedule(static) nowait
                    for (long long flat = 0; flat < static_cast<long long>(t); ++flat) {
                        const auto [x, y] = ev(c, static_cast<uint64_t>(flat));
                        local.set(static_cast<uint64_t>(x) * m + static_cast<uint64_t>(y));
                    }
#pragma omp critical
                    acc.merge(local);
                }
            }
        } else
#endif
        {
            (void)exec;
            for (const auto& c : ids) {
                const uint64_t t = env_count(pool_size, c.vars);
                for (uint64_t flat = 0; flat < t; ++flat) {
                    const auto [x, y] = ev(c, flat);
                    acc.set(static_cast<uint64_t>(x) * m + static_cast<uint64_t>(y));
                }
            }
        }
        acc.for_each_set([&](uint64_t key) {
            out.emplace_back(static_cast<int>(key / m), static_cast<int>(key % m));
        });
        return out;
    }

    // Key space too wide for dense bits: hash sets, then one global sort.
    std::unordered_set<uint64_t> seen;
#ifdef ALGLAB_HAVE_OPENMP
    if (exec == Exec::parallel) {
        for (const auto& c : ids) {
            const uint64_t t = env_count(pool_size, c.vars);
#pragma omp parallel
            {
                std::unordered_set<uint64_t> local;
#pragma omp for schedule(static) nowait
                for (long long flat = 0; flat < static_cast<long long>(t); ++flat) {
                    const auto [x, y] = ev(c, static_cast<uint64_t>(flat));
                    local.insert(static_cast<uint64_t>(x) * m + static_cast<uint64_t>(y));
                }
#pragma omp critical
                seen.merge(local);
            }
        }
    } else
#endif
    {
        for (const auto& c : ids) {
            const uint64_t t = env_count(pool_size, c.vars);
            for (uint64_t flat = 0; flat < t; ++flat) {
                const auto [x, y] = ev(c, flat);
                seen.insert(static_cast<uint64_t>(x) * m + static_cast<uint64_t>(y));
            }
        }
    }
    std::vector<uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    out.reserve(keys.size());
    for (uint64_t key : keys) out.emplace_back(static_cast<int>(key / m), static_cast<int>(key % m));
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> instance_pairs(const FiniteAlgebra& a, std::span<const Identity> ids,
                                                Exec exec) {
    const auto compiled = compile_identities(ids, a.signature());
    const int n = a.size();
    auto ev = [&](const CompiledIdentity& c, uint64_t flat) {
        int env[16];
        decode_env(flat, n, std::span<int>(env, static_cast<size_t>(c.vars)));
        const std::span<const int> e(env, static_cast<size_t>(c.vars));
        return std::pair<int, int>(c.lhs.eval(a, e), c.rhs.eval(a, e));
    };
    return collect_pairs(static_cast<uint64_t>(n), compiled, static_cast<uint64_t>(n), ev, exec);
}

namespace {

// Componentwise evaluation of a compiled term at a member-index environment.
// Values stay inside the view because the member list is closed.
inline int eval_on_view(const PowerSubalgebra& v, const CompiledTerm& t, std::span<const int> env,
                        bool identity_view) {
    const FiniteAlgebra& g = v.ground();
    const int w = v.width();
    if (identity_view) return t.eval(g, env);
    int comp_env[16];
    int comps[PowerSubalgebra::kMaxWidth];
    for (int c = 0; c < w; ++c) {
        for (size_t k = 0; k < env.size(); ++k) comp_env[k] = v.component(env[k], c);
        comps[c] = t.eval(g, std::span<const int>(comp_env, env.size()));
    }
    const int idx = v.find(PowerSubalgebra::pack(std::span<const int>(comps, static_cast<size_t>(w))));
    if (idx < 0) throw ValidationError("view term evaluation left the member list");
    return idx;
}

inline bool is_identity_view(const PowerSubalgebra& v) {
    return v.width() == 1 && v.size() == v.ground().size();
}

}  // namespace

std::vector<std::pair<int, int>> instance_pairs(const PowerSubalgebra& v, std::span<const Identity> ids,
                                                Exec exec) {
    const auto compiled = compile_identities(ids, v.signature());
    const uint64_t m = static_cast<uint64_t>(v.size());
    const bool idview = is_identity_view(v);
    auto ev = [&](const CompiledIdentity& c, uint64_t flat) {
        int env[16];
        decode_env(flat, static_cast<int>(m), std::span<int>(env, static_cast<size_t>(c.vars)));
        const std::span<const int> e(env, static_cast<size_t>(c.vars));
        return std::pair<int, int>(eval_on_view(v, c.lhs, e, idview), eval_on_view(v, c.rhs, e, idview));
    };
    return collect_pairs(m, compiled, m, ev, exec);
}

std::vector<int> defect_scan(const PowerSubalgebra& g, const GroupOps& ops,
                             std::span<const CompiledIdentity> ids, std::span<const int> reps,
                             const std::vector<char>& in_v, Exec exec) {
    const FiniteAlgebra& ground = g.ground();
    const int w = g.width();
    const bool idview = is_identity_view(g);
    const uint64_t bits = static_cast<uint64_t>(g.size());
    BitAcc acc(bits);

    auto scan_one = [&](const CompiledIdentity& c, uint64_t flat, BitAcc& sink) {
        int env[16];
        decode_env_from(flat, reps, std::span<int>(env, static_cast<size_t>(c.vars)));
        const std::span<const int> e(env, static_cast<size_t>(c.vars));
        int d;
        if (idview) {
            const int a = c.lhs.eval(ground, e);
            const int b = c.rhs.eval(ground, e);
            d = ground.apply2(ops.mul, a, ground.apply1(ops.inv, b));
        } else {
            int comp_env[16];
            int comps[PowerSubalgebra::kMaxWidth];
            for (int cc = 0; cc < w; ++cc) {
                for (size_t k = 0; k < e.size(); ++k) comp_env[k] = g.component(e[k], cc);
                const std::span<const int> ce(comp_env, e.size());
                const int a = c.lhs.eval(ground, ce);
                const int b = c.rhs.eval(ground, ce);
                comps[cc] = ground.apply2(ops.mul, a, ground.apply1(ops.inv, b));
            }
            d = g.find(PowerSubalgebra::pack(std::span<const int>(comps, static_cast<size_t>(w))));
            if (d < 0) throw ValidationError("defect left the member list");
        }
        if (!in_v[static_cast<size_t>(d)]) sink.set(static_cast<uint64_t>(d));
    };

    for (const auto& c : ids) {
        const uint64_t total = env_count(reps.size(), c.vars);
        guard_envs(total, "defect_scan");
#ifdef ALGLAB_HAVE_OPENMP
        if (exec == Exec::parallel) {
#pragma omp parallel
            {
                BitAcc local(bits);
#pragma omp for schedule(static) nowait
                for (long long flat = 0; flat < static_cast<long long>(total); ++flat)
                    scan_one(c, static_cast<uint64_t>(flat), local);
#pragma omp critical
                acc.merge(local);
            }
            continue;
        }
#endif
        for (uint64_t flat = 0; flat < total; ++flat) scan_one(c, flat, acc);
    }
    (void)exec;
    std::vector<int> out;
    acc.for_each_set([&](uint64_t i) { out.push_back(static_cast<int>(i)); });
    return out;
}

std::vector<uint64_t> quad_filter(const FiniteAlgebra& base, const Congruence& rm, const Congruence& rn,
                                  Exec exec) {
    const int n = base.size();
    const auto blocks_m = rm.blocks();
    const auto blocks_n = rn.blocks();
    auto row_of = [&](int x) -> const std::vector<int>& {
        return blocks_n[static_cast<size_t>(rn.block_of(x))];
    };
    auto col_of = [&](int x) -> const std::vector<int>& {
        return blocks_m[static_cast<size_t>(rm.block_of(x))];
    };

    // Count before building: a quadruple view beyond the cap would not be
    // tractable for the radical machinery downstream anyway.
    constexpr uint64_t kQuadCap = 1ull << 22;
    {
        std::vector<uint64_t> inter(blocks_m.size() * blocks_n.size(), 0);
        for (int e = 0; e < n; ++e)
            ++inter[static_cast<size_t>(rm.block_of(e)) * blocks_n.size() +
                    static_cast<size_t>(rn.block_of(e))];
        uint64_t total = 0;
        for (int x = 0; x < n && total <= kQuadCap; ++x)
            for (int y : row_of(x)) {
                for (int z : col_of(x))
                    total += inter[static_cast<size_t>(rm.block_of(y)) * blocks_n.size() +
                                   static_cast<size_t>(rn.block_of(z))];
                if (total > kQuadCap) break;
            }
        if (total > kQuadCap)
            throw BoundError("quad_filter: double relation exceeds " + std::to_string(kQuadCap) +
                             " quadruples");
    }
    auto quads_for_x = [&](int x, std::vector<uint64_t>& out) {
        // Ascending y, z, t gives ascending packed values for fixed x.
        for (int y : row_of(x))
            for (int z : col_of(x))
                for (int t : row_of(z))
                    if (rm.same(y, t)) {
                        int comps[4] = {x, y, z, t};
                        out.push_back(PowerSubalgebra::pack(comps));
                    }
    };

#ifdef ALGLAB_HAVE_OPENMP
    if (exec == Exec::parallel) {
        std::vector<std::vector<uint64_t>> per_x(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
        for (int x = 0; x < n; ++x) quads_for_x(x, per_x[static_cast<size_t>(x)]);
        std::vector<uint64_t> out;
        for (int x = 0; x < n; ++x)
            out.insert(out.end(), per_x[static_cast<size_t>(x)].begin(), per_x[static_cast<size_t>(x)].end());
        return out;
    }
#endif
    (void)exec;
    std::vector<uint64_t> out;
    for (int x = 0; x < n; ++x) quads_for_x(x, out);
    return out;
}

std::vector<int> word_values(const FiniteAlgebra& a, const CompiledTerm& w, WordPattern pattern,
                             const WordOps& ops, std::span<const int> xs, std::span<const int> ys,
                             Exec exec) {
    const int r = w.var_count;
    if (r > 8) throw BoundError("word_values: scheme word uses more than 8 variables");
    const bool unary = pattern == WordPattern::plain;
    const uint64_t xt = env_count(xs.size(), r);
    const uint64_t yt = unary ? 1 : env_count(ys.size(), r);
    if (xt != 0 && yt > std::numeric_limits<uint64_t>::max() / std::max<uint64_t>(xt, 1))
        throw BoundError("word_values: environment space overflows");
    guard_envs(xt * yt, "word_values");

    BitAcc acc(static_cast<uint64_t>(a.size()));
    auto inner = [&](uint64_t xflat, BitAcc& sink) {
        int xenv[8], yenv[8], penv[8];
        decode_env_from(xflat, xs, std::span<int>(xenv, static_cast<size_t>(r)));
        const std::span<const int> xe(xenv, static_cast<size_t>(r));
        if (unary) {
            sink.set(static_cast<uint64_t>(w.eval(a, xe)));
            return;
        }
        const int wx = w.eval(a, xe);
        for (uint64_t yflat = 0; yflat < yt; ++yflat) {
            decode_env_from(yflat, ys, std::span<int>(yenv, static_cast<size_t>(r)));
            const std::span<const int> ye(yenv, static_cast<size_t>(r));
            for (int i = 0; i < r; ++i) penv[i] = a.apply2(ops.mul, xenv[i], yenv[i]);
            const int wxy = w.eval(a, std::span<const int>(penv, static_cast<size_t>(r)));
            const int wy = w.eval(a, ye);
            int val = 0;
            switch (pattern) {
                case WordPattern::triple_group:
                    val = a.apply2(ops.mul, a.apply2(ops.mul, wxy, a.apply1(ops.inv, wy)),
                                   a.apply1(ops.inv, wx));
                    break;
                case WordPattern::triple_loop:
                    val = a.apply2(ops.rdiv, a.apply2(ops.rdiv, wxy, wy), wx);
                    break;
                case WordPattern::pair_group:
                    val = a.apply2(ops.mul, wxy, a.apply1(ops.inv, wy));
                    break;
                case WordPattern::pair_loop:
                    val = a.apply2(ops.rdiv, wxy, wy);
                    break;
                case WordPattern::plain:
                    break;
            }
            sink.set(static_cast<uint64_t>(val));
        }
    };

#ifdef ALGLAB_HAVE_OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            BitAcc local(static_cast<uint64_t>(a.size()));
#pragma omp for schedule(static) nowait
            for (long long xflat = 0; xflat < static_cast<long long>(xt); ++xflat)
                inner(static_cast<uint64_t>(xflat), local);
#pragma omp critical
            acc.merge(local);
        }
        std::vector<int> out;
        acc.for_each_set([&](uint64_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }
#endif
    (void)exec;
    for (uint64_t xflat = 0; xflat < xt; ++xflat) inner(xflat, acc);
    std::vector<int> out;
    acc.for_each_set([&](uint64_t i) { out.push_back(static_cast<int>(i)); });
    return out;
}

}  // namespace alglab
