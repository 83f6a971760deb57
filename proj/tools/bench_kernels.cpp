// Times each enumeration kernel in both execution modes on mid-sized
// workloads and checks that the two modes return identical results.  The
// parallel variants are written to be bit-identical to the serial reference,
// so any mismatch here is a bug, not noise.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/catalog.hpp"
#include "alglab/congruence.hpp"
#include "alglab/error.hpp"
#include "alglab/kernels.hpp"
#include "alglab/view.hpp"

using namespace alglab;

namespace {

int failures = 0;

template <class F>
auto timed(F&& f, double& ms) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

template <class F>
void bench(const char* name, F&& run) {
    double serial_ms = 0, parallel_ms = 0;
    auto s = timed([&] { return run(Exec::serial); }, serial_ms);
    auto p = timed([&] { return run(Exec::parallel); }, parallel_ms);
    bool same = s == p;
    if (!same) ++failures;
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                same ? "identical" : "MISMATCH");
}

PowerSubalgebra width1_view(const AlgebraPtr& a) {
    std::vector<uint64_t> elems(static_cast<size_t>(a->size()));
    std::iota(elems.begin(), elems.end(), 0);
    return PowerSubalgebra(a, 1, std::move(elems));
}

}  // namespace

int main() {
    AlgebraPtr z12 = catalog_algebra("z12");
    AlgebraPtr z6 = catalog_algebra("z6");
    AlgebraPtr s3 = catalog_algebra("s3");
    AlgebraPtr p144 = product(z12, z12).algebra;  // abelian, 144 elements
    AlgebraPtr p36 = product(z6, z6).algebra;     // abelian, 36 elements
    AlgebraPtr s36 = product(s3, s3).algebra;     // nonabelian, 36 elements

    VarietySpec nil2 = catalog_variety("nil2");   // one identity in three variables
    VarietySpec ab = catalog_variety("ab");

    std::printf("ground workloads: %d^3 and %d^2 environments, %d^4 quadruples\n\n", p144->size(),
                p144->size() * 12, p36->size());

    bench("violation_scan", [&](Exec e) {
        auto v = violation_scan(*p144, nil2.identities, e);
        return v.has_value();  // nil2 holds here, so both modes must report none
    });
    bench("instance_pairs", [&](Exec e) { return instance_pairs(*p144, nil2.identities, e); });

    // First-factor subgroup of the 144-element product; its kernel-pair view
    // has 1728 members, giving ~3M two-variable environments.
    {
        std::vector<int> mem;
        for (int i = 0; i < 12; ++i) mem.push_back(i * 12);
        std::sort(mem.begin(), mem.end());
        Congruence theta = congruence_of_normal(NormalSubobject::make(p144, std::move(mem)));
        PowerSubalgebra rel = relation_view(p144, theta);
        bench("instance_pairs (view)", [&](Exec e) { return instance_pairs(rel, ab.identities, e); });
    }

    {
        Congruence full6 = Congruence::full(p36);
        bench("quad_filter", [&](Exec e) { return quad_filter(*p36, full6, full6, e); });
    }

    {
        Term x0 = Term::variable(0), x1 = Term::variable(1);
        Term comm = Term::apply(
            "mul", {Term::apply("mul", {Term::apply("mul", {x0, x1}), Term::apply("inv", {x0})}),
                    Term::apply("inv", {x1})});
        CompiledTerm w = CompiledTerm::compile(comm, s36->signature());
        WordOps ops{s36->group_ops()->mul, s36->group_ops()->inv, -1};
        std::vector<int> all(static_cast<size_t>(s36->size()));
        std::iota(all.begin(), all.end(), 0);
        bench("word_values", [&](Exec e) {
            return word_values(*s36, w, WordPattern::triple_group, ops, all, all, e);
        });
    }

    {
        PowerSubalgebra v = width1_view(p144);
        std::vector<CompiledIdentity> ids = compile_identities(nil2.identities, p144->signature());
        std::vector<int> reps(static_cast<size_t>(p144->size()));
        std::iota(reps.begin(), reps.end(), 0);
        std::vector<char> in_v(static_cast<size_t>(p144->size()), 0);
        in_v[static_cast<size_t>(v.unit())] = 1;
        bench("defect_scan", [&](Exec e) {
            return defect_scan(v, *p144->group_ops(), ids, reps, in_v, e);
        });
    }

    if (failures) {
        std::printf("\n%d kernel(s) disagreed between modes\n", failures);
        return 1;
    }
    std::printf("\nall kernels agree between modes\n");
    return 0;
}
