#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/birkhoff.hpp"
#include "alglab/catalog.hpp"
#include "alglab/congruence.hpp"
#include "alglab/error.hpp"
#include "alglab/kernels.hpp"
#include "alglab/view.hpp"

using namespace alglab;

namespace {

Congruence normal_congruence(const AlgebraPtr& a, const std::vector<std::string>& names) {
    std::vector<int> ids;
    for (const auto& n : names) ids.push_back(a->element_by_name(n));
    return congruence_of_normal(NormalSubobject::make(a, ids));
}

PowerSubalgebra width1(const AlgebraPtr& a) {
    std::vector<uint64_t> elems(static_cast<size_t>(a->size()));
    std::iota(elems.begin(), elems.end(), 0);
    return PowerSubalgebra(a, 1, std::move(elems));
}

std::vector<int> all_of(const AlgebraPtr& a) {
    std::vector<int> xs(static_cast<size_t>(a->size()));
    std::iota(xs.begin(), xs.end(), 0);
    return xs;
}

}  // namespace

TEST_CASE("quad counts on the two block patterns") {
    // Complementary index-two subgroups: picking x, a row mate and a column
    // mate pins the fourth corner uniquely, so 4 * 2 * 2 * 1 quads.
    AlgebraPtr k4 = catalog_algebra("klein4");
    Congruence ra = normal_congruence(k4, {"e", "a"});
    Congruence rb = normal_congruence(k4, {"e", "b"});
    CHECK(quad_filter(*k4, ra, rb, Exec::serial).size() == 16);

    // Equal congruences: all four corners share one block of size three,
    // three of them free once x is chosen, so 6 * 3 * 3 * 3 quads.
    AlgebraPtr s3 = catalog_algebra("s3");
    Congruence r3 = normal_congruence(s3, {"e", "(123)", "(132)"});
    CHECK(quad_filter(*s3, r3, r3, Exec::serial).size() == 162);

    // The full congruence filters nothing.
    AlgebraPtr d4 = catalog_algebra("d4");
    Congruence full = Congruence::full(d4);
    CHECK(quad_filter(*d4, full, full, Exec::serial).size() == 4096);
}

TEST_CASE("violation scan finds the least witness and rechecks") {
    AlgebraPtr s3 = catalog_algebra("s3");
    VarietySpec ab = catalog_variety("ab");
    auto v = violation_scan(*s3, ab.identities, Exec::serial);
    REQUIRE(v.has_value());
    const Identity& id = ab.identities[static_cast<size_t>(v->identity)];
    CHECK(eval_term(id.lhs, *s3, v->env) != eval_term(id.rhs, *s3, v->env));

    AlgebraPtr z4 = catalog_algebra("z4");
    CHECK_FALSE(violation_scan(*z4, ab.identities, Exec::serial).has_value());
}

TEST_CASE("instance pairs generate the radical congruence") {
    AlgebraPtr s3 = catalog_algebra("s3");
    VarietySpec ab = catalog_variety("ab");
    auto pairs = instance_pairs(*s3, ab.identities, Exec::serial);
    CHECK(cg_generate(s3, pairs) == radical_congruence(s3, ab));
}

TEST_CASE("serial and parallel agree everywhere") {
    VarietySpec ab = catalog_variety("ab");
    VarietySpec nil2 = catalog_variety("nil2");
    AlgebraPtr p = product(catalog_algebra("z6"), catalog_algebra("s3")).algebra;

    auto vs = violation_scan(*p, nil2.identities, Exec::serial);
    auto vp = violation_scan(*p, nil2.identities, Exec::parallel);
    REQUIRE(vs.has_value() == vp.has_value());
    if (vs) {
        CHECK(vs->identity == vp->identity);
        CHECK(vs->env == vp->env);
    }

    CHECK(instance_pairs(*p, ab.identities, Exec::serial) ==
          instance_pairs(*p, ab.identities, Exec::parallel));

    AlgebraPtr z6 = catalog_algebra("z6");
    PowerSubalgebra rel = relation_view(z6, normal_congruence(z6, {"0", "3"}));
    CHECK(rel.size() == 12);
    CHECK(instance_pairs(rel, ab.identities, Exec::serial) ==
          instance_pairs(rel, ab.identities, Exec::parallel));

    AlgebraPtr s3 = catalog_algebra("s3");
    Congruence a3 = normal_congruence(s3, {"e", "(123)", "(132)"});
    CHECK(quad_filter(*s3, a3, a3, Exec::serial) == quad_filter(*s3, a3, a3, Exec::parallel));
    Congruence pf = Congruence::full(p);
    CHECK(quad_filter(*p, pf, pf, Exec::serial) == quad_filter(*p, pf, pf, Exec::parallel));
}

TEST_CASE("defect scan collects radical generators") {
    AlgebraPtr s3 = catalog_algebra("s3");
    VarietySpec nil2 = catalog_variety("nil2");
    auto compiled = compile_identities(nil2.identities, s3->signature());
    PowerSubalgebra g = width1(s3);
    std::vector<char> in_v(g.size(), 0);
    in_v[static_cast<size_t>(g.unit())] = 1;
    std::vector<int> reps = all_of(s3);

    auto ds = defect_scan(g, *s3->group_ops(), compiled, reps, in_v, Exec::serial);
    auto dp = defect_scan(g, *s3->group_ops(), compiled, reps, in_v, Exec::parallel);
    CHECK(ds == dp);
    REQUIRE_FALSE(ds.empty());
    // every defect of the class-two law on S3 lands in A3
    for (int m : ds) {
        int ground = static_cast<int>(g.elements()[static_cast<size_t>(m)]);
        std::string name = s3->element_name(ground);
        CHECK((name == "(123)" || name == "(132)"));
    }

    // D4 is nilpotent of class two, so no defects escape the unit.
    AlgebraPtr d4 = catalog_algebra("d4");
    auto c4 = compile_identities(nil2.identities, d4->signature());
    PowerSubalgebra gd = width1(d4);
    std::vector<char> unit_only(gd.size(), 0);
    unit_only[static_cast<size_t>(gd.unit())] = 1;
    CHECK(defect_scan(gd, *d4->group_ops(), c4, all_of(d4), unit_only, Exec::serial).empty());
}

TEST_CASE("word values enumerate commutators") {
    AlgebraPtr s3 = catalog_algebra("s3");
    const Signature& sig = s3->signature();
    CompiledTerm w = CompiledTerm::compile(parse_term("mul(mul(x0,x1),mul(inv(x0),inv(x1)))", sig), sig);
    WordOps ops{s3->group_ops()->mul, s3->group_ops()->inv, -1};
    std::vector<int> xs = all_of(s3);
    auto vals = word_values(*s3, w, WordPattern::plain, ops, xs, xs, Exec::serial);
    std::vector<int> a3 = {s3->element_by_name("e"), s3->element_by_name("(123)"),
                           s3->element_by_name("(132)")};
    std::sort(a3.begin(), a3.end());
    CHECK(vals == a3);
    CHECK(vals == word_values(*s3, w, WordPattern::plain, ops, xs, xs, Exec::parallel));

    auto tg = word_values(*s3, w, WordPattern::triple_group, ops, xs, xs, Exec::serial);
    CHECK(tg == word_values(*s3, w, WordPattern::triple_group, ops, xs, xs, Exec::parallel));
}

TEST_CASE("kernels refuse oversized enumerations") {
    CHECK(env_count(2, 3) == 8);
    CHECK(env_count(0, 2) == 0);
    CHECK(env_count(0, 0) == 1);
    CHECK(env_count(1u << 16, 5) == UINT64_MAX);  // saturates instead of wrapping

    // nine variables over twelve elements overflow the enumeration guard
    Term x0 = Term::variable(0);
    Term acc = x0;
    for (int i = 1; i < 9; ++i) acc = Term::apply("mul", {acc, Term::variable(i)});
    Identity wide{acc, x0};
    AlgebraPtr z12 = catalog_algebra("z12");
    std::vector<Identity> ids = {wide};
    CHECK_THROWS_AS(violation_scan(*z12, ids, Exec::serial), BoundError);
}

TEST_CASE("repeat calls are bit identical") {
    AlgebraPtr q8 = catalog_algebra("q8");
    VarietySpec ab = catalog_variety("ab");
    auto a = instance_pairs(*q8, ab.identities, Exec::parallel);
    auto b = instance_pairs(*q8, ab.identities, Exec::parallel);
    CHECK(a == b);
    Congruence f = Congruence::full(q8);
    CHECK(quad_filter(*q8, f, f, Exec::parallel) == quad_filter(*q8, f, f, Exec::parallel));
}
