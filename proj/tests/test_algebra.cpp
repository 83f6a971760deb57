#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/catalog.hpp"
#include "alglab/error.hpp"

using namespace alglab;

namespace {

std::string msg_of(const std::exception& e) { return e.what(); }

AlgebraPtr tiny_group(bool with_hint) {
    Signature sig({{"mul", 2}, {"inv", 1}, {"1", 0}}, "1");
    std::vector<int> mul(16), inv(4);
    for (int i = 0; i < 4; ++i) {
        inv[static_cast<size_t>(i)] = (4 - i) % 4;
        for (int j = 0; j < 4; ++j) mul[static_cast<size_t>(i) * 4 + j] = (i + j) % 4;
    }
    std::optional<GroupOps> hint;
    if (with_hint) hint = GroupOps{0, 1};
    return make_algebra("c4", sig, {"0", "1", "2", "3"}, 0, {mul, inv, {0}}, hint);
}

}  // namespace

TEST_CASE("signature admits exactly one constant") {
    CHECK_THROWS_AS(Signature({{"mul", 2}}, "1"), ValidationError);
    CHECK_THROWS_AS(Signature({{"1", 0}, {"e", 0}}, "1"), ValidationError);
    Signature sig({{"mul", 2}, {"1", 0}}, "1");
    CHECK(sig.unit_symbol() == "1");
    CHECK(sig.find("mul") == 0);
    CHECK(sig.find("nope") == -1);
}

TEST_CASE("table validation names the operation") {
    Signature sig({{"mul", 2}, {"1", 0}}, "1");
    try {
        make_algebra("bad", sig, {"e", "a"}, 0, {{0, 1, 1, 9}, {0}});
        FAIL("out-of-range entry accepted");
    } catch (const ValidationError& e) {
        CHECK(msg_of(e).find("mul") != std::string::npos);
    }
    CHECK_THROWS_AS(make_algebra("bad", sig, {"e", "e"}, 0, {{0, 1, 1, 0}, {0}}),
                    ValidationError);
}

TEST_CASE("group structure is detected without a hint") {
    AlgebraPtr with = tiny_group(true);
    AlgebraPtr without = tiny_group(false);
    REQUIRE(with->group_ops().has_value());
    REQUIRE(without->group_ops().has_value());
    CHECK(without->group_ops()->mul == 0);
    CHECK(without->group_ops()->inv == 1);
}

TEST_CASE("element lookup reports the missing name") {
    AlgebraPtr a = catalog_algebra("s3");
    CHECK(a->element_by_name("(123)") >= 0);
    try {
        a->element_by_name("(14)");
        FAIL("unknown element accepted");
    } catch (const ValidationError& e) {
        CHECK(msg_of(e).find("(14)") != std::string::npos);
    }
}

TEST_CASE("terms print and parse back") {
    AlgebraPtr a = catalog_algebra("q8");
    const Signature& sig = a->signature();
    for (const char* src : {"x0", "1", "inv(x1)", "mul(mul(x0,x1),inv(x0))",
                            "mul( x0 , mul(x1, 1) )"}) {
        Term t = parse_term(src, sig);
        CHECK(parse_term(print_term(t), sig) == t);
    }
    CHECK(print_term(parse_term("mul( x0,1 )", sig)) == "mul(x0,1)");
    CHECK_THROWS_AS(parse_term("mul(x0)", sig), ValidationError);   // arity
    CHECK_THROWS_AS(parse_term("frob(x0,x1)", sig), ValidationError);
    CHECK_THROWS_AS(parse_term("mul(x0,x1))", sig), ValidationError);
    // The structure-only parser accepts foreign symbols; arities are the
    // consumer's problem.
    CHECK(parse_term("frob(x0,x1)").symbol == "frob");
}

TEST_CASE("term evaluation matches the tables") {
    AlgebraPtr a = catalog_algebra("q8");
    const Signature& sig = a->signature();
    Term comm = parse_term("mul(mul(mul(x0,x1),inv(x0)),inv(x1))", sig);
    int i = a->element_by_name("i"), j = a->element_by_name("j");
    std::vector<int> env{i, j};
    // [i,j] = i j (-i) (-j) = -1 in the quaternions
    CHECK(eval_term(comm, *a, env) == a->element_by_name("-1"));
    CompiledTerm c = CompiledTerm::compile(comm, sig);
    CHECK(c.eval(*a, env) == a->element_by_name("-1"));
}

TEST_CASE("satisfaction and violations") {
    VarietySpec ab = catalog_variety("ab");
    CHECK(satisfies(*catalog_algebra("z6"), ab.identities));
    CHECK(satisfies(*catalog_algebra("z2cube"), ab.identities));
    CHECK_FALSE(satisfies(*catalog_algebra("s3"), ab.identities));
    auto v = find_violation(*catalog_algebra("s3"), ab.identities);
    REQUIRE(v.has_value());
    // the reported environment really is a counterexample
    AlgebraPtr s3 = catalog_algebra("s3");
    Term lhs = ab.identities[0].lhs, rhs = ab.identities[0].rhs;
    CHECK(eval_term(lhs, *s3, v->env) != eval_term(rhs, *s3, v->env));
}

TEST_CASE("hom_check validates and reports") {
    AlgebraPtr z4 = catalog_algebra("z4");
    AlgebraPtr z2 = catalog_algebra("z2");
    Homomorphism q = hom_check(z4, z2, {0, 1, 0, 1});
    CHECK(q.is_surjective());
    CHECK_FALSE(q.is_injective());
    try {
        hom_check(z4, z2, {0, 0, 1, 0});
        FAIL("non-homomorphism accepted");
    } catch (const ValidationError& e) {
        CHECK(msg_of(e).find("mul") != std::string::npos);
    }
    CHECK_THROWS_AS(hom_check(z4, z2, {1, 0, 1, 0}), ValidationError);  // unit moves
}

TEST_CASE("products pair the factors") {
    AlgebraPtr z2 = catalog_algebra("z2");
    AlgebraPtr z4 = catalog_algebra("z4");
    ProductResult p = product(z2, z4);
    CHECK(p.algebra->size() == 8);
    CHECK(p.algebra->unit() == 0);
    CHECK(p.proj0.is_surjective());
    CHECK(p.proj1.is_surjective());
    for (int e = 0; e < 8; ++e) {
        CHECK(p.proj0(e) == e / 4);
        CHECK(p.proj1(e) == e % 4);
    }
    REQUIRE(p.algebra->group_ops().has_value());
    Homomorphism diag = pair_into_product(p, identity_hom(z2), hom_check(z2, z4, {0, 2}));
    CHECK(diag(1) == 1 * 4 + 2);
}

TEST_CASE("generated subalgebras") {
    AlgebraPtr s3 = catalog_algebra("s3");
    int t = s3->element_by_name("(12)");
    std::vector<int> gens{t};
    std::vector<int> sub = subalgebra_generate(*s3, gens);
    CHECK(sub == std::vector<int>{0, t});
    SubalgebraResult r = subalgebra(s3, sub);
    CHECK(r.algebra->size() == 2);
    CHECK(r.inclusion.is_injective());
    int r3 = s3->element_by_name("(123)");
    std::vector<int> gens2{t, r3};
    CHECK(subalgebra_generate(*s3, gens2).size() == 6);
}

TEST_CASE("composition of homomorphisms") {
    AlgebraPtr z4 = catalog_algebra("z4");
    AlgebraPtr z2 = catalog_algebra("z2");
    Homomorphism q = hom_check(z4, z2, {0, 1, 0, 1});
    Homomorphism h = compose(q, identity_hom(z4));
    CHECK(h.map == q.map);
    CHECK_THROWS_AS(compose(identity_hom(z4), q), ValidationError);  // codomain mismatch
}
