#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/catalog.hpp"
#include "alglab/congruence.hpp"
#include "alglab/error.hpp"

using namespace alglab;

namespace {

std::vector<int> names_to_ids(const AlgebraPtr& a, const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const std::string& n : names) out.push_back(a->element_by_name(n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("generated congruence on the Klein four group") {
    AlgebraPtr k4 = catalog_algebra("klein4");
    std::pair<int, int> p{0, k4->element_by_name("a")};
    Congruence theta = cg_generate(k4, {&p, 1});
    CHECK(theta.is_congruence());
    CHECK(theta.block_count() == 2);
    CHECK(theta.same(k4->element_by_name("b"), k4->element_by_name("c")));
    CHECK(theta.unit_class() == names_to_ids(k4, {"e", "a"}));
    CHECK(Congruence::diagonal(k4).refines(theta));
    CHECK(theta.refines(Congruence::full(k4)));
    CHECK_FALSE(Congruence::full(k4).refines(theta));
}

TEST_CASE("congruence lattice sizes over the catalog") {
    // groups: one congruence per normal subgroup; the order-5 loop is simple
    const std::pair<const char*, int> expected[] = {
        {"z2", 2},  {"z4", 3},  {"z6", 4},     {"z12", 6}, {"klein4", 5},
        {"d4", 6},  {"q8", 6},  {"z2cube", 16}, {"s3", 3},  {"l5", 2},
    };
    for (auto [name, count] : expected) {
        AlgebraPtr a = catalog_algebra(name);
        CHECK_MESSAGE(static_cast<int>(congruence_lattice(a).size()) == count, name);
        CHECK_MESSAGE(static_cast<int>(normals_enumerate(a).size()) == count, name);
    }
    CHECK_THROWS_AS(congruence_lattice(catalog_algebra("z12"), 4), BoundError);
}

TEST_CASE("normal subobjects validate the ideal condition") {
    AlgebraPtr s3 = catalog_algebra("s3");
    CHECK_THROWS_AS(NormalSubobject::make(s3, names_to_ids(s3, {"e", "(12)"})),
                    ValidationError);
    NormalSubobject a3 = NormalSubobject::make(s3, names_to_ids(s3, {"e", "(123)", "(132)"}));
    CHECK(a3.contains(s3->element_by_name("(132)")));
    CHECK_FALSE(a3.is_whole());
    // closure of a transposition is everything
    int t = s3->element_by_name("(13)");
    CHECK(normal_closure(s3, {&t, 1}).is_whole());
}

TEST_CASE("quotients and kernel pairs invert each other") {
    AlgebraPtr z12 = catalog_algebra("z12");
    for (const Congruence& theta : congruence_lattice(z12)) {
        QuotientResult q = quotient(z12, theta);
        CHECK(q.proj.is_surjective());
        CHECK(kernel_pair(q.proj) == theta);
        CHECK(q.algebra->size() == theta.block_count());
        CHECK(kernel(q.proj).members == theta.unit_class());
    }
}

TEST_CASE("quotient of the quaternions by the center") {
    AlgebraPtr q8 = catalog_algebra("q8");
    NormalSubobject center = NormalSubobject::make(q8, names_to_ids(q8, {"1", "-1"}));
    QuotientResult q = quotient(q8, congruence_of_normal(center));
    CHECK(q.algebra->size() == 4);
    // Q8 / {±1} is the Klein four group: every nonunit element squares to 1
    REQUIRE(q.algebra->group_ops().has_value());
    int mul = q.algebra->group_ops()->mul;
    for (int x = 0; x < 4; ++x) CHECK(q.algebra->apply2(mul, x, x) == q.algebra->unit());
}

TEST_CASE("join and meet of normal subobjects") {
    AlgebraPtr d4 = catalog_algebra("d4");
    NormalSubobject r = NormalSubobject::make(d4, names_to_ids(d4, {"e", "r", "r2", "r3"}));
    NormalSubobject s2 = NormalSubobject::make(d4, names_to_ids(d4, {"e", "r2", "s", "r2s"}));
    CHECK(meet_normal(r, s2).members == names_to_ids(d4, {"e", "r2"}));
    CHECK(join_normal(r, s2).is_whole());
    AlgebraPtr k4 = catalog_algebra("klein4");
    NormalSubobject ka = NormalSubobject::make(k4, names_to_ids(k4, {"e", "a"}));
    NormalSubobject kb = NormalSubobject::make(k4, names_to_ids(k4, {"e", "b"}));
    CHECK(meet_normal(ka, kb).is_unit_only());
    CHECK(join_normal(ka, kb).is_whole());
}

TEST_CASE("direct images under quotient maps") {
    AlgebraPtr d4 = catalog_algebra("d4");
    NormalSubobject center = NormalSubobject::make(d4, names_to_ids(d4, {"e", "r2"}));
    QuotientResult q = quotient(d4, congruence_of_normal(center));
    NormalSubobject r = NormalSubobject::make(d4, names_to_ids(d4, {"e", "r", "r2", "r3"}));
    NormalSubobject img = direct_image(q.proj, r);
    CHECK(img.members.size() == 2);
    CHECK(img.algebra.get() == q.algebra.get());
}

TEST_CASE("congruence operations agree with the lattice") {
    AlgebraPtr z12 = catalog_algebra("z12");
    std::vector<Congruence> cl = congruence_lattice(z12);
    for (const Congruence& a : cl)
        for (const Congruence& b : cl) {
            Congruence m = meet_congruence(a, b);
            Congruence j = join_congruence(a, b);
            CHECK(m.refines(a));
            CHECK(m.refines(b));
            CHECK(a.refines(j));
            CHECK(b.refines(j));
            CHECK(std::count(cl.begin(), cl.end(), m) == 1);
            CHECK(std::count(cl.begin(), cl.end(), j) == 1);
        }
}

TEST_CASE("three by three grid constructs on the dihedral group") {
    AlgebraPtr d4 = catalog_algebra("d4");
    NormalSubobject r = NormalSubobject::make(d4, names_to_ids(d4, {"e", "r", "r2", "r3"}));
    NormalSubobject s2 = NormalSubobject::make(d4, names_to_ids(d4, {"e", "r2", "s", "r2s"}));
    CHECK_NOTHROW(three_by_three(d4, r, s2));
    AlgebraPtr k4 = catalog_algebra("klein4");
    NormalSubobject ka = NormalSubobject::make(k4, names_to_ids(k4, {"e", "a"}));
    NormalSubobject kb = NormalSubobject::make(k4, names_to_ids(k4, {"e", "b"}));
    CHECK_NOTHROW(three_by_three(k4, ka, kb));
}

TEST_CASE("relation views carry the congruence") {
    AlgebraPtr z6 = catalog_algebra("z6");
    NormalSubobject n = NormalSubobject::make(z6, {0, 3});
    Congruence theta = congruence_of_normal(n);
    PowerSubalgebra rel = relation_view(z6, theta);
    CHECK(rel.size() == 12);  // six fibres of size two, squared then summed
    CHECK(rel.width() == 2);
    CHECK(rel.component(rel.unit(), 0) == 0);
    CHECK(rel.component(rel.unit(), 1) == 0);
}
