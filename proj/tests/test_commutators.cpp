#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/catalog.hpp"
#include "alglab/commutators.hpp"
#include "alglab/congruence.hpp"
#include "alglab/error.hpp"
#include "alglab/extensions.hpp"

using namespace alglab;

namespace {

std::vector<int> names_to_ids(const AlgebraPtr& a, const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const std::string& n : names) out.push_back(a->element_by_name(n));
    std::sort(out.begin(), out.end());
    return out;
}

NormalSubobject sub(const AlgebraPtr& a, const std::vector<std::string>& names) {
    return NormalSubobject::make(a, names_to_ids(a, names));
}

NormalSubobject whole(const AlgebraPtr& a) {
    std::vector<int> all(static_cast<size_t>(a->size()));
    for (int i = 0; i < a->size(); ++i) all[static_cast<size_t>(i)] = i;
    return NormalSubobject{a, std::move(all)};
}

}  // namespace

TEST_CASE("abelianisation commutators of the catalog groups") {
    VarietySpec ab = catalog_variety("ab");
    AlgebraPtr s3 = catalog_algebra("s3");
    CHECK(commutator_categorical(s3, whole(s3), whole(s3), ab).members ==
          names_to_ids(s3, {"e", "(123)", "(132)"}));
    AlgebraPtr d4 = catalog_algebra("d4");
    CHECK(commutator_categorical(d4, whole(d4), whole(d4), ab).members ==
          names_to_ids(d4, {"e", "r2"}));
    // [<r>, D4] = <r^2> as well: [r, s] = r^2
    CHECK(commutator_categorical(d4, sub(d4, {"e", "r", "r2", "r3"}), whole(d4), ab).members ==
          names_to_ids(d4, {"e", "r2"}));
    // inside the abelian subgroup <r> everything commutes
    CHECK(commutator_categorical(d4, sub(d4, {"e", "r", "r2", "r3"}), sub(d4, {"e", "r2"}), ab)
              .members == names_to_ids(d4, {"e"}));
    AlgebraPtr q8 = catalog_algebra("q8");
    CHECK(commutator_categorical(q8, whole(q8), whole(q8), ab).members ==
          names_to_ids(q8, {"1", "-1"}));
    CHECK(commutator_categorical(q8, sub(q8, {"1", "-1"}), whole(q8), ab).members ==
          names_to_ids(q8, {"1"}));
    AlgebraPtr z12 = catalog_algebra("z12");
    CHECK(commutator_categorical(z12, whole(z12), whole(z12), ab).in_join.is_unit_only());
}

TEST_CASE("one dimensional commutator of the whole is the radical") {
    for (const char* an : {"s3", "d4", "q8", "z6"}) {
        AlgebraPtr a = catalog_algebra(an);
        for (const char* bn : {"ab", "nil2", "triv"}) {
            VarietySpec b = catalog_variety(bn);
            CHECK(commutator_categorical(a, whole(a), whole(a), b).members ==
                  radical(a, b).radical.members);
        }
    }
}

TEST_CASE("the zero variety gives the meet") {
    VarietySpec triv = catalog_variety("triv");
    AlgebraPtr d4 = catalog_algebra("d4");
    NormalSubobject r = sub(d4, {"e", "r", "r2", "r3"});
    NormalSubobject s2 = sub(d4, {"e", "r2", "s", "r2s"});
    CHECK(commutator_categorical(d4, r, s2, triv).members == names_to_ids(d4, {"e", "r2"}));
}

TEST_CASE("the loop associator fills the simple loop") {
    AlgebraPtr l5 = catalog_algebra("l5");
    VarietySpec gp = catalog_variety("gp-in-loops");
    CHECK(commutator_categorical(l5, whole(l5), whole(l5), gp).members.size() == 5);
    CHECK(commutator_categorical(l5, whole(l5), sub(l5, {"1"}), gp).in_join.is_unit_only());
    VarietySpec triv = catalog_variety("triv");
    CHECK(commutator_categorical(l5, whole(l5), whole(l5), triv).members.size() == 5);
}

TEST_CASE("word and categorical routes agree on groups") {
    VarietySpec ab = catalog_variety("ab");
    for (const char* an : {"s3", "d4", "q8"}) {
        AlgebraPtr a = catalog_algebra(an);
        for (const NormalSubobject& m : normals_enumerate(a))
            for (const NormalSubobject& n : normals_enumerate(a)) {
                CHECK(commutator_words(a, m, n, ab.word_scheme).members ==
                      commutator_categorical(a, m, n, ab).members);
            }
    }
}

TEST_CASE("word route needs a scheme and a compatible signature") {
    AlgebraPtr z4 = catalog_algebra("z4");
    VarietySpec nil2 = catalog_variety("nil2");  // ships no scheme
    CHECK(nil2.word_scheme.empty());
    CHECK_THROWS_AS(commutator_words(z4, whole(z4), whole(z4), nil2.word_scheme),
                    ValidationError);
}

TEST_CASE("froehlich and higgins agree with the kernel commutator") {
    VarietySpec ab = catalog_variety("ab");
    AlgebraPtr s3 = catalog_algebra("s3");
    NormalSubobject a3 = sub(s3, {"e", "(123)", "(132)"});
    Homomorphism q = quotient(s3, congruence_of_normal(a3)).proj;
    FroehlichValue f = froehlich_commutator(q, ab);
    // [A3, S3] = A3: conjugating (123) by a transposition inverts it
    CHECK(f.value.members == a3.members);
    REQUIRE(f.word_value.has_value());
    CHECK(*f.word_value == a3.members);
    HigginsValue h = higgins_commutator(s3, a3, whole(s3), 2);
    CHECK(h.value.members == a3.members);
    CHECK(h.converged);
}

TEST_CASE("huq oracle matches the categorical value") {
    VarietySpec ab = catalog_variety("ab");
    AlgebraPtr d4 = catalog_algebra("d4");
    NormalSubobject r = sub(d4, {"e", "r", "r2", "r3"});
    NormalSubobject s2 = sub(d4, {"e", "r2", "s", "r2s"});
    CHECK(huq_commutator(d4, r, s2).members == names_to_ids(d4, {"e", "r2"}));
    CHECK_FALSE(huq_commute_check(d4, r, s2));
    NormalSubobject c = sub(d4, {"e", "r2"});
    CHECK(huq_commute_check(d4, r, c));
    CHECK(huq_commutator(d4, r, c).members == names_to_ids(d4, {"e"}));
}

TEST_CASE("smith commutator detects abelian quotient structure") {
    AlgebraPtr s3 = catalog_algebra("s3");
    NormalSubobject a3 = sub(s3, {"e", "(123)", "(132)"});
    Congruence ra = congruence_of_normal(a3);
    Congruence full = Congruence::full(s3);
    Congruence diag = Congruence::diagonal(s3);
    CHECK(smith_commutator(s3, full, full) == ra);
    CHECK(smith_commutator(s3, ra, ra) == diag);  // A3 is abelian
    CHECK(smith_commutator(s3, diag, full) == diag);
    CHECK(centralise_check(ra, ra));
    CHECK_FALSE(centralise_check(full, full));
    AlgebraPtr z12 = catalog_algebra("z12");
    Congruence f12 = Congruence::full(z12);
    CHECK(smith_commutator(z12, f12, f12) == Congruence::diagonal(z12));
}

TEST_CASE("enumeration limits surface as bound errors") {
    AlgebraPtr big = product(catalog_algebra("z12"), catalog_algebra("z6")).algebra;
    VarietySpec ab = catalog_variety("ab");
    // 72^4 quadruples exceed the filter cap
    CHECK_THROWS_AS(commutator_categorical(big, whole(big), whole(big), ab), BoundError);
}

TEST_CASE("serial and parallel commutators agree") {
    VarietySpec ab = catalog_variety("ab");
    AlgebraPtr d4 = catalog_algebra("d4");
    for (const NormalSubobject& m : normals_enumerate(d4)) {
        CHECK(commutator_categorical(d4, m, whole(d4), ab, Exec::serial).members ==
              commutator_categorical(d4, m, whole(d4), ab, Exec::parallel).members);
    }
    AlgebraPtr l5 = catalog_algebra("l5");
    VarietySpec gp = catalog_variety("gp-in-loops");
    CHECK(commutator_categorical(l5, whole(l5), whole(l5), gp, Exec::serial).members ==
          commutator_categorical(l5, whole(l5), whole(l5), gp, Exec::parallel).members);
}

TEST_CASE("the abelian variety of a signature") {
    AlgebraPtr z4 = catalog_algebra("z4");
    VarietySpec ab_group = ab_variety_for(z4->signature());
    CHECK(is_abelian_spec(ab_group, z4->signature()));
    CHECK(is_abelian_spec(catalog_variety("ab"), z4->signature()));
    CHECK_FALSE(is_abelian_spec(catalog_variety("nil2"), z4->signature()));
    AlgebraPtr l5 = catalog_algebra("l5");
    VarietySpec ab_loop = ab_variety_for(l5->signature());
    CHECK(satisfies(*catalog_algebra("z6"), ab_group.identities));
    CHECK_FALSE(satisfies(*l5, ab_loop.identities));
}
