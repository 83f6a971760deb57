#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/birkhoff.hpp"
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

TEST_CASE("variety validation names the offending identity") {
    AlgebraPtr l5 = catalog_algebra("l5");
    VarietySpec ab = catalog_variety("ab");
    CHECK_FALSE(variety_applies(ab, l5->signature()));  // the scheme uses inv
    try {
        validate_variety(ab, l5->signature());
        FAIL("mismatched signature accepted");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("inv") != std::string::npos);
    }
    CHECK(variety_applies(catalog_variety("gp-in-loops"), l5->signature()));
    CHECK_FALSE(variety_applies(catalog_variety("gp-in-loops"),
                                catalog_algebra("z4")->signature()));
}

TEST_CASE("abelianisation radicals are the derived subgroups") {
    VarietySpec ab = catalog_variety("ab");
    auto radical_names = [&](const char* name) {
        AlgebraPtr a = catalog_algebra(name);
        return radical(a, ab).radical.member_names();
    };
    CHECK(radical_names("z4") == std::vector<std::string>{"0"});
    CHECK(radical_names("z2cube") == std::vector<std::string>{"000"});
    AlgebraPtr s3 = catalog_algebra("s3");
    CHECK(radical(s3, ab).radical.members == names_to_ids(s3, {"e", "(123)", "(132)"}));
    AlgebraPtr d4 = catalog_algebra("d4");
    CHECK(radical(d4, ab).radical.members == names_to_ids(d4, {"e", "r2"}));
    AlgebraPtr q8 = catalog_algebra("q8");
    CHECK(radical(q8, ab).radical.members == names_to_ids(q8, {"1", "-1"}));
}

TEST_CASE("class-two groups have trivial nil2 radical") {
    VarietySpec nil2 = catalog_variety("nil2");
    CHECK(radical(catalog_algebra("d4"), nil2).radical.is_unit_only());
    CHECK(radical(catalog_algebra("q8"), nil2).radical.is_unit_only());
    AlgebraPtr s3 = catalog_algebra("s3");
    CHECK(radical(s3, nil2).radical.members == names_to_ids(s3, {"e", "(123)", "(132)"}));
}

TEST_CASE("the zero variety absorbs everything") {
    VarietySpec triv = catalog_variety("triv");
    for (const char* name : {"z2", "s3", "l5"}) {
        Reflection r = radical(catalog_algebra(name), triv);
        CHECK(r.radical.is_whole());
        CHECK(r.reflected->size() == 1);
    }
}

TEST_CASE("a simple nonassociative loop reflects trivially into groups") {
    AlgebraPtr l5 = catalog_algebra("l5");
    VarietySpec gp = catalog_variety("gp-in-loops");
    CHECK_FALSE(satisfies(*l5, gp.identities));
    Reflection r = radical(l5, gp);
    CHECK(r.radical.is_whole());
    CHECK(r.reflected->size() == 1);
}

TEST_CASE("reflection lands in the subvariety and is idempotent") {
    for (const char* an : {"z12", "s3", "d4", "q8"}) {
        AlgebraPtr a = catalog_algebra(an);
        for (const char* bn : {"ab", "nil2", "triv"}) {
            VarietySpec b = catalog_variety(bn);
            Reflection r = radical(a, b);
            CHECK(satisfies(*r.reflected, b.identities));
            CHECK(r.unit_map.is_surjective());
            CHECK(kernel(r.unit_map).members == r.radical.members);
            CHECK(radical(r.reflected, b).radical.is_unit_only());
        }
    }
}

TEST_CASE("radical congruence is the least one reaching the subvariety") {
    AlgebraPtr d4 = catalog_algebra("d4");
    VarietySpec ab = catalog_variety("ab");
    Congruence rc = radical_congruence(d4, ab);
    for (const Congruence& theta : congruence_lattice(d4)) {
        bool lands = satisfies(*quotient(d4, theta).algebra, ab.identities);
        CHECK(lands == rc.refines(theta));
    }
}

TEST_CASE("radical restrictions of surjections stay surjective") {
    VarietySpec ab = catalog_variety("ab");
    AlgebraPtr s3 = catalog_algebra("s3");
    NormalSubobject a3 = NormalSubobject::make(s3, names_to_ids(s3, {"e", "(123)", "(132)"}));
    Homomorphism q = quotient(s3, congruence_of_normal(a3)).proj;
    CHECK(birkhoff_square_check(q, ab));
    Homomorphism rh = radical_hom(q, ab);
    CHECK(rh.domain->size() == 3);   // the radical of s3
    CHECK(rh.codomain->size() == 1); // the radical of z2
    CHECK(rh.is_surjective());
}

TEST_CASE("serial and parallel radicals agree") {
    for (const char* an : {"z12", "d4", "l5"}) {
        AlgebraPtr a = catalog_algebra(an);
        for (const char* bn : {"ab", "triv"}) {
            if (std::string(bn) == "ab" && !a->group_ops()) continue;
            VarietySpec b = catalog_variety(bn);
            CHECK(radical_congruence(a, b, Exec::serial) ==
                  radical_congruence(a, b, Exec::parallel));
        }
    }
}
