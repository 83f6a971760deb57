#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "alglab/algebra.hpp"
#include "alglab/birkhoff.hpp"
#include "alglab/catalog.hpp"
#include "alglab/error.hpp"
#include "alglab/io.hpp"

using namespace alglab;

namespace {

bool throws_containing(const std::function<void()>& f, const std::string& needle) {
    try {
        f();
    } catch (const ValidationError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("algebra json round trips for the whole catalog") {
    for (const std::string& name : catalog_algebra_names()) {
        AlgebraPtr a = catalog_algebra(name);
        AlgebraPtr b = algebra_from_json(algebra_to_json(*a));
        CHECK(b->name() == a->name());
        CHECK(b->size() == a->size());
        for (int i = 0; i < a->size(); ++i) CHECK(b->element_name(i) == a->element_name(i));
        CHECK(b->unit() == a->unit());
        CHECK(b->signature() == a->signature());
        CHECK(b->group_ops().has_value() == a->group_ops().has_value());
        // a second pass must reproduce the text exactly
        CHECK(algebra_to_json(*b) == algebra_to_json(*a));
    }
}

TEST_CASE("missing constants are filled in") {
    std::string text = R"({
        "name": "c2",
        "size": 2,
        "elements": ["e", "g"],
        "unit": "e",
        "operations": {"mul": {"arity": 2, "table": [["e","g"],["g","e"]]}}
    })";
    AlgebraPtr a = algebra_from_json(text);
    CHECK(a->signature().op_count() == 2);
    CHECK(a->signature().unit_symbol() == "1");
    CHECK(a->element_name(a->unit()) == "e");
    // no unary inverse listed, so no designated group structure
    CHECK_FALSE(a->group_ops().has_value());

    // an explicit constant keeps its own symbol
    std::string named = R"({
        "name": "c2",
        "size": 2,
        "elements": ["e", "g"],
        "unit": "e",
        "operations": {"mul": {"arity": 2, "table": [["e","g"],["g","e"]]},
                       "id": {"arity": 0, "table": "e"}}
    })";
    CHECK(algebra_from_json(named)->signature().unit_symbol() == "id");
}

TEST_CASE("variety json round trips") {
    for (const std::string& name : catalog_variety_names()) {
        VarietySpec b = catalog_variety(name);
        VarietySpec c = variety_from_json(variety_to_json(b));
        CHECK(c.name == b.name);
        REQUIRE(c.identities.size() == b.identities.size());
        for (size_t i = 0; i < b.identities.size(); ++i) {
            CHECK(c.identities[i].lhs == b.identities[i].lhs);
            CHECK(c.identities[i].rhs == b.identities[i].rhs);
        }
        CHECK(c.word_scheme == b.word_scheme);
    }
}

TEST_CASE("foreign symbols parse and fail only on application") {
    std::string text = R"json({
        "name": "frobful",
        "identities": [{"lhs": "frob(x0,x1)", "rhs": "1"}]
    })json";
    VarietySpec b = variety_from_json(text);
    CHECK(b.identities.size() == 1);
    CHECK(b.identities[0].lhs.symbol == "frob");
    AlgebraPtr z2 = catalog_algebra("z2");
    CHECK_FALSE(variety_applies(b, z2->signature()));
    CHECK(throws_containing([&] { validate_variety(b, z2->signature()); }, "frob"));
}

TEST_CASE("loader errors name the offence") {
    CHECK(throws_containing([] { load_algebra("definitely_missing.json"); },
                            "definitely_missing.json"));
    std::string base = R"({"name":"x","size":2,"elements":["e","g"],"unit":"e",)";
    CHECK(throws_containing(
        [&] { algebra_from_json(base + R"("operations":{"mul":{"arity":2,"table":[["e","g","e"],["g","e","g"]]}}})"); },
        "table row"));
    CHECK(throws_containing(
        [] { algebra_from_json(R"({"name":"x","size":2,"elements":["e","e"],"unit":"e","operations":{}})"); },
        "duplicate element name 'e'"));
    CHECK(throws_containing(
        [] { algebra_from_json(R"({"name":"x","size":2,"elements":["e","g"],"unit":"q","operations":{}})"); },
        "unit 'q'"));
    CHECK(throws_containing(
        [&] { algebra_from_json(base + R"("operations":{"mul":{"arity":2,"table":[["e","z"],["g","e"]]}}})"); },
        "unknown element 'z'"));
    CHECK(throws_containing(
        [] { variety_from_json(R"({"name":"x","identities":[{"lhs":"mul(x0","rhs":"1"}]})"); },
        "mul(x0"));
}

TEST_CASE("files written to disk load back unchanged") {
    AlgebraPtr s3 = catalog_algebra("s3");
    save_algebra(*s3, "io_test_tmp_alg.json");
    AlgebraPtr back = load_algebra("io_test_tmp_alg.json");
    CHECK(algebra_to_json(*back) == algebra_to_json(*s3));
    std::remove("io_test_tmp_alg.json");

    VarietySpec ab = catalog_variety("ab");
    save_variety(ab, "io_test_tmp_var.json");
    VarietySpec vb = load_variety("io_test_tmp_var.json");
    CHECK(variety_to_json(vb) == variety_to_json(ab));
    std::remove("io_test_tmp_var.json");
}
