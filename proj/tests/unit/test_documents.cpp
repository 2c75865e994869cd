#include "documents.hpp"
#include "fixtures.hpp"

#include <craut/grading.hpp>

#include <doctest.h>

using namespace craut;
using doc::json;

TEST_CASE("matrix and polynomial documents agree")
{
    auto a = fixtures::model("quadric_d2");
    auto b = fixtures::model("quadric_d2_matrices");
    CHECK(a.canonical_form() == b.canonical_form());
    CHECK(doc::fingerprint(a) == doc::fingerprint(b));
    CHECK(doc::fingerprint(a) != doc::fingerprint(fixtures::model("heisenberg")));
    CHECK(doc::fingerprint(a).size() == 16);
}

TEST_CASE("schema errors")
{
    auto bad = [](const char* text) {
        CHECK_THROWS_AS(doc::model_from_json(json::parse(text)), doc::InputError);
    };
    bad(R"j({"blocks": [{"m": 2, "l": 1}], "P": ["z1*conj(z1)"]})j");
    bad(R"j({"n": 1, "blocks": [], "P": ["z1*conj(z1)"]})j");
    bad(R"j({"n": 1, "blocks": [{"m": 2, "l": 1}]})j");
    bad(R"j({"n": 1, "blocks": [{"m": 2, "l": 1}], "P": ["z1*conj(z1)"], "matrices": [[["1"]]]})j");
    bad(R"j({"n": 1, "blocks": [{"m": 2, "l": 1}], "P": ["z1*conj(z1)", "z1*conj(z1)"]})j");
    bad(R"j({"n": 1, "blocks": [{"m": 2, "l": 1}], "P": ["z1*conj(z1) + w1"]})j");
    bad(R"j({"n": 1, "blocks": [{"m": 1, "l": 1}], "P": ["z1*conj(z1)"]})j");
    bad(R"j({"n": "one", "blocks": [{"m": 2, "l": 1}], "P": ["z1*conj(z1)"]})j");
    bad(R"j([1, 2])j");
    CHECK_THROWS_AS(doc::load_model(fixtures::path("invalid/malformed.json")), doc::InputError);
    CHECK_THROWS_AS(doc::load_model(fixtures::path("missing.json")), doc::InputError);
    CHECK_THROWS_AS(doc::load_model(fixtures::path("invalid/pluriharmonic.json")), ModelError);

    auto h = fixtures::model("heisenberg");
    CHECK_THROWS_AS(doc::load_field(fixtures::path("fields/zbar_in_field.json"), h), doc::InputError);
    CHECK_THROWS_AS(doc::field_from_json(json::parse(R"j({"f": ["1", "2"], "g": ["0"]})j"), h), doc::InputError);
}

TEST_CASE("emitted bases parse back and stay tangent")
{
    auto e = fixtures::model("exa0");
    auto b = compute_G_mu(e, 1, false);
    for (const auto& x : b.fields) {
        json j = doc::field_to_json(x);
        auto y = doc::field_from_json(json::parse(j.dump()), e);
        CHECK(y == x);
        CHECK(is_in_aut(y, e));
    }
}

TEST_CASE("rationals are written as p/q")
{
    CHECK(doc::rational_text(Rational(-1)) == "-1/1");
    CHECK(doc::rational_text(Rational(3, 6)) == "1/2");
}
