#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlat/catalog.hpp"
#include "ringlat/serialize.hpp"

using namespace ringlat;

TEST_CASE("field roundtrip") {
    for (auto field : {Field::gf(2), Field::gf(3, 2), Field::gf(2, 4)}) {
        FieldPtr back = field_from_json(field_to_json(field));
        CHECK(back->kind() == Field::Kind::GF);
        CHECK(back->characteristic() == field->characteristic());
        CHECK(back->order() == field->order());
    }
    auto rf = Field::rf(Field::gf(2, 2), "t");
    auto rf2 = Field::rf(rf, "u");
    for (auto field : {rf, rf2}) {
        FieldPtr back = field_from_json(field_to_json(field));
        CHECK(back->kind() == Field::Kind::RF);
        CHECK(!back->isFinite());
        // a scalar built in the original field survives a roundtrip through
        // the reconstructed field
        Scalar g = field->generator() + field->one();
        Scalar gb = scalar_from_json(scalar_to_json(g), back);
        CHECK(scalar_to_json(gb) == scalar_to_json(g));
    }
}

TEST_CASE("scalar and matrix roundtrip") {
    auto f9 = Field::gf(3, 2);
    Scalar a = f9->generator() + f9->fromInt(2);
    CHECK(scalar_from_json(scalar_to_json(a), f9) == a);

    auto rf = Field::rf(Field::gf(2), "t");
    Scalar t = rf->generator();
    Scalar frac = (t + rf->one()).inverse() * t;  // t / (t + 1)
    CHECK(scalar_from_json(scalar_to_json(frac), rf) == frac);

    Mat m = {{a, f9->zero()}, {f9->one(), a * a}};
    Mat back = mat_from_json(mat_to_json(m), f9);
    REQUIRE(back.size() == m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) CHECK(back[i][j] == m[i][j]);
}

TEST_CASE("algebra and extension roundtrip") {
    for (const std::string& name :
         {"ex1:2", "ex2:2", "split:3,2", "ff:2,2", "ex5", "ex3-two-var"}) {
        ExtensionInstance inst = catalog_example(name);
        Json j = extension_to_json(inst);
        ExtensionInstance back = extension_from_json(j);
        CHECK(back.id == inst.id);
        CHECK(back.s->dim() == inst.s->dim());
        CHECK(back.r.dim() == inst.r.dim());
        CHECK(back.expected == inst.expected);
        // byte-stable: re-serialization is identical
        CHECK(extension_to_json(back).dump() == j.dump());
        // structure constants survive: all products agree with the original
        for (size_t a = 0; a < inst.s->dim(); ++a)
            for (size_t b = 0; b < inst.s->dim(); ++b) {
                Json p1 = vec_to_json(inst.s->mulCoords(
                    unit_vec(inst.s->field(), inst.s->dim(), a),
                    unit_vec(inst.s->field(), inst.s->dim(), b)));
                Json p2 = vec_to_json(back.s->mulCoords(
                    unit_vec(back.s->field(), back.s->dim(), a),
                    unit_vec(back.s->field(), back.s->dim(), b)));
                CHECK(p1 == p2);
            }
    }
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_extension("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_extension("{}"), ParseError);
    CHECK_THROWS_AS(parse_extension(R"({"id":"x"})"), ParseError);

    // start from a valid document and break it in targeted ways
    Json good = extension_to_json(catalog_example("split:3,2"));

    Json bad = good;
    bad["table"][0][0] = Json::array({Json::array({1})});  // wrong vector length
    CHECK_THROWS_AS(extension_from_json(bad), ParseError);

    bad = good;
    bad["field"]["p"] = 4;  // not prime
    CHECK_THROWS_AS(extension_from_json(bad), ParseError);

    auto gf2_vec = [](int a, int b, int c) {
        return Json::array({Json::array({a}), Json::array({b}), Json::array({c})});
    };

    bad = good;
    bad["R_basis"] = Json::array({gf2_vec(0, 1, 0)});  // unit (1,1,1) not in R
    CHECK_THROWS_AS(extension_from_json(bad), ParseError);
}

TEST_CASE("malformed multiplication table is rejected") {
    auto gf2_vec = [](int a, int b, int c) {
        return Json::array({Json::array({a}), Json::array({b}), Json::array({c})});
    };
    Json good = extension_to_json(catalog_example("split:3,2"));

    // e_1 * e_1 = e_1 + e_2 breaks both idempotency and associativity
    Json bad = good;
    bad["table"][1][1] = gf2_vec(0, 1, 1);
    CHECK_THROWS_AS(extension_from_json(bad), ParseError);

    // breaking symmetry of the table breaks commutativity
    bad = good;
    bad["table"][0][1] = gf2_vec(1, 0, 0);
    CHECK_THROWS_AS(extension_from_json(bad), ParseError);
}

TEST_CASE("random instances roundtrip and stay deterministic") {
    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        ExtensionInstance a = random_extension(seed);
        ExtensionInstance b = random_extension(seed);
        CHECK(extension_to_json(a).dump() == extension_to_json(b).dump());
        ExtensionInstance back = extension_from_json(extension_to_json(a));
        CHECK(back.s->dim() == a.s->dim());
        CHECK(back.r.dim() == a.r.dim());
    }
}
