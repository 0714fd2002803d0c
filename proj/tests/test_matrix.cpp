#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlat/matrix.hpp"

using namespace ringlat;

namespace {

Mat from_ints(const FieldPtr& k, const std::vector<std::vector<int>>& rows) {
    Mat m;
    for (const auto& r : rows) {
        Vec v;
        for (int x : r) v.push_back(k->fromInt(x));
        m.push_back(std::move(v));
    }
    return m;
}

Vec vec_from_ints(const FieldPtr& k, const std::vector<int>& r) {
    Vec v;
    for (int x : r) v.push_back(k->fromInt(x));
    return v;
}

} // namespace

TEST_CASE("rref canonical form") {
    auto k = Field::gf(5);
    Mat m = from_ints(k, {{2, 4, 6}, {1, 2, 3}, {0, 0, 1}});
    Rref r = rref(m);
    CHECK(r.rows.size() == 2);
    CHECK(r.pivots == std::vector<size_t>{0, 2});
    CHECK(r.rows == from_ints(k, {{1, 2, 0}, {0, 0, 1}}));
    // rref is idempotent and independent of row presentation
    Mat m2 = from_ints(k, {{1, 2, 3}, {0, 0, 3}});
    CHECK(rref(m2).rows == r.rows);
}

TEST_CASE("span membership and coordinates") {
    auto k = Field::gf(3);
    Rref r = rref(from_ints(k, {{1, 0, 2}, {0, 1, 1}}));
    CHECK(in_span(r, vec_from_ints(k, {1, 1, 0})));
    CHECK_FALSE(in_span(r, vec_from_ints(k, {0, 0, 1})));
    auto c = coords_in(r, vec_from_ints(k, {2, 1, 2}));
    REQUIRE(c.has_value());
    CHECK(*c == vec_from_ints(k, {2, 1}));
}

TEST_CASE("null space solves m*x = 0") {
    auto k = Field::gf(2);
    Mat m = from_ints(k, {{1, 1, 0, 1}, {0, 1, 1, 0}});
    Rref ker = null_space(m, k, 4);
    CHECK(ker.rows.size() == 2);
    for (const Vec& x : ker.rows)
        for (const Vec& row : m) {
            Scalar dot = k->zero();
            for (size_t j = 0; j < 4; ++j) dot = dot + row[j] * x[j];
            CHECK(dot.isZero());
        }
}

TEST_CASE("left kernel") {
    auto k = Field::gf(3);
    Mat m = from_ints(k, {{1, 2}, {2, 4}, {0, 1}});
    Rref ker = left_kernel(m, k, 2);
    CHECK(ker.rows.size() == 1);
    CHECK(ker.rows[0] == vec_from_ints(k, {1, 1, 0}));  // -2*r0 + r1 scaled
}

TEST_CASE("linear solve") {
    auto k = Field::gf(7);
    Mat m = from_ints(k, {{1, 2}, {3, 4}});
    auto x = solve(m, vec_from_ints(k, {5, 6}), k, 2);
    REQUIRE(x.has_value());
    CHECK((k->fromInt(1) * (*x)[0] + k->fromInt(2) * (*x)[1]) == k->fromInt(5));
    CHECK((k->fromInt(3) * (*x)[0] + k->fromInt(4) * (*x)[1]) == k->fromInt(6));
    // inconsistent system
    Mat sing = from_ints(k, {{1, 2}, {2, 4}});
    CHECK_FALSE(solve(sing, vec_from_ints(k, {1, 0}), k, 2).has_value());
}

TEST_CASE("rank over a rational function field") {
    auto kt = Field::rf(Field::gf(2), "t");
    Scalar t = kt->generator();
    Scalar one = kt->one();
    Mat m{{t, one}, {t * t, t}};  // second row = t * first
    CHECK(rank_of(m) == 1);
    Mat m2{{t, one}, {one, t}};
    CHECK(rank_of(m2) == 2);
}
