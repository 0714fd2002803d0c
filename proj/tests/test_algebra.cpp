#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ringlat/algebra.hpp"

using namespace ringlat;

TEST_CASE("structure constant validation") {
    auto k = Field::gf(2);
    // dim 2 with e1*e1 = e0 but a bad unit
    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, zero_vec(k, 2)));
    t[0][0] = unit_vec(k, 2, 0);
    t[0][1] = t[1][0] = unit_vec(k, 2, 1);
    t[1][1] = unit_vec(k, 2, 0);
    CHECK_NOTHROW(Algebra::make(k, 2, t, unit_vec(k, 2, 0)));
    CHECK_THROWS_AS(Algebra::make(k, 2, t, unit_vec(k, 2, 1)), BadAlgebra);
    // break commutativity
    auto t2 = t;
    t2[1][0] = unit_vec(k, 2, 0);
    CHECK_THROWS_AS(Algebra::make(k, 2, t2, unit_vec(k, 2, 0)), BadAlgebra);
    // break associativity: e1*e1 = e1, e1*(e1*e1) vs (e1*e1)*e1 still fine,
    // so use a genuinely non-associative table on dim 2 over GF(3)
    auto k3 = Field::gf(3);
    std::vector<std::vector<Vec>> t3(2, std::vector<Vec>(2, zero_vec(k3, 2)));
    t3[0][0] = unit_vec(k3, 2, 0);
    t3[0][1] = t3[1][0] = unit_vec(k3, 2, 1);
    Vec bad = zero_vec(k3, 2);
    bad[0] = k3->one();
    bad[1] = k3->one();
    t3[1][1] = bad;
    // x^2 = 1 + x is the golden-ratio rule; it is associative, so perturb:
    // x^2 = 1 + 2x fails (x*x)*x == x*(x*x) trivially but not higher
    // combinations; check either accepts or rejects consistently
    CHECK_NOTHROW(Algebra::make(k3, 2, t3, unit_vec(k3, 2, 0)));
}

TEST_CASE("nilpotent truncated algebras") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    CHECK(a->dim() == 4);
    Element x1 = a->basisElement(1), x2 = a->basisElement(2);
    CHECK((x1 * x1).isZero());
    CHECK((x2 * x2).isZero());
    CHECK(x1 * x2 == a->basisElement(3));
    CHECK((x1 * x2 * x1).isZero());

    auto b = truncated_poly_algebra(k, 3, NilRelations::SquaresAndProducts);
    CHECK(b->dim() == 4);
    for (size_t i = 1; i < 4; ++i)
        for (size_t j = 1; j < 4; ++j)
            CHECK((b->basisElement(i) * b->basisElement(j)).isZero());
}

TEST_CASE("product algebra idempotents") {
    auto k = Field::gf(3);
    auto f = field_algebra(k);
    auto pr = product_algebra({f, f, f});
    CHECK(pr.algebra->dim() == 3);
    Element sum = pr.algebra->zero();
    for (size_t i = 0; i < 3; ++i) {
        Element e = pr.algebra->element(pr.embed(i, Vec{k->one()}));
        CHECK(e * e == e);
        sum = sum + e;
    }
    CHECK(sum == pr.algebra->one());
    // orthogonality
    Element e0 = pr.algebra->element(pr.embed(0, Vec{k->one()}));
    Element e1 = pr.algebra->element(pr.embed(1, Vec{k->one()}));
    CHECK((e0 * e1).isZero());
}

TEST_CASE("monogenic extension builds gf(9) over gf(3)") {
    auto k = Field::gf(3);
    auto base = field_algebra(k);
    // X^2 + 1
    auto ext = monogenic_extension(base, {base->one(), base->zero()});
    CHECK(ext->dim() == 2);
    Element x = ext->basisElement(1);
    CHECK(x * x == ext->one().scaled(-k->one()));
    CHECK(x.pow(4) == ext->one());
    // every nonzero element is a unit iff the modulus is irreducible: x+1
    Element y = x + ext->one();
    CHECK(y.pow(8) == ext->one());
}

TEST_CASE("monogenic extension with nilpotents and degree reduction spill") {
    auto k = Field::gf(2);
    auto base = field_algebra(k);
    // X^3 + X^2 + 1 over GF(2) is irreducible: gives GF(8)
    auto ext = monogenic_extension(base, {base->one(), base->zero(), base->one()});
    CHECK(ext->dim() == 3);
    Element x = ext->basisElement(1);
    CHECK(x.pow(7) == ext->one());
    // X^2 = 0 gives a nilpotent generator
    auto dual = monogenic_extension(base, {base->zero(), base->zero()});
    Element eps = dual->basisElement(1);
    CHECK((eps * eps).isZero());
    CHECK_FALSE(eps.isZero());
}

TEST_CASE("subalgebra validation and generation") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    auto r = Subalgebra::unitLine(a);
    CHECK(r.dim() == 1);
    // span{1, x1} is closed; span{1, x1+x2} is also closed (char 2, squares 0)
    Element x1 = a->basisElement(1);
    auto t1 = generated_subalgebra(r, {x1});
    CHECK(t1.dim() == 2);
    CHECK(t1.contains(x1));
    // generating with x1 and x2 forces x1x2 in: dim 4
    auto t2 = generated_subalgebra(r, {x1, a->basisElement(2)});
    CHECK(t2.dim() == 4);
    // a subspace missing the unit is not a subalgebra
    Mat rows{x1.coords()};
    CHECK_THROWS_AS(Subalgebra(Subspace(a, rows)), BadAlgebra);
}

TEST_CASE("ideal validation") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    auto s = Subalgebra::full(a);
    // (x1) = span{x1, x1x2}
    Mat rows{a->basisElement(1).coords(), a->basisElement(3).coords()};
    CHECK_NOTHROW(IdealOf(s, Subspace(a, rows)));
    // span{x1} alone is not an ideal of the full algebra
    Mat bad{a->basisElement(1).coords()};
    CHECK_THROWS_AS(IdealOf(s, Subspace(a, bad)), NotAnIdeal);
}

TEST_CASE("quotient algebra") {
    auto k = Field::gf(3);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresAndProducts);  // dim 3
    auto s = Subalgebra::full(a);
    Mat rows{a->basisElement(1).coords(), a->basisElement(2).coords()};
    auto q = quotient_algebra(a, IdealOf(s, Subspace(a, rows)));
    CHECK(q.algebra->dim() == 1);
    CHECK(q.project(a->one().coords()) == Vec{k->one()});
    // section then project is the identity
    Vec v{k->fromInt(2)};
    CHECK(q.project(q.section(v)) == v);
}

TEST_CASE("coset representatives") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    auto r = Subalgebra::unitLine(a);
    auto full = Subspace::full(a);
    CHECK(coset_count(r.space(), full) == 8);
    auto reps = coset_representatives(r.space(), full, 1 << 20);
    CHECK(reps.size() == 8);
    // pairwise distinct modulo R
    std::set<std::string> keys;
    for (const Vec& v : reps) {
        Vec red = reduce_by(r.space().basis(), v);
        std::string key;
        for (const Scalar& c : red) key += c.key() + ",";
        keys.insert(key);
    }
    CHECK(keys.size() == 8);
    CHECK_THROWS_AS(coset_representatives(r.space(), full, 4), ScanCapExceeded);
}

TEST_CASE("rebasing a subalgebra") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    Element x1 = a->basisElement(1);
    auto t = generated_subalgebra(Subalgebra::unitLine(a), {x1});
    Rebased rb = rebase(t);
    CHECK(rb.algebra->dim() == 2);
    // the rebased copy has a nilpotent of square zero
    Vec local = rb.toLocal(x1.coords());
    Element lx = rb.algebra->element(local);
    CHECK((lx * lx).isZero());
    CHECK(rb.toAmbient(local) == x1.coords());
    // round trip on subspaces
    Subspace sub(rb.algebra, Mat{local});
    CHECK(rb.restrictSubspace(rb.liftSubspace(sub)) == sub);
}

TEST_CASE("join of subalgebras") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    auto r = Subalgebra::unitLine(a);
    auto t1 = generated_subalgebra(r, {a->basisElement(1)});
    auto t2 = generated_subalgebra(r, {a->basisElement(2)});
    auto j = join_subalgebras(t1, t2);
    CHECK(j.dim() == 4);  // x1*x2 forced in
}
