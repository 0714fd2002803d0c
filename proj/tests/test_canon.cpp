#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlat/canon.hpp"

using namespace ringlat;

namespace {

AlgebraPtr dual_numbers(const FieldPtr& k) {
    auto base = field_algebra(k);
    return monogenic_extension(base, {base->zero(), base->zero()});
}

AlgebraPtr gf_extension_algebra(unsigned p, unsigned f) {
    auto k = Field::gf(p);
    auto base = field_algebra(k);
    auto big = Field::gf(p, f);
    std::vector<Element> coeffs;
    for (unsigned i = 0; i < f; ++i) {
        unsigned c = big->modulus()[i];
        coeffs.push_back(base->one().scaled(k->fromInt(c)));
    }
    return monogenic_extension(base, coeffs);
}

ProductAlgebra triple_gf2() {
    auto f = field_algebra(Field::gf(2));
    return product_algebra({f, f, f});
}

} // namespace

TEST_CASE("seminormalization of a field below nilpotents") {
    auto k = Field::gf(2);
    auto d = dual_numbers(k);
    auto res = seminormalization(Subalgebra::unitLine(d), d);
    CHECK(res.exactness == Exactness::Exhaustive);
    CHECK(res.ring.dim() == 2);  // all of S: x^2 = x^3 = 0
    CHECK(is_subintegral(Subalgebra::unitLine(d), d) == Verdict::True);
}

TEST_CASE("diagonal in a split product is seminormal and infra-integral") {
    auto pr = triple_gf2();
    auto s = pr.algebra;
    auto r = Subalgebra::unitLine(s);
    auto plus = seminormalization(r, s);
    CHECK(plus.ring == r);
    CHECK(is_seminormal(r, s) == Verdict::True);
    auto t = t_closure(r, s);
    CHECK(t.ring.dim() == 3);
    CHECK(is_infra_integral(r, s) == Verdict::True);
    CHECK(is_subintegral(r, s) == Verdict::False);
    CHECK(is_t_closed(r, s) == Verdict::False);
    // spectral cross-checks
    CHECK(spectral_subintegral(r, s) == Verdict::False);
    CHECK(spectral_infra_integral(r, s) == Verdict::True);
}

TEST_CASE("field extensions are t-closed") {
    auto g4 = gf_extension_algebra(2, 2);
    auto r = Subalgebra::unitLine(g4);
    auto t = t_closure(r, g4);
    CHECK(t.ring == r);
    CHECK(is_t_closed(r, g4) == Verdict::True);
    CHECK(is_seminormal(r, g4) == Verdict::True);
    CHECK(is_subintegral(r, g4) == Verdict::False);
}

TEST_CASE("closures are idempotent and nested") {
    auto k = Field::gf(3);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    auto pr = product_algebra({a, field_algebra(k)});
    auto s = pr.algebra;
    auto r = Subalgebra::unitLine(s);
    CanonicalChain chain = canonical_chain(r, s);
    CHECK(chain.plus.space().containsSubspace(chain.r.space()));
    CHECK(chain.t.space().containsSubspace(chain.plus.space()));
    // + of + is +
    auto again = seminormalization(chain.plus, s);
    CHECK(again.ring == chain.plus);
    // t of t is t
    auto tagain = t_closure(chain.t, s);
    CHECK(tagain.ring == chain.t);
    // here +R = 1 + nilradical (dim 4), tR adds the idempotent: dim 5 = all
    CHECK(chain.plus.dim() == 4);
    CHECK(chain.t.dim() == 5);
}

TEST_CASE("seminormal extension has a radical conductor") {
    auto pr = triple_gf2();
    auto s = pr.algebra;
    auto r = Subalgebra::unitLine(s);
    REQUIRE(is_seminormal(r, s) == Verdict::True);
    IdealOf c = conductor(r, s);
    auto full = Subalgebra::full(s);
    IdealOf c_in_s(full, c.space());
    CHECK(radical_in(full, c_in_s).space() == c.space());
}

TEST_CASE("minimal type classification of the three basic shapes") {
    // inert
    auto g4 = gf_extension_algebra(2, 2);
    MinimalType inert = minimal_type(Subalgebra::unitLine(g4), Subalgebra::full(g4));
    CHECK(inert.kind == MinimalKind::Inert);
    CHECK(inert.residue_degree_base == 1);
    CHECK(inert.residue_degree_top == 2);
    // decomposed
    auto f = field_algebra(Field::gf(2));
    auto kk = product_algebra({f, f});
    MinimalType dec = minimal_type(Subalgebra::unitLine(kk.algebra), Subalgebra::full(kk.algebra));
    CHECK(dec.kind == MinimalKind::Decomposed);
    CHECK(dec.witnesses.size() == 2);
    // ramified
    auto d = dual_numbers(Field::gf(2));
    MinimalType ram = minimal_type(Subalgebra::unitLine(d), Subalgebra::full(d));
    CHECK(ram.kind == MinimalKind::Ramified);
    REQUIRE(ram.witnesses.size() == 1);
    CHECK(ram.witnesses[0].dim() == 1);
}

TEST_CASE("non-minimal extensions are rejected by both sides") {
    auto g16 = gf_extension_algebra(2, 4);
    auto r = Subalgebra::unitLine(g16);
    auto t = Subalgebra::full(g16);
    MinimalType mt = minimal_type(r, t);
    CHECK(mt.kind == MinimalKind::NotMinimal);
    CHECK_FALSE(minimal_oracle(r, t));
    // dim-4 nilpotent example: pointwise minimal but not minimal
    auto a = truncated_poly_algebra(Field::gf(2), 2, NilRelations::SquaresOnly);
    CHECK(minimal_type(Subalgebra::unitLine(a), Subalgebra::full(a)).kind ==
          MinimalKind::NotMinimal);
    CHECK_FALSE(minimal_oracle(Subalgebra::unitLine(a), Subalgebra::full(a)));
}

TEST_CASE("oracle agrees with the classifier on minimal shapes") {
    auto g4 = gf_extension_algebra(2, 2);
    CHECK(minimal_oracle(Subalgebra::unitLine(g4), Subalgebra::full(g4)));
    auto d = dual_numbers(Field::gf(3));
    CHECK(minimal_oracle(Subalgebra::unitLine(d), Subalgebra::full(d)));
    auto f = field_algebra(Field::gf(2));
    auto kk = product_algebra({f, f});
    CHECK(minimal_oracle(Subalgebra::unitLine(kk.algebra), Subalgebra::full(kk.algebra)));
}

TEST_CASE("tower profiles") {
    // decomposed twice through the split product
    auto pr = triple_gf2();
    auto s = pr.algebra;
    auto r = Subalgebra::unitLine(s);
    Vec e0 = pr.embed(0, Vec{Field::gf(2)->one()});
    Mat rows{s->unitCoords(), e0};
    Subalgebra mid{Subspace(s, rows)};
    auto profile = tower_type_profile({r, mid, Subalgebra::full(s)});
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].kind == MinimalKind::Decomposed);
    CHECK(profile[1].kind == MinimalKind::Decomposed);

    // ramified twice through the two-generator square-zero algebra
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresAndProducts);  // dim 3
    auto base = Subalgebra::unitLine(a);
    Mat mrows{a->unitCoords(), a->basisElement(1).coords()};
    Subalgebra mid2{Subspace(a, mrows)};
    auto profile2 = tower_type_profile({base, mid2, Subalgebra::full(a)});
    CHECK(profile2[0].kind == MinimalKind::Ramified);
    CHECK(profile2[1].kind == MinimalKind::Ramified);

    // a non-minimal step throws
    auto g16 = gf_extension_algebra(2, 4);
    CHECK_THROWS_AS(
        tower_type_profile({Subalgebra::unitLine(g16), Subalgebra::full(g16)}),
        NotAMinimalStep);
}

TEST_CASE("closures over a rational function field") {
    auto kt = Field::rf(Field::gf(2), "t");
    auto base = field_algebra(kt);
    // nilpotent extension of the field: subintegral, certified exactly
    auto d = dual_numbers(kt);
    auto rd = Subalgebra::unitLine(d);
    auto plus = seminormalization(rd, d);
    CHECK(plus.exactness == Exactness::Exhaustive);
    CHECK(plus.ring.dim() == 2);
    CHECK(is_subintegral(rd, d) == Verdict::True);
    // unsupported separable extension: t-closure falls back to candidates,
    // verdict stays honest
    Scalar t = kt->generator();
    auto artin = monogenic_extension(base, {base->one().scaled(t), base->one()});
    auto ra = Subalgebra::unitLine(artin);
    Verdict v = is_t_closed(ra, artin);
    CHECK(v != Verdict::False);
    // purely inseparable extension: decomposition works, t-closure exact
    auto insep = monogenic_extension(base, {base->one().scaled(-t), base->zero()});
    auto ri = Subalgebra::unitLine(insep);
    auto tc = t_closure(ri, insep);
    CHECK(tc.exactness == Exactness::Exhaustive);
    CHECK(tc.ring == ri);
    CHECK(is_t_closed(ri, insep) == Verdict::True);
    MinimalType mt = minimal_type(ri, Subalgebra::full(insep));
    CHECK(mt.kind == MinimalKind::Inert);
}

TEST_CASE("subintegrality is stable under intermediate rings") {
    auto k = Field::gf(2);
    auto a = truncated_poly_algebra(k, 2, NilRelations::SquaresOnly);
    auto r = Subalgebra::unitLine(a);
    REQUIRE(is_subintegral(r, a) == Verdict::True);
    // every monogenic intermediate ring inherits both sides
    for (size_t i = 1; i < 4; ++i) {
        auto mid = generated_subalgebra(r, {a->basisElement(i)});
        if (mid.dim() == a->dim()) continue;
        CHECK(is_subintegral(mid, a) == Verdict::True);
        Rebased rbm = rebase(mid);
        Subalgebra rloc{rbm.restrictSubspace(r.space())};
        CHECK(is_subintegral(rloc, rbm.algebra) == Verdict::True);
    }
}
