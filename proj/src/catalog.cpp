#include "ringlat/catalog.hpp"

#include <algorithm>
#include <random>

namespace ringlat {

namespace {

// "name" or "name:a" or "name:a,b" -> {name, {a, b}}
std::pair<std::string, std::vector<unsigned>> split_name(const std::string& full) {
    auto colon = full.find(':');
    if (colon == std::string::npos) return {full, {}};
    std::string head = full.substr(0, colon);
    std::vector<unsigned> args;
    std::string rest = full.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? rest.size() - pos
                                                                      : comma - pos);
        try {
            args.push_back(static_cast<unsigned>(std::stoul(tok)));
        } catch (const std::exception&) {
            throw UnknownExample(full + " (bad numeric argument \"" + tok + "\")");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return {head, args};
}

unsigned arg_or(const std::vector<unsigned>& args, size_t i, unsigned dflt) {
    return i < args.size() ? args[i] : dflt;
}

AlgebraPtr split_product(unsigned n, const FieldPtr& k) {
    std::vector<AlgebraPtr> fs(n, field_algebra(k));
    return product_algebra(fs).algebra;
}

/// GF(p^(a*e)) over GF(p) with the degree-a subfield as R: the fixed space of
/// the a-fold Frobenius, which is GF(p)-linear.
ExtensionInstance finite_field_entry(unsigned q, unsigned e, Json expected) {
    unsigned p = 0, a = 0;
    for (unsigned cand : {2u, 3u, 5u, 7u, 11u, 13u}) {
        unsigned pow = cand, deg = 1;
        while (pow < q) pow *= cand, ++deg;
        if (pow == q) { p = cand; a = deg; break; }
    }
    if (p == 0) throw UnknownExample("ff: q must be a power of a small prime");
    if (e < 1) throw UnknownExample("ff: e must be positive");
    auto base = field_algebra(Field::gf(p));
    auto big = Field::gf(p, a * e);
    std::vector<Element> coeffs;
    for (unsigned i = 0; i < a * e; ++i)
        coeffs.push_back(base->one().scaled(Field::gf(p)->fromInt(big->modulus()[i])));
    AlgebraPtr s = monogenic_extension(base, coeffs);
    std::uint64_t qa = 1;
    for (unsigned i = 0; i < a; ++i) qa *= p;
    // rows of Frobenius^a minus identity; its kernel is the subfield GF(q)
    Mat m;
    for (size_t i = 0; i < s->dim(); ++i)
        m.push_back(vec_sub(s->basisElement(i).pow(qa).coords(),
                            unit_vec(s->field(), s->dim(), i)));
    Rref ker = left_kernel(m, s->field(), s->dim());
    Subalgebra r{Subspace(s, ker.rows)};
    return ExtensionInstance{"ff-" + std::to_string(q) + "-" + std::to_string(e), s, r,
                             std::move(expected)};
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ExtensionInstance unit_line_entry(std::string id, AlgebraPtr s, Json expected) {
    Subalgebra r = Subalgebra::unitLine(s);
    return ExtensionInstance{std::move(id), std::move(s), std::move(r), std::move(expected)};
}

size_t bell_number(unsigned n) {
    static const size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    if (n >= std::size(bell)) throw UnknownExample("tower-partition: n too large");
    return bell[n];
}

} // namespace

ExtensionInstance catalog_example(const std::string& full) {
    auto [name, args] = split_name(full);

    if (name == "ex1") {
        unsigned m = arg_or(args, 0, 2);
        if (m < 1 || m > 4) throw UnknownExample(full + " (m must be 1..4)");
        Json exp;
        exp["pw"] = true;
        exp["pair"] = (m == 1);
        exp["copw"] = false;
        if (m >= 2) exp["case"] = "a";
        return unit_line_entry("ex1-m" + std::to_string(m),
                               truncated_poly_algebra(Field::gf(2), m, NilRelations::SquaresOnly),
                               std::move(exp));
    }
    if (name == "ex2") {
        unsigned m = arg_or(args, 0, 2);
        if (m < 1 || m > 6) throw UnknownExample(full + " (m must be 1..6)");
        Json exp;
        exp["pw"] = true;
        exp["pair"] = true;
        exp["copw"] = (m == 2);
        if (m >= 2) exp["case"] = "a";
        if (m == 2) exp["copw_clause"] = 1;
        return unit_line_entry(
            "ex2-m" + std::to_string(m),
            truncated_poly_algebra(Field::gf(2), m, NilRelations::SquaresAndProducts),
            std::move(exp));
    }
    if (name == "split" || name == "tower-partition") {
        unsigned n = arg_or(args, 0, 3);
        unsigned q = name == "split" ? arg_or(args, 1, 2) : 2;
        if (n < 2 || n > 6 || !is_prime(q)) throw UnknownExample(full);
        Json exp;
        bool two = (q == 2);
        exp["pw"] = (n == 2) || two;
        exp["pair"] = (n == 2) || (two && n == 3);
        exp["copw"] = two && n == 3;
        if (two && n == 3) exp["copw_clause"] = 2;
        if (two && n >= 3) exp["case"] = "b";
        if (name == "tower-partition" || (two && n <= 4)) {
            Json lat;
            lat["nodes"] = bell_number(n);
            lat["length"] = n - 1;
            lat["geometric"] = (n <= 3);
            if (n == 3) lat["atoms"] = 3;
            exp["lattice"] = std::move(lat);
        }
        return unit_line_entry(name + "-" + std::to_string(n) + "-q" + std::to_string(q),
                               split_product(n, Field::gf(q)), std::move(exp));
    }
    if (name == "ff") {
        unsigned q = arg_or(args, 0, 2), e = arg_or(args, 1, 2);
        Json exp;
        exp["pw"] = is_prime(e);
        exp["pair"] = is_prime(e);
        exp["copw"] = false;
        if (is_prime(e)) exp["minimal_kind"] = "inert";
        return finite_field_entry(q, e, std::move(exp));
    }
    if (name == "ex5") {
        auto k = Field::rf(Field::gf(2), "t");
        auto base = field_algebra(k);
        auto a1 = monogenic_extension(base, {base->one().scaled(k->generator()), base->zero()});
        AlgebraPtr s = monogenic_extension(a1, {a1->zero(), a1->zero()});
        Json exp;
        exp["pw"] = true;
        exp["pair"] = false;
        exp["copw"] = false;
        exp["case"] = "d";
        // adjoining x (basis 2) is a ramified step, adjoining y (basis 1) inert
        exp["adjoined_types"] = Json::array({Json{{"basis", 2}, {"type", "ramified"}},
                                             Json{{"basis", 1}, {"type", "inert"}}});
        return unit_line_entry("ex5", s, std::move(exp));
    }
    if (name == "remark7151") {
        auto k = Field::rf(Field::gf(2), "u");
        auto base = field_algebra(k);
        auto a1 = monogenic_extension(base, {base->zero(), base->zero()});
        Element c0 = a1->one().scaled(k->generator()) + a1->basisElement(1);
        AlgebraPtr s = monogenic_extension(a1, {c0, a1->zero()});
        Json exp;
        exp["pw"] = false;
        exp["witness"] = true;  // the sampled definition scan must refute too
        return unit_line_entry("remark7151", s, std::move(exp));
    }
    if (name == "ex3-two-var") {
        auto fu = Field::rf(Field::gf(2), "u");
        auto f = Field::rf(fu, "v");
        auto base = field_algebra(f);
        Scalar u = Scalar::makeRF(f, {fu->generator()}, {fu->one()});
        auto a1 = monogenic_extension(base, {base->one().scaled(u), base->zero()});
        AlgebraPtr s = monogenic_extension(a1, {a1->one().scaled(f->generator()), a1->zero()});
        Json exp;
        exp["pw"] = true;
        exp["pair"] = true;
        exp["copw"] = true;
        exp["copw_clause"] = 3;
        exp["case"] = "c";
        return unit_line_entry("ex3-two-var", s, std::move(exp));
    }
    if (name == "prop7170") {
        unsigned m = arg_or(args, 0, 2);
        if (m < 2 || m > 4) throw UnknownExample(full + " (m must be 2..4)");
        auto amb = truncated_poly_algebra(Field::gf(2), m, NilRelations::SquaresOnly);
        // J = x1 * S: square-zero ideal not contained in R = k
        Mat jrows;
        for (size_t i = 0; i < amb->dim(); ++i)
            jrows.push_back(amb->mulCoords(amb->basisElement(1).coords(),
                                           unit_vec(amb->field(), amb->dim(), i)));
        Subspace jspace(amb, jrows);
        Subalgebra built{Subspace(amb, {amb->unitCoords()}).sum(jspace)};
        Rebased rb = rebase(built);
        Json exp;
        exp["pw"] = true;
        exp["pair"] = true;
        exp["copw"] = (m == 2);
        return unit_line_entry("prop7170-m" + std::to_string(m), rb.algebra, std::move(exp));
    }
    throw UnknownExample(full);
}

std::vector<std::string> catalog_names() {
    return {"ex1:2",      "ex2:2",       "ex2:3",      "split:3,2",
            "split:4,2",  "split:3,3",   "ff:2,2",     "ff:2,4",
            "ex5",        "remark7151",  "ex3-two-var", "prop7170:2",
            "tower-partition:3", "tower-partition:4"};
}

ExtensionInstance random_extension(std::uint64_t seed, const RandomProfile& profile) {
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
    unsigned p = profile.primes[pick(profile.primes.size())];
    auto k = Field::gf(p);
    size_t target = 2 + pick(profile.max_dim - 1);

    std::vector<AlgebraPtr> blocks;
    size_t dim = 0;
    while (dim < target) {
        size_t room = target - dim;
        AlgebraPtr block;
        switch (pick(4)) {
            case 0: block = field_algebra(k); break;
            case 1: {
                unsigned m = 1 + static_cast<unsigned>(pick(2));
                NilRelations rel = pick(2) ? NilRelations::SquaresOnly
                                           : NilRelations::SquaresAndProducts;
                block = truncated_poly_algebra(k, m, rel);
                break;
            }
            case 2: {
                unsigned e = 2 + static_cast<unsigned>(pick(2));
                auto base = field_algebra(k);
                auto big = Field::gf(p, e);
                std::vector<Element> coeffs;
                for (unsigned i = 0; i < e; ++i)
                    coeffs.push_back(base->one().scaled(k->fromInt(big->modulus()[i])));
                block = monogenic_extension(base, coeffs);
                break;
            }
            default: {
                unsigned m = 2 + static_cast<unsigned>(pick(2));
                auto base = field_algebra(k);
                block = monogenic_extension(base, std::vector<Element>(m, base->zero()));
                break;
            }
        }
        if (block->dim() > room) {
            if (dim >= 2) break;  // keep S at least 2-dimensional
            block = field_algebra(k);
        }
        blocks.push_back(block);
        dim += block->dim();
    }
    AlgebraPtr s = blocks.size() == 1 ? blocks[0] : product_algebra(blocks).algebra;

    Subalgebra r = Subalgebra::unitLine(s);
    if (rng() % 2 == 0) {
        // grow R by random elements, keeping it proper
        for (int attempt = 0; attempt < 4; ++attempt) {
            Vec v;
            for (size_t i = 0; i < s->dim(); ++i) v.push_back(k->fromInt(rng() % p));
            Subalgebra grown = generated_subalgebra(r, {s->element(v)});
            if (grown.dim() < s->dim()) r = grown;
            if (rng() % 2 == 0) break;
        }
    }
    if (r.dim() == s->dim()) r = Subalgebra::unitLine(s);

    return ExtensionInstance{"random-" + std::to_string(seed), s, r, Json()};
}

} // namespace ringlat
