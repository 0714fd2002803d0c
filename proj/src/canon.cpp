#include "ringlat/canon.hpp"

#include <algorithm>

namespace ringlat {

namespace {

bool is_prime_size(size_t n) {
    if (n < 2) return false;
    for (size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// b^2, b^3 in T
bool plus_step_ok(const AlgebraPtr& s, const Subalgebra& t, const Vec& b) {
    Vec b2 = s->mulCoords(b, b);
    if (!t.contains(b2)) return false;
    return t.contains(s->mulCoords(b2, b));
}

// exists r in T with b^2 - rb in T and b^3 - rb^2 in T: linear in r
bool t_step_ok(const AlgebraPtr& s, const Subalgebra& t, const Vec& b) {
    const FieldPtr& field = s->field();
    const size_t n = s->dim();
    const Rref& tb = t.space().basis();
    const Mat& rows = tb.rows;
    const size_t k = rows.size();
    Vec b2 = s->mulCoords(b, b);
    Vec b3 = s->mulCoords(b2, b);
    Mat a(2 * n, zero_vec(field, k));
    Vec rhs;
    Vec red2 = reduce_by(tb, b2);
    Vec red3 = reduce_by(tb, b3);
    for (size_t j = 0; j < k; ++j) {
        Vec tj_b = reduce_by(tb, s->mulCoords(rows[j], b));
        Vec tj_b2 = reduce_by(tb, s->mulCoords(rows[j], b2));
        for (size_t l = 0; l < n; ++l) {
            a[l][j] = tj_b[l];
            a[n + l][j] = tj_b2[l];
        }
    }
    rhs = red2;
    rhs.insert(rhs.end(), red3.begin(), red3.end());
    return solve(a, rhs, field, k).has_value();
}

template <typename Pred>
Subalgebra adjoin_scan_gf(Subalgebra t, const AlgebraPtr& s, std::uint64_t cap, Pred&& pred) {
    for (bool changed = true; changed;) {
        changed = false;
        std::optional<Vec> found;
        for_each_coset_rep(t.space(), Subspace::full(s), cap, [&](const Vec& b) {
            if (found || t.contains(b)) return;
            if (pred(s, t, b)) found = b;
        });
        if (found) {
            t = generated_subalgebra(t, {s->element(*found)});
            changed = true;
        }
    }
    return t;
}

std::vector<Vec> structured_candidates(const Subalgebra& r, const AlgebraPtr& s,
                                       const ClosureOptions& opts) {
    const FieldPtr& field = s->field();
    const size_t n = s->dim();
    std::vector<Vec> out;
    for (size_t i = 0; i < n; ++i) out.push_back(unit_vec(field, n, i));
    const Mat& nil = nilradical(s).space().basis().rows;
    for (const Vec& v : nil) out.push_back(v);
    for (size_t i = 0; i < nil.size(); ++i)
        for (size_t j = i; j < nil.size(); ++j)
            out.push_back(s->mulCoords(nil[i], nil[j]));
    for (size_t i = 0; i < n; ++i)
        for (const Vec& v : nil) out.push_back(vec_add(unit_vec(field, n, i), v));
    for (const Vec& rrow : r.space().basis().rows)
        for (const Vec& v : nil) out.push_back(s->mulCoords(rrow, v));
    std::mt19937_64 rng(opts.seed);
    for (unsigned trial = 0; trial < opts.sample_budget; ++trial) {
        Vec v;
        for (size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, 1, rng));
        out.push_back(std::move(v));
    }
    return out;
}

template <typename Pred>
Subalgebra adjoin_scan_candidates(Subalgebra t, const AlgebraPtr& s,
                                  const std::vector<Vec>& cands, Pred&& pred) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const Vec& b : cands) {
            if (t.contains(b)) continue;
            if (pred(s, t, b)) {
                t = generated_subalgebra(t, {s->element(b)});
                changed = true;
                break;
            }
        }
    }
    return t;
}

bool base_is_field(const Subalgebra& r) { return is_field(rebase(r).algebra); }

// For a field R: the subintegral closure is R + Nil(S).
Subalgebra field_base_plus(const Subalgebra& r, const AlgebraPtr& s) {
    return Subalgebra(r.space().sum(nilradical(s).space()));
}

// For a field R: the infra-integral closure is the preimage of the product of
// the residue images of R under S -> prod of residue fields.
std::optional<Subalgebra> field_base_t(const Subalgebra& r, const AlgebraPtr& s) {
    const LocalDecomposition* dec;
    try {
        dec = &local_decomposition(s);
    } catch (const UnsupportedDecomposition&) {
        return std::nullopt;
    }
    const FieldPtr& field = s->field();
    const size_t n = s->dim();
    Mat constraints;
    for (const QuotientAlgebra& factor : dec->factors) {
        IdealOf fnil = nilradical(factor.algebra);
        QuotientAlgebra res = quotient_algebra(factor.algebra, fnil);
        auto project = [&](const Vec& x) { return res.project(factor.project(x)); };
        Mat rimg;
        for (const Vec& rrow : r.space().basis().rows) rimg.push_back(project(rrow));
        Rref rres = rref(std::move(rimg));
        size_t d = res.algebra->dim();
        size_t base = constraints.size();
        for (size_t l = 0; l < d; ++l) constraints.push_back(zero_vec(field, n));
        for (size_t c = 0; c < n; ++c) {
            Vec red = reduce_by(rres, project(unit_vec(field, n, c)));
            for (size_t l = 0; l < d; ++l) constraints[base + l][c] = red[l];
        }
    }
    Rref ker = null_space(constraints, field, n);
    return Subalgebra(Subspace(s, ker.rows));
}

} // namespace

ClosureResult seminormalization(const Subalgebra& r, const AlgebraPtr& s,
                                const ClosureOptions& opts) {
    if (r.parent() != s) throw ParentMismatch();
    if (base_is_field(r)) return {field_base_plus(r, s), Exactness::Exhaustive};
    if (s->field()->isFinite())
        return {adjoin_scan_gf(r, s, opts.scan_cap, plus_step_ok), Exactness::Exhaustive};
    auto cands = structured_candidates(r, s, opts);
    return {adjoin_scan_candidates(r, s, cands, plus_step_ok), Exactness::CandidateClosure};
}

ClosureResult t_closure(const Subalgebra& r, const AlgebraPtr& s,
                        const ClosureOptions& opts) {
    if (r.parent() != s) throw ParentMismatch();
    if (base_is_field(r)) {
        auto exact = field_base_t(r, s);
        if (exact) return {*exact, Exactness::Exhaustive};
    }
    // seed with the subintegral closure: every adjunction from it stays
    // inside the t-closure, and the fixpoint is the same
    ClosureResult plus = seminormalization(r, s, opts);
    if (s->field()->isFinite())
        return {adjoin_scan_gf(plus.ring, s, opts.scan_cap, t_step_ok),
                plus.exactness};
    auto cands = structured_candidates(r, s, opts);
    return {adjoin_scan_candidates(plus.ring, s, cands, t_step_ok),
            Exactness::CandidateClosure};
}

namespace {

struct SpectralCounts {
    bool supported = false;
    bool residue_isos = true;
    std::vector<size_t> hits;  // per maximal ideal of R
    size_t max_s_count = 0;
};

SpectralCounts spectral_counts(const Subalgebra& r, const AlgebraPtr& s) {
    SpectralCounts out;
    std::vector<IdealOf> max_s, max_r;
    try {
        max_s = maximal_ideals(Subalgebra::full(s));
        max_r = maximal_ideals(r);
    } catch (const UnsupportedDecomposition&) {
        return out;
    }
    out.supported = true;
    out.hits.assign(max_r.size(), 0);
    out.max_s_count = max_s.size();
    auto full = Subalgebra::full(s);
    for (const IdealOf& n : max_s) {
        Subspace contraction = n.space().intersect(r.space());
        size_t idx = max_r.size();
        for (size_t i = 0; i < max_r.size(); ++i)
            if (max_r[i].space() == contraction) { idx = i; break; }
        if (idx == max_r.size()) {
            out.supported = false;  // should not happen for integral extensions
            return out;
        }
        ++out.hits[idx];
        size_t deg_s = residue_field(full, n).degree();
        size_t deg_r = residue_field(r, max_r[idx]).degree();
        if (deg_s != deg_r) out.residue_isos = false;
    }
    return out;
}

} // namespace

Verdict spectral_subintegral(const Subalgebra& r, const AlgebraPtr& s) {
    SpectralCounts c = spectral_counts(r, s);
    if (!c.supported) return Verdict::Unconfirmed;
    bool bijective = c.max_s_count == c.hits.size() &&
                     std::all_of(c.hits.begin(), c.hits.end(), [](size_t h) { return h == 1; });
    return (bijective && c.residue_isos) ? Verdict::True : Verdict::False;
}

Verdict spectral_infra_integral(const Subalgebra& r, const AlgebraPtr& s) {
    SpectralCounts c = spectral_counts(r, s);
    if (!c.supported) return Verdict::Unconfirmed;
    bool surjective = std::all_of(c.hits.begin(), c.hits.end(), [](size_t h) { return h >= 1; });
    return (surjective && c.residue_isos) ? Verdict::True : Verdict::False;
}

Verdict is_subintegral(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts) {
    ClosureResult plus = seminormalization(r, s, opts);
    if (plus.ring.dim() == s->dim()) return Verdict::True;
    if (plus.exactness == Exactness::Exhaustive) return Verdict::False;
    return spectral_subintegral(r, s);
}

Verdict is_seminormal(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts) {
    ClosureResult plus = seminormalization(r, s, opts);
    if (plus.ring != r) return Verdict::False;  // sound even for candidate scans
    return plus.exactness == Exactness::Exhaustive ? Verdict::True : Verdict::Unconfirmed;
}

Verdict is_infra_integral(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts) {
    ClosureResult t = t_closure(r, s, opts);
    if (t.ring.dim() == s->dim()) return Verdict::True;
    if (t.exactness == Exactness::Exhaustive) return Verdict::False;
    return spectral_infra_integral(r, s);
}

Verdict is_t_closed(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts) {
    ClosureResult t = t_closure(r, s, opts);
    if (t.ring != r) return Verdict::False;
    return t.exactness == Exactness::Exhaustive ? Verdict::True : Verdict::Unconfirmed;
}

MinimalType minimal_type(const Subalgebra& r, const Subalgebra& t) {
    if (r.parent() != t.parent()) throw ParentMismatch();
    if (!t.space().containsSubspace(r.space()) || r == t)
        throw InvalidPrecondition("minimal_type needs R strictly inside T");
    Rebased rb = rebase(t);
    Subalgebra rloc{rb.restrictSubspace(r.space())};
    const AlgebraPtr& amb = rb.algebra;

    MinimalType out;
    IdealOf m = conductor(rloc, amb);
    out.conductor_m = IdealOf(r, rb.liftSubspace(m.space()));
    std::vector<IdealOf> max_r = maximal_ideals(rloc);
    bool m_maximal = false;
    for (const IdealOf& mr : max_r)
        if (mr.space() == m.space()) { m_maximal = true; break; }
    if (!m_maximal) return out;  // NotMinimal

    size_t deg_r = residue_field(rloc, m).degree();
    out.residue_degree_base = deg_r;
    auto full = Subalgebra::full(amb);
    std::vector<IdealOf> over_m;
    for (const IdealOf& n : maximal_ideals(full))
        if (n.space().containsSubspace(m.space())) over_m.push_back(n);

    // inert: M stays maximal in T and the residue extension has prime degree
    for (const IdealOf& n : over_m) {
        if (n.space() != m.space()) continue;
        size_t deg_t = residue_field(full, n).degree();
        if (deg_t % deg_r == 0 && is_prime_size(deg_t / deg_r)) {
            out.kind = MinimalKind::Inert;
            out.residue_degree_top = deg_t;
            out.witnesses.push_back(IdealOf(t, rb.liftSubspace(n.space())));
            return out;
        }
        return out;  // M in Max(T) but residue extension not minimal
    }

    // decomposed: two ideals over M, meeting in M, both residues isomorphic to R/M
    if (over_m.size() == 2) {
        const IdealOf& n1 = over_m[0];
        const IdealOf& n2 = over_m[1];
        if (n1.space().intersect(n2.space()) == m.space() &&
            residue_field(full, n1).degree() == deg_r &&
            residue_field(full, n2).degree() == deg_r) {
            out.kind = MinimalKind::Decomposed;
            out.residue_degree_top = deg_r;
            out.witnesses.push_back(IdealOf(t, rb.liftSubspace(n1.space())));
            out.witnesses.push_back(IdealOf(t, rb.liftSubspace(n2.space())));
            return out;
        }
    }

    // ramified: a single N over M with N^2 inside M, T/M two-dimensional over
    // R/M, and an isomorphic residue
    if (over_m.size() == 1) {
        const IdealOf& n = over_m[0];
        const Mat& nrows = n.space().basis().rows;
        Mat sq;
        for (size_t i = 0; i < nrows.size(); ++i)
            for (size_t j = i; j < nrows.size(); ++j)
                sq.push_back(amb->mulCoords(nrows[i], nrows[j]));
        Subspace n2(amb, std::move(sq));
        bool square_in_m = m.space().containsSubspace(n2);
        bool strict = n.dim() > m.dim();
        bool two_dim = amb->dim() == m.dim() + 2 * deg_r;
        bool residue_iso = residue_field(full, n).degree() == deg_r;
        if (square_in_m && strict && two_dim && residue_iso) {
            out.kind = MinimalKind::Ramified;
            out.residue_degree_top = deg_r;
            out.witnesses.push_back(IdealOf(t, rb.liftSubspace(n.space())));
            return out;
        }
    }
    return out;  // NotMinimal
}

bool minimal_oracle(const Subalgebra& r, const Subalgebra& t, const ClosureOptions& opts) {
    if (r.parent() != t.parent()) throw ParentMismatch();
    if (!t.space().containsSubspace(r.space()) || r == t)
        throw InvalidPrecondition("minimal_oracle needs R strictly inside T");
    const AlgebraPtr& s = r.parent();
    bool minimal = true;
    if (s->field()->isFinite()) {
        for_each_coset_rep(r.space(), t.space(), opts.scan_cap, [&](const Vec& b) {
            if (!minimal || r.contains(b)) return;
            Subalgebra u = generated_subalgebra(r, {s->element(b)});
            if (u.space() != t.space()) minimal = false;
        });
        return minimal;
    }
    // infinite fields: candidate scan, refutation-only
    std::vector<Vec> cands;
    const Mat& trows = t.space().basis().rows;
    for (const Vec& v : trows) cands.push_back(v);
    for (size_t i = 0; i < trows.size(); ++i)
        for (size_t j = i; j < trows.size(); ++j) {
            cands.push_back(vec_add(trows[i], trows[j]));
            cands.push_back(s->mulCoords(trows[i], trows[j]));
        }
    std::mt19937_64 rng(opts.seed);
    const FieldPtr& field = s->field();
    for (unsigned trial = 0; trial < opts.sample_budget; ++trial) {
        Vec v = zero_vec(field, s->dim());
        for (const Vec& row : trows)
            v = vec_add(v, vec_scale(row, random_scalar(field, 1, rng)));
        cands.push_back(std::move(v));
    }
    for (const Vec& b : cands) {
        if (r.contains(b)) continue;
        Subalgebra u = generated_subalgebra(r, {s->element(b)});
        if (u.space() != t.space()) return false;
    }
    return true;
}

CanonicalChain canonical_chain(const Subalgebra& r, const AlgebraPtr& s,
                               const ClosureOptions& opts) {
    ClosureResult plus = seminormalization(r, s, opts);
    ClosureResult t = t_closure(r, s, opts);
    CanonicalChain out{r, plus.ring, t.ring, Subalgebra::full(s),
                       plus.exactness, t.exactness};
    if (!out.plus.space().containsSubspace(out.r.space()) ||
        !out.t.space().containsSubspace(out.plus.space()))
        throw BadAlgebra("canonical chain is not nested");
    return out;
}

std::vector<MinimalType> tower_type_profile(const std::vector<Subalgebra>& chain) {
    if (chain.size() < 2) throw InvalidPrecondition("tower profile needs at least two rings");
    std::vector<MinimalType> out;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        MinimalType mt = minimal_type(chain[i], chain[i + 1]);
        if (mt.kind == MinimalKind::NotMinimal)
            throw NotAMinimalStep("step " + std::to_string(i));
        out.push_back(std::move(mt));
    }
    return out;
}

} // namespace ringlat
