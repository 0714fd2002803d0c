#include "ringlat/ringstruct.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ringlat {

namespace {

unsigned p_power_at_least(unsigned p, size_t n) {
    unsigned e = 0;
    std::uint64_t v = 1;
    while (v < n) { v *= p; ++e; }
    return e;
}

} // namespace

IdealOf nilradical(const AlgebraPtr& s) {
    const FieldPtr& field = s->field();
    const size_t n = s->dim();
    const unsigned p = field->characteristic();
    // x = sum c_i e_i gives x^p = sum c_i^p e_i^p; x^p lies in W iff the
    // residual of sum c_i^p (e_i^p) against W vanishes, which after p-basis
    // expansion of each coordinate is a plain linear system in the c_i.
    std::vector<Vec> basis_p(n);
    for (size_t i = 0; i < n; ++i)
        basis_p[i] = s->basisElement(i).pow(p).coords();
    size_t mon_count = p_basis_monomials(field).size();

    Rref w;  // current candidate, grows until stable
    for (;;) {
        Mat a;
        for (size_t i = 0; i < n; ++i) {
            Vec res = reduce_by(w, basis_p[i]);
            // column i of the system, laid out row-major later
            Mat comps(n);
            for (size_t l = 0; l < n; ++l) comps[l] = p_basis_expand(res[l]);
            if (a.empty()) a.assign(n * mon_count, zero_vec(field, n));
            for (size_t l = 0; l < n; ++l)
                for (size_t m = 0; m < mon_count; ++m)
                    a[l * mon_count + m][i] = comps[l][m];
        }
        Rref ker = null_space(a, field, n);
        if (ker.rows == w.rows) break;
        w = std::move(ker);
    }

    Subspace space(s, w.rows);
    for (const Vec& b : space.basis().rows)
        if (!s->element(b).pow(n).isZero())
            throw BadAlgebra("nilradical candidate is not nilpotent");
    return IdealOf(Subalgebra::full(s), std::move(space));
}

bool is_unit(const Element& a) {
    const AlgebraPtr& s = a.parent();
    Mat rows;
    for (size_t i = 0; i < s->dim(); ++i)
        rows.push_back(s->mulCoords(a.coords(), unit_vec(s->field(), s->dim(), i)));
    return rank_of(std::move(rows)) == s->dim();
}

bool is_idempotent(const Element& a) { return a * a == a; }

bool is_nilpotent(const Element& a) { return a.pow(a.parent()->dim()).isZero(); }

poly::Poly minimal_polynomial(const Element& a) {
    const AlgebraPtr& s = a.parent();
    const FieldPtr& field = s->field();
    Mat powers{s->unitCoords()};
    Element cur = s->one();
    for (;;) {
        Element next = cur * a;
        // solve sum x_i a^i = a^k against the recorded powers
        Mat cols = transpose(powers, field, s->dim());
        auto x = solve(cols, next.coords(), field, powers.size());
        if (x) {
            poly::Poly mu;
            for (const Scalar& c : *x) mu.push_back(-c);
            mu.push_back(field->one());
            return mu;
        }
        powers.push_back(next.coords());
        cur = next;
    }
}

namespace {

std::optional<Scalar> find_root(const poly::Poly& mu, const FieldPtr& field) {
    int d = poly::deg(mu);
    if (d <= 0) return std::nullopt;
    if (field->isFinite()) {
        for (const Scalar& x : enumerate_scalars(field))
            if (poly::eval(mu, x).isZero()) return x;
        return std::nullopt;
    }
    if (d == 1) return -mu[0] / mu[1];
    poly::Poly m = poly::monic(mu);
    if (d == 2) {
        Scalar alpha = m[1], beta = m[0];
        if (field->characteristic() != 2) {
            Scalar two = field->fromInt(2);
            Scalar disc = alpha * alpha - two * two * beta;
            auto sq = scalar_sqrt(disc);
            if (sq) return (-alpha + *sq) / two;
        } else if (alpha.isZero()) {
            return is_pth_power(beta);  // double root; caller rejects it
        }
    }
    // low-cost candidate scan for the remaining shapes
    std::vector<Scalar> cands{field->zero(), field->one(), -field->one()};
    for (const Scalar& c : m) {
        cands.push_back(c);
        cands.push_back(-c);
    }
    for (const Scalar& x : cands)
        if (poly::eval(mu, x).isZero()) return x;
    return std::nullopt;
}

std::optional<Element> idempotent_from_root(const AlgebraPtr& q, const Element& b,
                                            const poly::Poly& mu, const Scalar& lambda) {
    const FieldPtr& field = q->field();
    poly::Poly lin{-lambda, field->one()};
    auto [rho, rem] = poly::divmod(mu, lin);
    if (!poly::is_zero(rem)) return std::nullopt;
    if (poly::eval(rho, lambda).isZero()) return std::nullopt;  // repeated root
    auto eg = poly::ext_gcd(lin, rho);
    if (poly::deg(eg.g) != 0) return std::nullopt;
    // e = (v * rho)(b) / g is 1 on the (X-lambda) block, 0 on the rho block
    poly::Poly ep = poly::scale(poly::mul(eg.v, rho), eg.g[0].inverse());
    Element e = q->zero();
    Element pw = q->one();
    for (const Scalar& c : ep) {
        e = e + pw.scaled(c);
        pw = pw * b;
    }
    if (!is_idempotent(e) || e.isZero() || e == q->one()) return std::nullopt;
    return e;
}

/// Nontrivial idempotent of a reduced algebra, or nullopt when the algebra is
/// certified local. Throws UnsupportedDecomposition when neither is reached.
std::optional<Element> find_idempotent_reduced(const AlgebraPtr& q) {
    const FieldPtr& field = q->field();
    const size_t n = q->dim();
    if (field->isFinite()) {
        // fixed algebra of the q-power Frobenius: x -> x^q is linear, its
        // fixed space has one dimension per local factor
        std::uint64_t ord = field->order();
        Mat frob;
        for (size_t i = 0; i < n; ++i)
            frob.push_back(q->basisElement(i).pow(ord).coords());
        for (size_t i = 0; i < n; ++i)
            frob[i][i] = frob[i][i] - field->one();
        Rref fixed = left_kernel(frob, field, n);
        if (fixed.rows.size() <= 1) return std::nullopt;  // local
        Rref unit_line = rref(Mat{q->unitCoords()});
        for (const Vec& row : fixed.rows) {
            if (in_span(unit_line, row)) continue;
            Element b = q->element(row);
            poly::Poly mu = minimal_polynomial(b);
            // b^q = b, so mu splits into distinct linear factors over K
            for (const Scalar& x : enumerate_scalars(field)) {
                if (!poly::eval(mu, x).isZero()) continue;
                auto e = idempotent_from_root(q, b, mu, x);
                if (e) return e;
            }
        }
        throw UnsupportedDecomposition("no splitting idempotent found in the fixed algebra");
    }
    // purely-inseparable certificate: if every basis element has a p-power in
    // K*1, every nonzero element of the reduced algebra is a unit, so it is a
    // field and the algebra is local
    const unsigned p = field->characteristic();
    Rref unit_line = rref(Mat{q->unitCoords()});
    bool all_inseparable = true;
    for (size_t i = 0; i < n && all_inseparable; ++i) {
        Element y = q->basisElement(i);
        bool ok = false;
        for (std::uint64_t pe = 1; pe <= n; pe *= p) {
            if (in_span(unit_line, y.coords())) { ok = true; break; }
            y = y.pow(p);
        }
        if (!ok) ok = in_span(unit_line, y.coords());
        all_inseparable = ok;
    }
    if (all_inseparable) return std::nullopt;
    for (size_t i = 0; i < n; ++i) {
        Element b = q->basisElement(i);
        poly::Poly mu = minimal_polynomial(b);
        if (poly::deg(mu) < 2) continue;
        auto lambda = find_root(mu, field);
        if (!lambda) continue;
        auto e = idempotent_from_root(q, b, mu, *lambda);
        if (e) return e;
    }
    throw UnsupportedDecomposition("algebra over an infinite field is neither certified local nor splittable here");
}

std::vector<Element> primitive_idempotents_reduced(const AlgebraPtr& q) {
    if (q->dim() == 1) return {q->one()};
    auto e = find_idempotent_reduced(q);
    if (!e) return {q->one()};
    Element f = q->one() - *e;
    auto span_of = [&](const Element& u) {
        Mat rows;
        for (size_t i = 0; i < q->dim(); ++i)
            rows.push_back((u * q->basisElement(i)).coords());
        return Subspace(q, std::move(rows));
    };
    QuotientAlgebra q1 = quotient_algebra(q, IdealOf(Subalgebra::full(q), span_of(f)));
    QuotientAlgebra q2 = quotient_algebra(q, IdealOf(Subalgebra::full(q), span_of(*e)));
    std::vector<Element> out;
    for (const Element& u : primitive_idempotents_reduced(q1.algebra))
        out.push_back(q->element(q1.section(u.coords())) * *e);
    for (const Element& u : primitive_idempotents_reduced(q2.algebra))
        out.push_back(q->element(q2.section(u.coords())) * f);
    return out;
}

LocalDecomposition compute_decomposition(const AlgebraPtr& s) {
    const FieldPtr& field = s->field();
    const size_t n = s->dim();
    const unsigned p = field->characteristic();
    IdealOf nil = nilradical(s);

    std::vector<Element> idem;
    if (nil.dim() == 0) {
        idem = primitive_idempotents_reduced(s);
    } else {
        QuotientAlgebra quo = quotient_algebra(s, nil);
        std::uint64_t lift_pow = 1;
        for (unsigned e = p_power_at_least(p, n + 1); e > 0; --e) lift_pow *= p;
        for (const Element& eq : primitive_idempotents_reduced(quo.algebra)) {
            // a section of an idempotent-mod-nilpotents becomes idempotent
            // after raising to a large p-th power
            Element x = s->element(quo.section(eq.coords())).pow(lift_pow);
            if (!is_idempotent(x)) throw BadAlgebra("idempotent lifting failed");
            idem.push_back(x);
        }
    }
    std::sort(idem.begin(), idem.end(), [](const Element& a, const Element& b) {
        for (size_t i = 0; i < a.coords().size(); ++i)
            if (a.coords()[i] != b.coords()[i]) return a.coords()[i] < b.coords()[i];
        return false;
    });

    LocalDecomposition out;
    out.algebra = s;
    out.idempotents = idem;
    Element sum = s->zero();
    for (size_t i = 0; i < idem.size(); ++i) {
        for (size_t j = i + 1; j < idem.size(); ++j)
            if (!(idem[i] * idem[j]).isZero())
                throw BadAlgebra("idempotents are not orthogonal");
        sum = sum + idem[i];
    }
    if (sum != s->one()) throw BadAlgebra("idempotents do not sum to 1");

    size_t dim_sum = 0;
    for (const Element& e : idem) {
        Element f = s->one() - e;
        Mat rows;
        for (size_t i = 0; i < n; ++i)
            rows.push_back((f * s->basisElement(i)).coords());
        QuotientAlgebra factor =
            quotient_algebra(s, IdealOf(Subalgebra::full(s), Subspace(s, std::move(rows))));
        IdealOf fnil = nilradical(factor.algebra);
        Mat mrows = factor.ideal_basis.rows;
        for (const Vec& r : fnil.space().basis().rows)
            mrows.push_back(factor.section(r));
        out.max_ideals.emplace_back(Subalgebra::full(s), Subspace(s, std::move(mrows)));
        dim_sum += factor.algebra->dim();
        out.factors.push_back(std::move(factor));
    }
    if (dim_sum != n) throw BadAlgebra("local factor dimensions do not sum up");
    return out;
}

std::mutex decomposition_mutex;
// entries are append-only: returned references must stay valid for the
// lifetime of the process, and the stored shared_ptr keeps each algebra
// alive so matching on the raw pointer cannot alias a recycled address
std::map<std::string, std::vector<std::shared_ptr<LocalDecomposition>>> decomposition_cache;

} // namespace

const LocalDecomposition& local_decomposition(const AlgebraPtr& s) {
    std::string key = s->key();
    {
        std::lock_guard<std::mutex> lock(decomposition_mutex);
        auto it = decomposition_cache.find(key);
        if (it != decomposition_cache.end())
            for (const auto& dec : it->second)
                if (dec->algebra == s) return *dec;
    }
    auto dec = std::make_shared<LocalDecomposition>(compute_decomposition(s));
    std::lock_guard<std::mutex> lock(decomposition_mutex);
    auto& slot = decomposition_cache[key];
    for (const auto& existing : slot)
        if (existing->algebra == s) return *existing;
    slot.push_back(dec);
    return *slot.back();
}

std::vector<IdealOf> maximal_ideals(const Subalgebra& t) {
    Rebased rb = rebase(t);
    const LocalDecomposition& dec = local_decomposition(rb.algebra);
    std::vector<IdealOf> out;
    for (const IdealOf& m : dec.max_ideals)
        out.emplace_back(t, rb.liftSubspace(m.space()));
    std::sort(out.begin(), out.end(), [](const IdealOf& a, const IdealOf& b) {
        return a.space().key() < b.space().key();
    });
    return out;
}

bool is_local(const Subalgebra& t) {
    return local_decomposition(rebase(t).algebra).isLocal();
}

bool is_reduced(const AlgebraPtr& a) { return nilradical(a).dim() == 0; }

bool is_field(const AlgebraPtr& a) {
    return is_reduced(a) && local_decomposition(a).isLocal();
}

Vec ResidueField::project(const Vec& ambient) const {
    return field.project(ring.toLocal(ambient));
}

ResidueField residue_field(const Subalgebra& t, const IdealOf& m) {
    ResidueField out;
    out.ring = rebase(t);
    Subspace mloc = out.ring.restrictSubspace(m.space());
    out.field = quotient_algebra(out.ring.algebra, IdealOf(Subalgebra::full(out.ring.algebra), mloc));
    if (!is_field(out.field.algebra))
        throw InvalidPrecondition("quotient by a non-maximal ideal is not a field");
    return out;
}

IdealOf conductor(const Subalgebra& r, const AlgebraPtr& s) {
    if (r.parent() != s) throw ParentMismatch();
    const FieldPtr& field = s->field();
    const size_t n = s->dim();
    const Rref& rb = r.space().basis();
    // x*e_j = sum_i c_i t[i][j] must reduce to zero against R, for all j
    Mat a(n * n, zero_vec(field, n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            Vec red = reduce_by(rb, s->tableEntry(i, j));
            for (size_t l = 0; l < n; ++l) a[j * n + l][i] = red[l];
        }
    Rref ker = null_space(a, field, n);
    Subspace c(s, ker.rows);
    // ideal of S as well as of R
    IdealOf of_s(Subalgebra::full(s), c);
    (void)of_s;
    return IdealOf(r, c);
}

IdealOf radical_in(const Subalgebra& t, const IdealOf& i) {
    if (i.owner() != t) throw InvalidPrecondition("ideal owner mismatch");
    if (i.dim() == t.dim()) return IdealOf(t, t.space());
    Rebased rb = rebase(t);
    Subspace iloc = rb.restrictSubspace(i.space());
    QuotientAlgebra quo =
        quotient_algebra(rb.algebra, IdealOf(Subalgebra::full(rb.algebra), iloc));
    IdealOf nil = nilradical(quo.algebra);
    Mat rows = iloc.basis().rows;
    for (const Vec& v : nil.space().basis().rows) rows.push_back(quo.section(v));
    return IdealOf(t, rb.liftSubspace(Subspace(rb.algebra, std::move(rows))));
}

CrucialReport crucial_report(const Subalgebra& r, const AlgebraPtr& s) {
    IdealOf c = conductor(r, s);
    std::vector<IdealOf> maxima = maximal_ideals(r);
    CrucialReport out{c, {}, std::nullopt};
    for (const IdealOf& m : maxima)
        if (m.space().containsSubspace(c.space())) out.msupp.push_back(m);
    if (out.msupp.size() == 1) out.crucial = radical_in(r, c);
    return out;
}

} // namespace ringlat
