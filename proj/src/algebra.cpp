#include "ringlat/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ringlat {

namespace {

std::string default_name(size_t i) { return "e" + std::to_string(i); }

} // namespace

AlgebraPtr Algebra::make(FieldPtr field, size_t dim,
                         std::vector<std::vector<Vec>> table, Vec unit,
                         std::vector<std::string> basis_names) {
    if (!field) throw BadAlgebra("null field");
    if (dim == 0) throw BadAlgebra("dimension must be positive");
    if (table.size() != dim) throw BadAlgebra("table has wrong row count");
    for (size_t i = 0; i < dim; ++i) {
        if (table[i].size() != dim) throw BadAlgebra("table row " + std::to_string(i) + " has wrong length");
        for (size_t j = 0; j < dim; ++j) {
            if (table[i][j].size() != dim)
                throw BadAlgebra("table entry (" + std::to_string(i) + "," + std::to_string(j) + ") has wrong length");
            for (const Scalar& c : table[i][j])
                if (!c.field() || !c.field()->same(field))
                    throw DescriptorMismatch("structure constant from a different field");
        }
    }
    if (unit.size() != dim) throw BadAlgebra("unit vector has wrong length");
    for (const Scalar& c : unit)
        if (!c.field() || !c.field()->same(field))
            throw DescriptorMismatch("unit coordinate from a different field");
    if (basis_names.empty())
        for (size_t i = 0; i < dim; ++i) basis_names.push_back(default_name(i));
    if (basis_names.size() != dim) throw BadAlgebra("basis name count does not match dimension");

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->field_ = std::move(field);
    alg->dim_ = dim;
    alg->table_ = std::move(table);
    alg->unit_ = std::move(unit);
    alg->names_ = std::move(basis_names);

    const auto& t = alg->table_;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            if (t[i][j] != t[j][i])
                throw BadAlgebra("not commutative at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (size_t i = 0; i < dim; ++i) {
        Vec ei = unit_vec(alg->field_, dim, i);
        if (alg->mulCoords(alg->unit_, ei) != ei)
            throw BadAlgebra("unit law fails at basis element " + std::to_string(i));
    }
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            Vec ij = t[i][j];
            for (size_t k = 0; k < dim; ++k) {
                Vec left = alg->mulCoords(ij, unit_vec(alg->field_, dim, k));
                Vec right = alg->mulCoords(unit_vec(alg->field_, dim, i), t[j][k]);
                if (left != right)
                    throw BadAlgebra("not associative at basis triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    return alg;
}

Vec Algebra::mulCoords(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(field_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i].isZero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (b[j].isZero()) continue;
            Scalar c = a[i] * b[j];
            const Vec& t = table_[i][j];
            for (size_t k = 0; k < dim_; ++k)
                if (!t[k].isZero()) out[k] = out[k] + c * t[k];
        }
    }
    return out;
}

Element Algebra::element(Vec coords) const {
    if (coords.size() != dim_) throw BadAlgebra("coordinate vector has wrong length");
    return Element(shared_from_this(), std::move(coords));
}

Element Algebra::zero() const { return Element(shared_from_this(), zero_vec(field_, dim_)); }
Element Algebra::one() const { return Element(shared_from_this(), unit_); }
Element Algebra::basisElement(size_t i) const {
    return Element(shared_from_this(), unit_vec(field_, dim_, i));
}

std::string Algebra::key() const {
    std::ostringstream os;
    os << field_->name() << "|" << dim_ << "|u:";
    for (const Scalar& c : unit_) os << c.key() << ",";
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            os << "|" << i << "." << j << ":";
            for (const Scalar& c : table_[i][j]) os << c.key() << ",";
        }
    return os.str();
}

Element::Element(AlgebraPtr parent, Vec coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {}

static void check_same_parent(const Element& a, const Element& b) {
    if (a.parent() != b.parent()) throw ParentMismatch();
}

Element Element::operator+(const Element& o) const {
    check_same_parent(*this, o);
    return Element(parent_, vec_add(coords_, o.coords_));
}

Element Element::operator-(const Element& o) const {
    check_same_parent(*this, o);
    return Element(parent_, vec_sub(coords_, o.coords_));
}

Element Element::operator*(const Element& o) const {
    check_same_parent(*this, o);
    return Element(parent_, parent_->mulCoords(coords_, o.coords_));
}

Element Element::scaled(const Scalar& c) const {
    return Element(parent_, vec_scale(coords_, c));
}

Element Element::pow(std::uint64_t n) const {
    Element acc = parent_->one();
    Element base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Element::operator==(const Element& o) const {
    check_same_parent(*this, o);
    return coords_ == o.coords_;
}

// --------------------------------------------------------------------------

Subspace::Subspace(AlgebraPtr parent, Mat rows) : parent_(std::move(parent)) {
    for (const Vec& r : rows)
        if (r.size() != parent_->dim())
            throw BadAlgebra("subspace row has wrong length");
    basis_ = rref(std::move(rows));
}

Subspace Subspace::zero(AlgebraPtr parent) { return Subspace(std::move(parent), Mat{}); }

Subspace Subspace::full(AlgebraPtr parent) {
    Mat rows;
    for (size_t i = 0; i < parent->dim(); ++i)
        rows.push_back(unit_vec(parent->field(), parent->dim(), i));
    return Subspace(std::move(parent), std::move(rows));
}

bool Subspace::containsSubspace(const Subspace& o) const {
    for (const Vec& r : o.basis_.rows)
        if (!contains(r)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (parent_ != o.parent_) throw ParentMismatch();
    Mat rows = basis_.rows;
    rows.insert(rows.end(), o.basis_.rows.begin(), o.basis_.rows.end());
    return Subspace(parent_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (parent_ != o.parent_) throw ParentMismatch();
    // kernel trick on the stacked basis: combinations of our rows that also
    // lie in o give the intersection.
    const size_t n = parent_->dim();
    const size_t a = basis_.rows.size(), b = o.basis_.rows.size();
    Mat stacked;
    for (size_t i = 0; i < a; ++i) stacked.push_back(basis_.rows[i]);
    for (size_t i = 0; i < b; ++i) stacked.push_back(o.basis_.rows[i]);
    Rref ker = left_kernel(stacked, parent_->field(), n);
    Mat rows;
    for (const Vec& x : ker.rows) {
        Vec v = zero_vec(parent_->field(), n);
        for (size_t i = 0; i < a; ++i)
            if (!x[i].isZero()) v = vec_add(v, vec_scale(basis_.rows[i], x[i]));
        rows.push_back(std::move(v));
    }
    return Subspace(parent_, std::move(rows));
}

bool Subspace::operator==(const Subspace& o) const {
    return parent_ == o.parent_ && basis_.rows == o.basis_.rows;
}

std::string Subspace::key() const {
    std::ostringstream os;
    for (const Vec& r : basis_.rows) {
        for (const Scalar& c : r) os << c.key() << ",";
        os << ";";
    }
    return os.str();
}

// --------------------------------------------------------------------------

Subalgebra::Subalgebra(Subspace space) : space_(std::move(space)) {
    const AlgebraPtr& s = space_.parent();
    if (!space_.contains(s->unitCoords()))
        throw BadAlgebra("subalgebra does not contain the unit");
    const Mat& rows = space_.basis().rows;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j)
            if (!space_.contains(s->mulCoords(rows[i], rows[j])))
                throw BadAlgebra("subspace not closed under multiplication");
}

Subalgebra Subalgebra::full(const AlgebraPtr& parent) {
    return Subalgebra(Subspace::full(parent));
}

Subalgebra Subalgebra::unitLine(const AlgebraPtr& parent) {
    return Subalgebra(Subspace(parent, Mat{parent->unitCoords()}));
}

IdealOf::IdealOf(Subalgebra owner, Subspace space)
    : owner_(std::move(owner)), space_(std::move(space)) {
    if (owner_.parent() != space_.parent()) throw ParentMismatch();
    if (!owner_.space().containsSubspace(space_))
        throw NotAnIdeal("subspace not contained in the ring");
    const AlgebraPtr& s = space_.parent();
    for (const Vec& r : owner_.space().basis().rows)
        for (const Vec& x : space_.basis().rows)
            if (!space_.contains(s->mulCoords(r, x)))
                throw NotAnIdeal("subspace not closed under ring multiplication");
}

// --------------------------------------------------------------------------

Vec ProductAlgebra::embed(size_t factor, const Vec& v) const {
    Vec out = zero_vec(algebra->field(), algebra->dim());
    for (size_t i = 0; i < v.size(); ++i) out[offsets[factor] + i] = v[i];
    return out;
}

ProductAlgebra product_algebra(const std::vector<AlgebraPtr>& factors) {
    if (factors.empty()) throw BadAlgebra("product of zero factors");
    const FieldPtr& field = factors[0]->field();
    size_t dim = 0;
    std::vector<size_t> offsets;
    for (const AlgebraPtr& f : factors) {
        if (!f->field()->same(field))
            throw DescriptorMismatch("product factors over different fields");
        offsets.push_back(dim);
        dim += f->dim();
    }
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(field, dim)));
    Vec unit = zero_vec(field, dim);
    std::vector<std::string> names;
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        const Algebra& f = *factors[fi];
        size_t off = offsets[fi];
        for (size_t i = 0; i < f.dim(); ++i) {
            names.push_back(f.basisNames()[i] + "_" + std::to_string(fi));
            for (size_t j = 0; j < f.dim(); ++j) {
                const Vec& t = f.tableEntry(i, j);
                for (size_t k = 0; k < f.dim(); ++k)
                    table[off + i][off + j][off + k] = t[k];
            }
            unit[off + i] = f.unitCoords()[i];
        }
    }
    ProductAlgebra out;
    out.algebra = Algebra::make(field, dim, std::move(table), std::move(unit), std::move(names));
    out.factors = factors;
    out.offsets = std::move(offsets);
    return out;
}

AlgebraPtr truncated_poly_algebra(const FieldPtr& field, unsigned m, NilRelations rel) {
    if (rel == NilRelations::SquaresAndProducts) {
        // basis 1, x_1, ..., x_m with x_i x_j = 0
        size_t dim = m + 1;
        std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(field, dim)));
        for (size_t i = 0; i < dim; ++i) {
            table[0][i] = unit_vec(field, dim, i);
            table[i][0] = unit_vec(field, dim, i);
        }
        std::vector<std::string> names{"1"};
        for (unsigned i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
        return Algebra::make(field, dim, std::move(table), unit_vec(field, dim, 0), std::move(names));
    }
    // monomial basis indexed by subsets of {1..m}; product = union when
    // disjoint, zero otherwise
    size_t dim = size_t{1} << m;
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(field, dim)));
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = 0; b < dim; ++b)
            if ((a & b) == 0) table[a][b][a | b] = field->one();
    std::vector<std::string> names;
    for (size_t a = 0; a < dim; ++a) {
        if (a == 0) { names.push_back("1"); continue; }
        std::string n;
        for (unsigned i = 0; i < m; ++i)
            if (a & (size_t{1} << i)) n += "x" + std::to_string(i + 1);
        names.push_back(n);
    }
    return Algebra::make(field, dim, std::move(table), unit_vec(field, dim, 0), std::move(names));
}

AlgebraPtr field_algebra(const FieldPtr& field) {
    std::vector<std::vector<Vec>> table(1, std::vector<Vec>(1, Vec{field->one()}));
    return Algebra::make(field, 1, std::move(table), Vec{field->one()}, {"1"});
}

AlgebraPtr monogenic_extension(const AlgebraPtr& base, const std::vector<Element>& coeffs) {
    const size_t d = coeffs.size();
    if (d == 0) throw BadAlgebra("monogenic extension needs degree >= 1");
    for (const Element& c : coeffs)
        if (c.parent().get() != base.get()) throw ParentMismatch();
    const FieldPtr& field = base->field();
    const size_t n = base->dim();
    const size_t dim = n * d;  // basis e_i * X^s, index s*n + i

    // X^d = -(c_0 + c_1 X + ... + c_{d-1} X^{d-1})
    // reduce a coordinate vector with one extra block at degree d
    auto reduce_top = [&](std::vector<Vec>& blocks) {
        // blocks has d+1 entries of base coordinates
        Vec top = blocks[d];
        if (!vec_is_zero(top)) {
            for (size_t s = 0; s < d; ++s) {
                Vec prod = base->mulCoords(top, coeffs[s].coords());
                blocks[s] = vec_sub(blocks[s], prod);
            }
            blocks[d] = zero_vec(field, n);
        }
    };

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(field, dim)));
    for (size_t s = 0; s < d; ++s)
        for (size_t i = 0; i < n; ++i)
            for (size_t t = 0; t < d; ++t)
                for (size_t j = 0; j < n; ++j) {
                    // (e_i X^s)(e_j X^t) = (e_i e_j) X^(s+t), then reduce
                    Vec prod = base->mulCoords(unit_vec(field, n, i), unit_vec(field, n, j));
                    std::vector<Vec> blocks(d + 1, zero_vec(field, n));
                    size_t st = s + t;
                    if (st <= d) {
                        blocks[st] = prod;
                        reduce_top(blocks);
                    } else {
                        // st <= 2d-2: write X^st = X^(st-d) * X^d and reduce
                        // twice; the first reduction can spill to degree d
                        // again when st - d + s' >= d.
                        std::vector<Vec> wide(2 * d, zero_vec(field, n));
                        wide[st] = prod;
                        for (size_t deg = 2 * d - 1; deg >= d; --deg) {
                            Vec top = wide[deg];
                            if (vec_is_zero(top)) continue;
                            for (size_t sprime = 0; sprime < d; ++sprime)
                                wide[deg - d + sprime] =
                                    vec_sub(wide[deg - d + sprime],
                                            base->mulCoords(top, coeffs[sprime].coords()));
                            wide[deg] = zero_vec(field, n);
                        }
                        for (size_t deg = 0; deg < d; ++deg) blocks[deg] = wide[deg];
                    }
                    Vec& out = table[s * n + i][t * n + j];
                    for (size_t deg = 0; deg < d; ++deg)
                        for (size_t k = 0; k < n; ++k) out[deg * n + k] = blocks[deg][k];
                }
    Vec unit = zero_vec(field, dim);
    for (size_t i = 0; i < n; ++i) unit[i] = base->unitCoords()[i];
    std::vector<std::string> names;
    for (size_t s = 0; s < d; ++s)
        for (size_t i = 0; i < n; ++i) {
            std::string b = base->basisNames()[i];
            if (s == 0) names.push_back(b);
            else {
                std::string xs = s == 1 ? "X" : "X^" + std::to_string(s);
                names.push_back(b == "1" ? xs : b + "*" + xs);
            }
        }
    return Algebra::make(field, dim, std::move(table), std::move(unit), std::move(names));
}

// --------------------------------------------------------------------------

Vec QuotientAlgebra::project(const Vec& v) const {
    Vec red = reduce_by(ideal_basis, v);
    Vec out;
    out.reserve(rep_cols.size());
    for (size_t c : rep_cols) out.push_back(red[c]);
    return out;
}

Vec QuotientAlgebra::section(const Vec& v) const {
    Vec out = zero_vec(source->field(), source->dim());
    for (size_t i = 0; i < rep_cols.size(); ++i) out[rep_cols[i]] = v[i];
    return reduce_by(ideal_basis, out);
}

Subspace QuotientAlgebra::projectSubspace(const Subspace& s) const {
    Mat rows;
    for (const Vec& r : s.basis().rows) rows.push_back(project(r));
    return Subspace(algebra, std::move(rows));
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& s, const IdealOf& ideal) {
    if (ideal.owner().parent() != s || ideal.owner().dim() != s->dim())
        throw InvalidPrecondition("quotient requires an ideal of the full algebra");
    QuotientAlgebra q;
    q.source = s;
    q.ideal_basis = ideal.space().basis();
    std::vector<bool> is_pivot(s->dim(), false);
    for (size_t p : q.ideal_basis.pivots) is_pivot[p] = true;
    for (size_t c = 0; c < s->dim(); ++c)
        if (!is_pivot[c]) q.rep_cols.push_back(c);
    const size_t dim = q.rep_cols.size();
    if (dim == 0) throw InvalidPrecondition("quotient by the whole algebra");
    const FieldPtr& field = s->field();

    auto project_raw = [&](const Vec& v) {
        Vec red = reduce_by(q.ideal_basis, v);
        Vec out;
        out.reserve(dim);
        for (size_t c : q.rep_cols) out.push_back(red[c]);
        return out;
    };

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(field, dim)));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            Vec prod = s->mulCoords(unit_vec(field, s->dim(), q.rep_cols[i]),
                                    unit_vec(field, s->dim(), q.rep_cols[j]));
            table[i][j] = project_raw(prod);
        }
    Vec unit = project_raw(s->unitCoords());
    std::vector<std::string> names;
    for (size_t c : q.rep_cols) names.push_back(s->basisNames()[c]);
    q.algebra = Algebra::make(field, dim, std::move(table), std::move(unit), std::move(names));
    return q;
}

// --------------------------------------------------------------------------

Subalgebra generated_subalgebra_span(const Subalgebra& r, const Subspace& extra) {
    if (r.parent() != extra.parent()) throw ParentMismatch();
    const AlgebraPtr& s = r.parent();
    Subspace w = r.space().sum(extra);
    for (;;) {
        Mat prods;
        const Mat& rows = w.basis().rows;
        bool closed = true;
        for (size_t i = 0; i < rows.size() && closed; ++i)
            for (size_t j = i; j < rows.size(); ++j) {
                Vec p = s->mulCoords(rows[i], rows[j]);
                if (!w.contains(p)) { prods.push_back(std::move(p)); closed = false; break; }
            }
        if (closed) break;
        // add all products at once before re-reducing
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i; j < rows.size(); ++j)
                prods.push_back(s->mulCoords(rows[i], rows[j]));
        w = w.sum(Subspace(s, std::move(prods)));
    }
    return Subalgebra(std::move(w));
}

Subalgebra generated_subalgebra(const Subalgebra& r, const std::vector<Element>& gens) {
    Mat rows;
    for (const Element& g : gens) {
        if (g.parent() != r.parent()) throw ParentMismatch();
        rows.push_back(g.coords());
    }
    return generated_subalgebra_span(r, Subspace(r.parent(), std::move(rows)));
}

Subalgebra join_subalgebras(const Subalgebra& a, const Subalgebra& b) {
    return generated_subalgebra_span(a, b.space());
}

// --------------------------------------------------------------------------

std::uint64_t coset_count(const Subspace& v, const Subspace& w) {
    if (!w.containsSubspace(v))
        throw InvalidPrecondition("coset enumeration requires nested subspaces");
    const FieldPtr& field = v.parent()->field();
    if (!field->isFinite()) throw InfiniteField("coset enumeration");
    std::uint64_t q = field->order();
    std::uint64_t n = 1;
    for (size_t i = v.dim(); i < w.dim(); ++i) {
        if (n > UINT64_MAX / q) return UINT64_MAX;
        n *= q;
    }
    return n;
}

void for_each_coset_rep(const Subspace& v, const Subspace& w, std::uint64_t cap,
                        const std::function<void(const Vec&)>& fn) {
    std::uint64_t count = coset_count(v, w);
    if (count > cap)
        throw ScanCapExceeded(std::to_string(count) + " cosets exceed cap " + std::to_string(cap));
    const FieldPtr& field = v.parent()->field();
    // complement basis: rows of w not reducible into v
    Mat comp;
    {
        Rref acc = v.basis();
        for (const Vec& r : w.basis().rows) {
            if (in_span(acc, r)) continue;
            comp.push_back(r);
            Mat rows = acc.rows;
            rows.push_back(r);
            acc = rref(std::move(rows));
        }
    }
    std::vector<Scalar> elems = enumerate_scalars(field);
    const size_t k = comp.size();
    std::vector<size_t> idx(k, 0);
    const size_t n = v.parent()->dim();
    for (;;) {
        Vec rep = zero_vec(field, n);
        for (size_t i = 0; i < k; ++i)
            if (!elems[idx[i]].isZero()) rep = vec_add(rep, vec_scale(comp[i], elems[idx[i]]));
        fn(rep);
        size_t pos = 0;
        while (pos < k && ++idx[pos] == elems.size()) { idx[pos] = 0; ++pos; }
        if (pos == k) break;
    }
}

std::vector<Vec> coset_representatives(const Subspace& v, const Subspace& w,
                                       std::uint64_t cap) {
    std::vector<Vec> out;
    for_each_coset_rep(v, w, cap, [&](const Vec& r) { out.push_back(r); });
    return out;
}

// --------------------------------------------------------------------------

Vec Rebased::toAmbient(const Vec& local) const {
    Vec out = zero_vec(ambient->field(), ambient->dim());
    for (size_t i = 0; i < basis_rows.size(); ++i)
        if (!local[i].isZero()) out = vec_add(out, vec_scale(basis_rows[i], local[i]));
    return out;
}

Vec Rebased::toLocal(const Vec& amb) const {
    Rref b;
    b.rows = basis_rows;
    for (const Vec& r : basis_rows) {
        size_t p = 0;
        while (p < r.size() && r[p].isZero()) ++p;
        b.pivots.push_back(p);
    }
    auto c = coords_in(b, amb);
    if (!c) throw InvalidPrecondition("vector not in the subalgebra");
    return *c;
}

Subspace Rebased::liftSubspace(const Subspace& local) const {
    Mat rows;
    for (const Vec& r : local.basis().rows) rows.push_back(toAmbient(r));
    return Subspace(ambient, std::move(rows));
}

Subspace Rebased::restrictSubspace(const Subspace& ambient_sub) const {
    Mat rows;
    for (const Vec& r : ambient_sub.basis().rows) rows.push_back(toLocal(r));
    return Subspace(algebra, std::move(rows));
}

Rebased rebase(const Subalgebra& t) {
    Rebased out;
    out.ambient = t.parent();
    out.basis_rows = t.space().basis().rows;
    const FieldPtr& field = out.ambient->field();
    const size_t k = out.basis_rows.size();
    Rref b = t.space().basis();
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, zero_vec(field, k)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Vec prod = out.ambient->mulCoords(out.basis_rows[i], out.basis_rows[j]);
            auto c = coords_in(b, prod);
            if (!c) throw BadAlgebra("subalgebra basis products escape the span");
            table[i][j] = *c;
        }
    auto unit = coords_in(b, out.ambient->unitCoords());
    if (!unit) throw BadAlgebra("subalgebra misses the unit");
    std::vector<std::string> names;
    for (size_t i = 0; i < k; ++i) names.push_back("b" + std::to_string(i));
    out.algebra = Algebra::make(field, k, std::move(table), std::move(*unit), std::move(names));
    return out;
}

} // namespace ringlat
