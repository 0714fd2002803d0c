#ifndef RINGLAT_ALGEBRA_HPP
#define RINGLAT_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ringlat/matrix.hpp"

namespace ringlat {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Element;

/// Finite-dimensional commutative unital algebra over an exact field, given
/// by structure constants on a basis. Commutativity, associativity and the
/// unit law are checked on all basis tuples at construction.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr make(FieldPtr field, size_t dim,
                           std::vector<std::vector<Vec>> table, Vec unit,
                           std::vector<std::string> basis_names = {});

    const FieldPtr& field() const { return field_; }
    size_t dim() const { return dim_; }
    const Vec& tableEntry(size_t i, size_t j) const { return table_[i][j]; }
    const Vec& unitCoords() const { return unit_; }
    const std::vector<std::string>& basisNames() const { return names_; }

    Element element(Vec coords) const;
    Element zero() const;
    Element one() const;
    Element basisElement(size_t i) const;

    Vec mulCoords(const Vec& a, const Vec& b) const;

    std::string key() const;  // canonical serialization, cache key

private:
    Algebra() = default;
    FieldPtr field_;
    size_t dim_ = 0;
    std::vector<std::vector<Vec>> table_;
    Vec unit_;
    std::vector<std::string> names_;
};

class Element {
public:
    Element() = default;
    Element(AlgebraPtr parent, Vec coords);

    const AlgebraPtr& parent() const { return parent_; }
    const Vec& coords() const { return coords_; }
    bool isZero() const { return vec_is_zero(coords_); }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element scaled(const Scalar& c) const;
    Element pow(std::uint64_t n) const;  // square-and-multiply
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    AlgebraPtr parent_;
    Vec coords_;
};

/// A subspace of the underlying vector space of an algebra, kept in reduced
/// echelon form so equal subspaces have identical representations.
class Subspace {
public:
    Subspace(AlgebraPtr parent, Mat rows);
    static Subspace zero(AlgebraPtr parent);
    static Subspace full(AlgebraPtr parent);

    const AlgebraPtr& parent() const { return parent_; }
    const Rref& basis() const { return basis_; }
    size_t dim() const { return basis_.rows.size(); }

    bool contains(const Vec& v) const { return in_span(basis_, v); }
    bool contains(const Element& e) const { return contains(e.coords()); }
    bool containsSubspace(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    std::string key() const;

private:
    AlgebraPtr parent_;
    Rref basis_;
};

/// A subspace containing the unit and closed under multiplication.
class Subalgebra {
public:
    /// Validates the two closure conditions.
    explicit Subalgebra(Subspace space);

    static Subalgebra full(const AlgebraPtr& parent);
    /// The coefficient field embedded as F*1.
    static Subalgebra unitLine(const AlgebraPtr& parent);

    const Subspace& space() const { return space_; }
    const AlgebraPtr& parent() const { return space_.parent(); }
    size_t dim() const { return space_.dim(); }
    bool contains(const Vec& v) const { return space_.contains(v); }
    bool contains(const Element& e) const { return space_.contains(e); }
    bool operator==(const Subalgebra& o) const { return space_ == o.space_; }
    bool operator!=(const Subalgebra& o) const { return !(space_ == o.space_); }
    std::string key() const { return space_.key(); }

private:
    Subspace space_;
};

/// A subspace of a subalgebra closed under multiplication by it.
class IdealOf {
public:
    IdealOf(Subalgebra owner, Subspace space);

    const Subalgebra& owner() const { return owner_; }
    const Subspace& space() const { return space_; }
    size_t dim() const { return space_.dim(); }
    bool operator==(const IdealOf& o) const {
        return owner_ == o.owner_ && space_ == o.space_;
    }

private:
    Subalgebra owner_;
    Subspace space_;
};

// --------------------------------------------------------------------------
// constructors for the example families

struct ProductAlgebra {
    AlgebraPtr algebra;
    std::vector<AlgebraPtr> factors;
    std::vector<size_t> offsets;
    Vec embed(size_t factor, const Vec& v) const;
};

ProductAlgebra product_algebra(const std::vector<AlgebraPtr>& factors);

enum class NilRelations { SquaresOnly, SquaresAndProducts };

/// k[X_1..X_m]/({X_i^2}) (monomial basis, dim 2^m) or
/// k[X_1..X_m]/({X_i^2, X_i X_j}) (dim m+1).
AlgebraPtr truncated_poly_algebra(const FieldPtr& field, unsigned m, NilRelations rel);

/// base[X]/(X^d + c_{d-1} X^{d-1} + ... + c_0); coefficients are elements of
/// the base algebra, low degree first.
AlgebraPtr monogenic_extension(const AlgebraPtr& base, const std::vector<Element>& coeffs);

/// The coefficient field as a one-dimensional algebra.
AlgebraPtr field_algebra(const FieldPtr& field);

struct QuotientAlgebra {
    AlgebraPtr algebra;
    AlgebraPtr source;
    std::vector<size_t> rep_cols;  // non-pivot columns, the representatives
    Rref ideal_basis;
    Vec project(const Vec& v) const;
    Vec section(const Vec& v) const;
    Subspace projectSubspace(const Subspace& s) const;
};

QuotientAlgebra quotient_algebra(const AlgebraPtr& s, const IdealOf& ideal);

/// Smallest multiplication-closed subspace containing R, the unit and the
/// generators; closure by iterating W <- W + W*W.
Subalgebra generated_subalgebra(const Subalgebra& r, const std::vector<Element>& gens);
Subalgebra generated_subalgebra_span(const Subalgebra& r, const Subspace& extra);

Subalgebra join_subalgebras(const Subalgebra& a, const Subalgebra& b);

/// One representative per coset of V in W (q^(dim W - dim V) of them),
/// deterministic order. GF fields only.
void for_each_coset_rep(const Subspace& v, const Subspace& w, std::uint64_t cap,
                        const std::function<void(const Vec&)>& fn);
std::uint64_t coset_count(const Subspace& v, const Subspace& w);
std::vector<Vec> coset_representatives(const Subspace& v, const Subspace& w,
                                       std::uint64_t cap);

/// View a subalgebra as a standalone algebra (the table restricted to its
/// basis), with coordinate maps in both directions.
struct Rebased {
    AlgebraPtr algebra;
    AlgebraPtr ambient;
    Mat basis_rows;
    Vec toAmbient(const Vec& local) const;
    Vec toLocal(const Vec& ambient) const;  // throws if not in the subalgebra
    Subspace liftSubspace(const Subspace& local) const;
    Subspace restrictSubspace(const Subspace& ambient_sub) const;  // must be contained
};

Rebased rebase(const Subalgebra& t);

} // namespace ringlat

#endif
