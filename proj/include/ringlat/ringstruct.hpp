#ifndef RINGLAT_RINGSTRUCT_HPP
#define RINGLAT_RINGSTRUCT_HPP

#include <optional>

#include "ringlat/algebra.hpp"

namespace ringlat {

/// The ideal of nilpotent elements, computed as the stable kernel of the
/// additive p-th-power map (no factorization). Owner is the full algebra.
IdealOf nilradical(const AlgebraPtr& s);

bool is_unit(const Element& a);
bool is_idempotent(const Element& a);
bool is_nilpotent(const Element& a);

/// Monic minimal polynomial of a over the coefficient field (constant first).
poly::Poly minimal_polynomial(const Element& a);

/// Splitting of an algebra into its local factors: primitive orthogonal
/// idempotents summing to 1, each factor presented as the quotient by the
/// complementary ideal, plus the maximal ideals (their preimages).
struct LocalDecomposition {
    AlgebraPtr algebra;
    std::vector<Element> idempotents;        // primitive, orthogonal, sum 1
    std::vector<QuotientAlgebra> factors;    // S/(1-e_i)S, local
    std::vector<IdealOf> max_ideals;         // preimages of the factor radicals
    bool isLocal() const { return factors.size() == 1; }
};

/// Over finite fields this always succeeds (kernel of Frobenius-minus-identity
/// plus minimal-polynomial root splitting). Over rational-function fields the
/// supported cases are: certified local via the purely-inseparable test, or
/// splittable through roots of low-degree minimal polynomials; anything else
/// throws UnsupportedDecomposition. Results are memoized per algebra.
const LocalDecomposition& local_decomposition(const AlgebraPtr& s);

/// Maximal ideals of a subalgebra, as subspaces of the ambient algebra.
std::vector<IdealOf> maximal_ideals(const Subalgebra& t);
bool is_local(const Subalgebra& t);
bool is_field(const AlgebraPtr& a);
bool is_reduced(const AlgebraPtr& a);

/// T/M presented as a standalone algebra over the coefficient field, with the
/// composed projection from ambient coordinates.
struct ResidueField {
    Rebased ring;           // T with its own structure constants
    QuotientAlgebra field;  // ring.algebra modulo M
    Vec project(const Vec& ambient) const;
    size_t degree() const { return field.algebra->dim(); }  // over the base field
};

ResidueField residue_field(const Subalgebra& t, const IdealOf& m);

/// (R : S) = {x in S : x*S is contained in R}; an ideal of both R and S.
IdealOf conductor(const Subalgebra& r, const AlgebraPtr& s);

/// Radical of an ideal of T: preimage of the nilradical of T/I.
IdealOf radical_in(const Subalgebra& t, const IdealOf& i);

/// Conductor, its support among Max(R), and the crucial maximal ideal when
/// the support is a singleton (then it equals the radical of the conductor).
struct CrucialReport {
    IdealOf conductor;
    std::vector<IdealOf> msupp;
    std::optional<IdealOf> crucial;
};

CrucialReport crucial_report(const Subalgebra& r, const AlgebraPtr& s);

} // namespace ringlat

#endif
