#ifndef RINGLAT_POINTWISE_HPP
#define RINGLAT_POINTWISE_HPP

#include "ringlat/lattice.hpp"

namespace ringlat {

/// The three predicates: every R[x] is a minimal step over R; every
/// intermediate ring T has T inside S pointwise minimal; every R[x] is a
/// co-atom (R[x] inside S is a minimal step).
enum class PwProperty { Extension, Pair, CoPointwise };

inline const char* pw_property_name(PwProperty p) {
    switch (p) {
        case PwProperty::Extension: return "pointwise-minimal";
        case PwProperty::Pair: return "pointwise-minimal-pair";
        default: return "co-pointwise-minimal";
    }
}

/// One side of a dual verdict: either the element-by-element definition or
/// the structural characterization. `detail` names the clause that fired or
/// the condition that failed; witnesses are in ambient coordinates.
struct VerdictSide {
    Verdict verdict = Verdict::Unconfirmed;
    std::string detail;
    std::optional<Vec> witness_element;
    std::optional<Subalgebra> witness_ring;
};

/// Scans coset representatives x of R in S and tests that R inside R[x] is a
/// minimal step (classifier first, element scan as fallback). Exhaustive over
/// finite fields; over infinite fields a structured candidate scan that can
/// only refute or stay unconfirmed.
VerdictSide pw_minimal_by_definition(const Subalgebra& r, const AlgebraPtr& s,
                                     const ClosureOptions& opts = {});

/// Structural test: minimal shortcut; conductor maximal in R; then reduce
/// modulo the conductor to a field base k inside S' and decide through the
/// two clauses — (1) the seminormalization equals the t-closure, elementwise
/// squares of the nilradical vanish, and (when the t-closure is proper) every
/// element has its p-th power in k; (3) |k| = 2 with k inside S' seminormal
/// and infra-integral.
VerdictSide pw_minimal_by_characterization(const Subalgebra& r, const AlgebraPtr& s,
                                           const ClosureOptions& opts = {});

/// Enumerates the interval [R,S] and requires T inside S pointwise minimal
/// for every node T other than S itself. Finite fields only; over infinite
/// fields the verdict is unconfirmed.
VerdictSide pw_pair_by_definition(const Subalgebra& r, const AlgebraPtr& s,
                                  const ClosureOptions& opts = {});

/// Clauses after reduction to the field base: (1) t-closed and height-one
/// radicial; (2) subintegral with square-zero nilradical (full ideal square);
/// (4) |k| = 2, seminormal infra-integral, dimension at most 3 over k.
VerdictSide pw_pair_by_characterization(const Subalgebra& r, const AlgebraPtr& s,
                                        const ClosureOptions& opts = {});

/// Scans x outside R and requires R[x] to be a proper subring with
/// R[x] inside S a minimal step.
VerdictSide co_pw_by_definition(const Subalgebra& r, const AlgebraPtr& s,
                                const ClosureOptions& opts = {});

/// Clauses: (1) subintegral, the radical N of the conductor M satisfies
/// dim(N/M) = 2 over R/M and N^2 inside M; (2) |R/M| = 2 and S/M splits into
/// three copies of R/M; (3) S/M is a height-one radicial field extension of
/// R/M of degree p^2.
VerdictSide co_pw_by_characterization(const Subalgebra& r, const AlgebraPtr& s,
                                      const ClosureOptions& opts = {});

/// The four shapes a non-minimal pointwise minimal extension can take.
enum class CaseLabel { Subintegral, SeminormalInfraIntegral, TClosedRadicial, Mixed };

inline const char* case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Subintegral: return "(a) subintegral";
        case CaseLabel::SeminormalInfraIntegral: return "(b) seminormal infra-integral";
        case CaseLabel::TClosedRadicial: return "(c) t-closed radicial";
        default: return "(d) mixed";
    }
}

/// Requires a certified pointwise minimal non-minimal extension. In the
/// t-closed case the height-one radicial property is re-verified; in the
/// mixed case the tower step from the t-closure to S is re-certified
/// pointwise minimal.
CaseLabel case_label(const Subalgebra& r, const AlgebraPtr& s,
                     const ClosureOptions& opts = {});

struct PointwiseVerdict {
    PwProperty property;
    VerdictSide by_definition;
    VerdictSide by_characterization;
    std::optional<CaseLabel> label;  // extensions only: certified true, non-minimal
};

/// Runs both sides and checks their agreement: two certified verdicts that
/// disagree are a hard error (BadAlgebra).
PointwiseVerdict pointwise_verdict(PwProperty property, const Subalgebra& r,
                                   const AlgebraPtr& s, const ClosureOptions& opts = {});

/// The dimension/length laws of pointwise minimal extensions, per case:
/// clause 1 (infra-integral) dim = 1 + length; clause 2 (t-closed)
/// dim = p^length; clause 3 (mixed) dim = nil_dim + p^(length - nil_dim)
/// with nil_dim the k-dimension of the radical of M modulo M.
struct LengthDimensionReport {
    int clause = 0;
    size_t dim = 0;      // dim over R/M of S/M
    size_t nil_dim = 0;  // clause 3 only
    size_t length = 0;   // length of [R,S]
    bool ok = false;
};

LengthDimensionReport length_dimension_check(const Subalgebra& r, const AlgebraPtr& s,
                                             const ClosureOptions& opts = {});

/// From a local R with maximal conductor M and an ideal J of S not inside R
/// whose elementwise squares lie in M, builds R + J and certifies the result
/// pointwise minimal. Violated preconditions throw PreconditionFailed naming
/// the clause.
struct JacobsonResult {
    Subalgebra ring;  // R + J
    VerdictSide pw;   // certification of R inside R + J
};

JacobsonResult jacobson_builder(const Subalgebra& r, const AlgebraPtr& s,
                                const IdealOf& j, const ClosureOptions& opts = {});

/// Forward direction: pointwise minimal forces the elementwise squares of
/// the Jacobson radical of S into the conductor.
struct JacobsonForwardReport {
    Verdict pw = Verdict::Unconfirmed;
    bool squares_in_conductor = false;
    bool ok = false;  // pw true implies squares_in_conductor
};

JacobsonForwardReport jacobson_forward_check(const Subalgebra& r, const AlgebraPtr& s,
                                             const ClosureOptions& opts = {});

/// Whether t^2 lies in R + Rt for every t in S (finite fields: full coset
/// scan). Witness is the first violating element in scan order.
struct QuadraticResult {
    bool quadratic = true;
    std::optional<Vec> witness;
};

QuadraticResult quadratic_check(const Subalgebra& r, const AlgebraPtr& s,
                                const ClosureOptions& opts = {});

/// Quadratic + seminormal + infra-integral + R local implies pointwise
/// minimal, and |R/M| > 2 then forces minimality (the converse fails for the
/// minimal decomposed extension k inside k^2 with |k| = 2).
struct Prop712Report {
    bool hypotheses = false;
    Verdict pw = Verdict::Unconfirmed;
    bool minimal = false;
    bool big_residue = false;  // |R/M| > 2
    bool ok = false;
};

Prop712Report prop712_check(const Subalgebra& r, const AlgebraPtr& s,
                            const ClosureOptions& opts = {});

/// When the extension is t-closed or the residue field R/M is infinite,
/// pointwise minimal is equivalent to minimal.
struct FipShortcutReport {
    bool applicable = false;
    Verdict pw = Verdict::Unconfirmed;
    Verdict minimal = Verdict::Unconfirmed;
    bool ok = false;
};

FipShortcutReport fip_shortcut_check(const Subalgebra& r, const AlgebraPtr& s,
                                     const ClosureOptions& opts = {});

/// For a tower R inside T inside S of two minimal steps: the pointwise
/// extension, pair and co-pointwise properties and the structural condition
/// (S/M is either k[X,Y]/(X^2,Y^2,XY) or, when |k| = 2, k^3) are all
/// equivalent, and when they hold the interval has more than 3 elements.
struct TowerEquivalenceReport {
    Verdict pw = Verdict::Unconfirmed;
    Verdict pair = Verdict::Unconfirmed;
    Verdict copw = Verdict::Unconfirmed;
    bool condition4 = false;
    bool equivalent = false;
    std::optional<size_t> interval_size;  // finite fields only
    bool size_ok = true;                  // > 3 whenever the conditions hold
};

TowerEquivalenceReport tower_equivalence_check(const Subalgebra& r, const Subalgebra& t,
                                               const AlgebraPtr& s,
                                               const ClosureOptions& opts = {});

/// Generator profile used by the co-pointwise equivalences: whether a single
/// element generates S over R, and a two-element generating pair x, y with
/// R[x], R[y] proper and distinct when one exists. Finite fields only.
struct GeneratorReport {
    bool monogenic = false;
    std::optional<std::pair<Vec, Vec>> pair;
};

GeneratorReport generator_profile(const Subalgebra& r, const AlgebraPtr& s,
                                  const ClosureOptions& opts = {});

} // namespace ringlat

#endif
