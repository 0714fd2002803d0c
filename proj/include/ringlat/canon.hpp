#ifndef RINGLAT_CANON_HPP
#define RINGLAT_CANON_HPP

#include "ringlat/ringstruct.hpp"

namespace ringlat {

/// Whether a closure scan covered every candidate (finite field coset scan or
/// an exact structural formula) or only a structured candidate set (infinite
/// fields). Candidate-closure results are always sound from below: every
/// adjoined element is witnessed, so the output is contained in the true
/// closure.
enum class Exactness { Exhaustive, CandidateClosure };

/// Three-valued outcome for predicates that may rest on a candidate closure.
enum class Verdict { True, False, Unconfirmed };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "unconfirmed";
    }
}

struct ClosureOptions {
    std::uint64_t scan_cap = std::uint64_t{1} << 20;
    unsigned sample_budget = 64;
    std::uint64_t seed = 1;
};

struct ClosureResult {
    Subalgebra ring;
    Exactness exactness;
};

/// Largest subring reached by adjoining b with b^2, b^3 in the current ring.
/// Exact when R is a field (R + nilradical) or the field is finite.
ClosureResult seminormalization(const Subalgebra& r, const AlgebraPtr& s,
                                const ClosureOptions& opts = {});

/// Largest subring reached by adjoining b when some r in the current ring has
/// b^2 - rb and b^3 - rb^2 inside it; the existential over r is a linear
/// solve. Exact when R is a field (idempotent span + nilradical, via the
/// local decomposition) or the field is finite.
ClosureResult t_closure(const Subalgebra& r, const AlgebraPtr& s,
                        const ClosureOptions& opts = {});

Verdict is_subintegral(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts = {});
Verdict is_seminormal(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts = {});
Verdict is_infra_integral(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts = {});
Verdict is_t_closed(const Subalgebra& r, const AlgebraPtr& s, const ClosureOptions& opts = {});

/// Spectral-side tests through the maximal-ideal decompositions: bijective
/// (resp. surjective) contraction with isomorphic residue extensions.
Verdict spectral_subintegral(const Subalgebra& r, const AlgebraPtr& s);
Verdict spectral_infra_integral(const Subalgebra& r, const AlgebraPtr& s);

enum class MinimalKind { NotMinimal, Inert, Decomposed, Ramified };

inline const char* minimal_kind_name(MinimalKind k) {
    switch (k) {
        case MinimalKind::Inert: return "inert";
        case MinimalKind::Decomposed: return "decomposed";
        case MinimalKind::Ramified: return "ramified";
        default: return "not-minimal";
    }
}

/// Classification of a minimal ring extension, with re-checkable witnesses
/// (ambient coordinates).
struct MinimalType {
    MinimalKind kind = MinimalKind::NotMinimal;
    std::optional<IdealOf> conductor_m;   // M = (R:T), owner R
    std::vector<IdealOf> witnesses;       // Inert: {M in Max T}; Decomposed: {M1,M2}; Ramified: {M'}
    size_t residue_degree_base = 0;       // [R/M : K]
    size_t residue_degree_top = 0;        // [T/N : K]
};

/// Direct-condition classifier: M := (R:T) maximal in R, then the three cases
/// by their defining conditions on Max(T) over M.
MinimalType minimal_type(const Subalgebra& r, const Subalgebra& t);

/// Definition-side test: no element of T generates a proper intermediate ring
/// over R. Exhaustive over finite fields; over infinite fields a structured
/// candidate scan that can only refute.
bool minimal_oracle(const Subalgebra& r, const Subalgebra& t,
                    const ClosureOptions& opts = {});

struct CanonicalChain {
    Subalgebra r;
    Subalgebra plus;   // seminormalization of r in s
    Subalgebra t;      // t-closure of r in s
    Subalgebra s;
    Exactness plus_exactness;
    Exactness t_exactness;
};

CanonicalChain canonical_chain(const Subalgebra& r, const AlgebraPtr& s,
                               const ClosureOptions& opts = {});

/// Classifies each consecutive step of a chain; throws NotAMinimalStep when a
/// step is not a minimal extension.
std::vector<MinimalType> tower_type_profile(const std::vector<Subalgebra>& chain);

} // namespace ringlat

#endif
