#ifndef RINGLAT_LATTICE_HPP
#define RINGLAT_LATTICE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlat/canon.hpp"

namespace ringlat {

struct LatticeOptions {
    std::uint64_t scan_cap = std::uint64_t{1} << 20;
    std::uint64_t node_cap = 100000;
};

/// The interval [R,S] of intermediate rings, with its Hasse diagram. Nodes
/// are sorted by (dimension, canonical key) so output is deterministic.
struct IntervalLattice {
    AlgebraPtr ambient;
    std::vector<Subalgebra> nodes;
    size_t bottom = 0;
    size_t top = 0;
    std::vector<std::pair<size_t, size_t>> edges;  // covering pairs (lower, upper)

    size_t index_of(const Subalgebra& t) const;    // throws InvalidPrecondition
    bool covers(size_t lo, size_t hi) const;
    size_t join(size_t a, size_t b) const;
    size_t meet(size_t a, size_t b) const;

    std::vector<size_t> atoms() const;             // covers of bottom
    std::vector<size_t> coatoms() const;           // covered by top
    size_t length() const;                         // longest bottom-to-top chain
    /// Multiset (length -> count) of the lengths of all maximal chains.
    std::map<size_t, std::uint64_t> maximal_chain_lengths() const;
    /// All maximal chains as node-index paths (bottom to top).
    std::vector<std::vector<size_t>> maximal_chains(std::uint64_t cap = 100000) const;
};

/// Seeds with the monogenic rings R[x] over coset representatives and closes
/// under pairwise joins; every intermediate ring is a join of monogenic ones.
IntervalLattice enumerate_interval(const Subalgebra& r, const Subalgebra& s,
                                   const LatticeOptions& opts = {});

struct LatticeWitness {
    bool ok = true;
    std::optional<std::pair<size_t, size_t>> witness;
};

/// Whenever the meet of two nodes is covered by both, both must be covered by
/// the join.
LatticeWitness is_semimodular(const IntervalLattice& l);
/// Every node is the join of the atoms below it.
LatticeWitness is_atomistic(const IntervalLattice& l);
LatticeWitness is_geometric(const IntervalLattice& l);

/// Independence of a set of atoms: the partial joins satisfy
/// T_J meet T_K = T_(J intersect K) for all subsets J, K.
bool is_independent(const IntervalLattice& l, const std::vector<size_t>& atom_ids);

/// Minimum-cardinality independent atom set whose join is the top.
std::vector<size_t> minimal_spanning_independent(const IntervalLattice& l);

/// Hasse diagram in DOT format, deterministic.
std::string lattice_dot(const IntervalLattice& l);

} // namespace ringlat

#endif
