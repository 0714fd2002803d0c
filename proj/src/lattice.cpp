#include "ringlat/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ringlat {

size_t IntervalLattice::index_of(const Subalgebra& t) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].space() == t.space()) return i;
    throw InvalidPrecondition("subalgebra is not a lattice node");
}

bool IntervalLattice::covers(size_t lo, size_t hi) const {
    for (const auto& [a, b] : edges)
        if (a == lo && b == hi) return true;
    return false;
}

size_t IntervalLattice::join(size_t a, size_t b) const {
    return index_of(join_subalgebras(nodes[a], nodes[b]));
}

size_t IntervalLattice::meet(size_t a, size_t b) const {
    return index_of(Subalgebra(nodes[a].space().intersect(nodes[b].space())));
}

std::vector<size_t> IntervalLattice::atoms() const {
    std::vector<size_t> out;
    for (const auto& [a, b] : edges)
        if (a == bottom) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<size_t> IntervalLattice::coatoms() const {
    std::vector<size_t> out;
    for (const auto& [a, b] : edges)
        if (b == top) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

size_t IntervalLattice::length() const {
    // nodes are sorted by dimension, so index order is a topological order
    std::vector<size_t> best(nodes.size(), 0);
    for (const auto& [a, b] : edges) best[b] = std::max(best[b], best[a] + 1);
    return best[top];
}

std::map<size_t, std::uint64_t> IntervalLattice::maximal_chain_lengths() const {
    // counts of bottom-to-node path lengths, propagated along covers
    std::vector<std::map<size_t, std::uint64_t>> paths(nodes.size());
    paths[bottom][0] = 1;
    // index order is a topological order (nodes sorted by dimension)
    std::vector<std::vector<size_t>> preds(nodes.size());
    for (const auto& [lo, hi] : edges) preds[hi].push_back(lo);
    for (size_t v = 0; v < nodes.size(); ++v)
        for (size_t u : preds[v])
            for (const auto& [len, cnt] : paths[u]) paths[v][len + 1] += cnt;
    return paths[top];
}

std::vector<std::vector<size_t>> IntervalLattice::maximal_chains(std::uint64_t cap) const {
    std::vector<std::vector<size_t>> succs(nodes.size());
    for (const auto& [lo, hi] : edges) succs[lo].push_back(hi);
    for (auto& s : succs) std::sort(s.begin(), s.end());
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> path{bottom};
    std::vector<std::pair<size_t, size_t>> stack{{bottom, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node == top) {
            out.push_back(path);
            if (out.size() > cap) throw NodeCapExceeded("too many maximal chains");
            stack.pop_back();
            path.pop_back();
            continue;
        }
        if (next < succs[node].size()) {
            size_t child = succs[node][next++];
            path.push_back(child);
            stack.push_back({child, 0});
        } else {
            stack.pop_back();
            path.pop_back();
        }
    }
    return out;
}

IntervalLattice enumerate_interval(const Subalgebra& r, const Subalgebra& s,
                                   const LatticeOptions& opts) {
    if (r.parent() != s.parent()) throw ParentMismatch();
    if (!s.space().containsSubspace(r.space()))
        throw InvalidPrecondition("interval endpoints are not nested");
    const AlgebraPtr& amb = r.parent();

    std::unordered_map<std::string, size_t> seen;
    std::vector<Subalgebra> nodes;
    auto add = [&](const Subalgebra& t) -> bool {
        auto [it, inserted] = seen.emplace(t.key(), nodes.size());
        if (inserted) {
            nodes.push_back(t);
            if (nodes.size() > opts.node_cap)
                throw NodeCapExceeded(std::to_string(nodes.size()) + " nodes");
        }
        return inserted;
    };
    add(r);
    add(s);
    // monogenic seeds
    for_each_coset_rep(r.space(), s.space(), opts.scan_cap, [&](const Vec& b) {
        if (r.contains(b)) return;
        add(generated_subalgebra(r, {amb->element(b)}));
    });
    // join closure
    for (bool changed = true; changed;) {
        changed = false;
        size_t n = nodes.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (add(join_subalgebras(nodes[i], nodes[j]))) changed = true;
    }

    std::sort(nodes.begin(), nodes.end(), [](const Subalgebra& a, const Subalgebra& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.key() < b.key();
    });

    IntervalLattice out;
    out.ambient = amb;
    out.nodes = std::move(nodes);
    out.bottom = 0;
    out.top = out.nodes.size() - 1;
    // covering pairs: containment with no node strictly between
    const auto& ns = out.nodes;
    for (size_t i = 0; i < ns.size(); ++i)
        for (size_t j = 0; j < ns.size(); ++j) {
            if (ns[i].dim() >= ns[j].dim()) continue;
            if (!ns[j].space().containsSubspace(ns[i].space())) continue;
            bool cover = true;
            for (size_t k = 0; k < ns.size() && cover; ++k) {
                if (k == i || k == j) continue;
                if (ns[k].dim() <= ns[i].dim() || ns[k].dim() >= ns[j].dim()) continue;
                if (ns[j].space().containsSubspace(ns[k].space()) &&
                    ns[k].space().containsSubspace(ns[i].space()))
                    cover = false;
            }
            if (cover) out.edges.emplace_back(i, j);
        }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

LatticeWitness is_semimodular(const IntervalLattice& l) {
    for (size_t i = 0; i < l.nodes.size(); ++i)
        for (size_t j = i + 1; j < l.nodes.size(); ++j) {
            size_t m = l.meet(i, j);
            if (!l.covers(m, i) || !l.covers(m, j)) continue;
            size_t join = l.join(i, j);
            if (!l.covers(i, join) || !l.covers(j, join))
                return {false, std::make_pair(i, j)};
        }
    return {};
}

LatticeWitness is_atomistic(const IntervalLattice& l) {
    std::vector<size_t> at = l.atoms();
    for (size_t v = 0; v < l.nodes.size(); ++v) {
        if (v == l.bottom) continue;
        size_t acc = l.bottom;
        for (size_t a : at)
            if (l.nodes[v].space().containsSubspace(l.nodes[a].space()))
                acc = l.join(acc, a);
        if (acc != v) return {false, std::make_pair(v, v)};
    }
    return {};
}

LatticeWitness is_geometric(const IntervalLattice& l) {
    LatticeWitness sm = is_semimodular(l);
    if (!sm.ok) return sm;
    return is_atomistic(l);
}

namespace {

// join of the atoms selected by mask, as a node index
size_t subset_join(const IntervalLattice& l, const std::vector<size_t>& atom_ids,
                   unsigned mask, std::vector<size_t>& memo) {
    if (memo[mask] != SIZE_MAX) return memo[mask];
    if (mask == 0) return memo[0] = l.bottom;
    unsigned low = mask & (mask - 1);
    unsigned bit = mask ^ low;
    size_t idx = 0;
    while (!((bit >> idx) & 1)) ++idx;
    size_t res = l.join(subset_join(l, atom_ids, low, memo), atom_ids[idx]);
    return memo[mask] = res;
}

} // namespace

bool is_independent(const IntervalLattice& l, const std::vector<size_t>& atom_ids) {
    if (atom_ids.size() > 20) throw TooManyAtoms(std::to_string(atom_ids.size()));
    const unsigned n = static_cast<unsigned>(atom_ids.size());
    std::vector<size_t> memo(size_t{1} << n, SIZE_MAX);
    for (unsigned j = 0; j < (1u << n); ++j)
        for (unsigned k = j; k < (1u << n); ++k) {
            size_t tj = subset_join(l, atom_ids, j, memo);
            size_t tk = subset_join(l, atom_ids, k, memo);
            size_t tjk = subset_join(l, atom_ids, j & k, memo);
            if (l.meet(tj, tk) != tjk) return false;
        }
    return true;
}

std::vector<size_t> minimal_spanning_independent(const IntervalLattice& l) {
    std::vector<size_t> at = l.atoms();
    if (at.size() > 20) throw TooManyAtoms(std::to_string(at.size()));
    const unsigned n = static_cast<unsigned>(at.size());
    // masks ordered by popcount, then numerically: smallest independent
    // spanning set, deterministic
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    for (unsigned m : masks) {
        std::vector<size_t> subset;
        for (unsigned i = 0; i < n; ++i)
            if ((m >> i) & 1) subset.push_back(at[i]);
        std::vector<size_t> memo(size_t{1} << subset.size(), SIZE_MAX);
        if (subset_join(l, subset, (1u << subset.size()) - 1, memo) != l.top) continue;
        if (is_independent(l, subset)) return subset;
    }
    throw InvalidPrecondition("no independent spanning atom set found");
}

std::string lattice_dot(const IntervalLattice& l) {
    std::ostringstream os;
    os << "digraph interval {\n  rankdir=BT;\n";
    for (size_t i = 0; i < l.nodes.size(); ++i)
        os << "  n" << i << " [label=\"dim " << l.nodes[i].dim() << "\"];\n";
    for (const auto& [a, b] : l.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ringlat
