#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/filters.hpp"

namespace reslat {

// Simple undirected graph with labelled vertices. Vertices carry either the
// filters or the element indices they were built from; both lists are empty
// for plain graphs.
struct LabeledGraph {
    int n = 0;
    std::vector<std::uint64_t> adj; // row masks, false diagonal
    std::vector<std::string> labels;
    std::vector<Filter> vertex_filters; // comaximal graphs
    std::vector<Elem> vertex_elements;  // zero-divisor graphs

    static LabeledGraph empty(int vertices);
    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v);
    int degree(int v) const;
    int edge_count() const;
    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;
};

// Vertices: proper filters not contained in Rad(A), in canonical filter
// order. Edges: comaximal pairs.
LabeledGraph comaximal_filter_graph(const ResiduatedLattice &a,
                                    const FilterLattice &fl);
LabeledGraph comaximal_filter_graph(const ResiduatedLattice &a);

// Vertices: elements with a nonzero annihilating partner. 0 itself qualifies
// whenever the algebra has a second element; pass include_zero = false for
// the induced subgraph on nonzero vertices.
LabeledGraph zero_divisor_graph(const ResiduatedLattice &a,
                                bool include_zero = true);

struct GraphInvariants {
    int vertex_count = 0;
    int edge_count = 0;
    bool connected = true;
    std::optional<int> diameter; // nullopt = infinite
    std::optional<int> girth;    // nullopt = infinite (acyclic)
    int clique_number = 0;
    int chromatic_number = 0;
    int max_filter_count = 0; // |Max(A)|, filled when algebra context given
    bool planar = true;
    std::vector<std::vector<int>> partite_classes; // comaximal graphs only
};

// Exact invariants: BFS diameter/girth, branch-and-bound clique and
// chromatic number, Kuratowski-subdivision planarity.
GraphInvariants invariants(const LabeledGraph &g);

// Same, plus |Max(A)| and the maximal-filter partition when the vertices are
// filters.
GraphInvariants invariants(const LabeledGraph &g, const ResiduatedLattice &a,
                           const FilterLattice &fl);

// Class i: vertices contained in the i-th maximal filter but in no earlier
// one. A proper coloring with |Max(A)| classes (all nonempty on non-null
// graphs).
std::vector<std::vector<int>> maximal_partition(const FilterLattice &fl,
                                                const LabeledGraph &g);

// Adjacency-preserving bijection, or nullopt. map[u] = vertex of h.
std::optional<std::vector<int>> graph_isomorphic(const LabeledGraph &g,
                                                 const LabeledGraph &h);

// Injective map carrying every edge of g to an edge of h (subgraph embedding,
// not induced).
std::optional<std::vector<int>> embeds_as_subgraph(const LabeledGraph &g,
                                                   const LabeledGraph &h);

// Isomorphism-class key: minimal adjacency encoding over all vertex
// permutations. Equal keys iff graph_isomorphic succeeds.
std::string canonical_graph_form(const LabeledGraph &g);

// Display name for census shape multisets: Kn, Kp,q, Pn, Cn, or g<hex8> for
// anything else.
std::string shape_name(const LabeledGraph &g);
std::string shape_name_for_key(const std::string &canonical_key);

std::optional<LabeledGraph> graph_from_canonical_key(const std::string &key);

} // namespace reslat
