#ifndef RSF_GRAPH_HPP
#define RSF_GRAPH_HPP

#include <cstddef>
#include <vector>

#include "rsf/intpoly.hpp"

namespace rsf {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    IntPoly weight;
};

// Simple weighted graph whose vertex set is split into nodes and internal
// vertices. When `oriented` is set each edge is the arc u -> v.
struct WeightedGraph {
    std::size_t vertex_count = 0;
    std::vector<bool> node_flags; // true = node, false = internal vertex
    std::vector<Edge> edges;
    bool oriented = false;

    // Indices of the core cycle edges, set by the sunlet builders. Drives the
    // per-cycle-edge histogram of the enumerator; empty for other graphs.
    std::vector<std::size_t> cycle_edges;

    bool is_node(std::size_t v) const { return node_flags[v]; }
    std::size_t node_count() const;
    std::size_t internal_count() const { return vertex_count - node_count(); }
};

// Checks the simple-graph invariants: indices in range, no self loops, no
// duplicate (un)ordered pairs. Throws DomainError on violation.
void validate_graph(const WeightedGraph& g);

// Cycle v_0 .. v_{n-1} with every edge carrying `weight` and no nodes.
// pre: n >= 3 (anything smaller is not a simple graph).
WeightedGraph build_cycle(std::size_t n, const IntPoly& weight);

// Sunlet graph: cycle vertices 0..n-1 (internal, cycle edges weighted b)
// with pendant node n+i attached to vertex i by an edge of weight a.
WeightedGraph build_sunlet(std::size_t n, const IntPoly& a, const IntPoly& b);

// Oriented sunlet: cycle arcs i -> i+1 (mod n), pendant arcs n+i -> i.
WeightedGraph build_oriented_sunlet(std::size_t n, const IntPoly& a, const IntPoly& b);

// Merges all nodes into the single node with index 0; internal vertices keep
// their relative order at indices 1.. . Parallel edges created by the merge
// are combined by summing weights; node-to-node edges are dropped (they
// would be self loops and never occur in a rooted spanning forest). The
// weighted forest sum is invariant under this transform.
WeightedGraph collapse_nodes(const WeightedGraph& g);

} // namespace rsf

#endif
