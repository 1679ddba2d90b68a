#ifndef RSF_ORACLE_HPP
#define RSF_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "rsf/graph.hpp"
#include "rsf/intpoly.hpp"

namespace rsf {

// Outcome of brute-force enumeration over all edge subsets.
struct ForestReport {
    std::uint64_t forest_count = 0;
    IntPoly weighted_sum;
    // number of cycle edges used -> forest count; present only when the graph
    // carries the builders' cycle tag (sunlets).
    std::optional<std::map<std::size_t, std::uint64_t>> histogram;
};

// Keeps 2^|E| iterations in the tens of seconds on ordinary hardware.
inline constexpr std::size_t kDefaultEdgeCap = 22;

// True iff the spanning subgraph picked by edge_mask (bit i = edge i) is
// acyclic and every connected component contains exactly one node.
// Orientation is ignored. pre: |E(g)| <= 64.
bool is_rsf(const WeightedGraph& g, std::uint64_t edge_mask);

// As is_rsf, and additionally every chosen arc points away from its
// component's node: nodes have in-degree 0 and internal vertices in-degree
// exactly 1 within the chosen arcs. pre: g oriented.
bool is_oriented_rsf(const WeightedGraph& g, std::uint64_t edge_mask);

// Iterates every edge subset in increasing mask order, keeps those accepted
// by is_rsf, and accumulates the product of edge weights. Deterministic.
// Throws CapExceeded when |E(g)| > cap.
ForestReport enumerate_rsf(const WeightedGraph& g, std::size_t cap = kDefaultEdgeCap);

// Oriented variant, filtering with is_oriented_rsf. pre: g oriented.
ForestReport enumerate_oriented_rsf(const WeightedGraph& g, std::size_t cap = kDefaultEdgeCap);

} // namespace rsf

#endif
