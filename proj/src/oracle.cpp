#include "rsf/oracle.hpp"

#include <bit>
#include <numeric>

namespace rsf {

namespace {

// Plain union-find, reset for every subset.
struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { reset(); }

    void reset() { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // false if u and v were already connected (the edge closes a cycle)
    bool unite(std::size_t u, std::size_t v) {
        std::size_t ru = find(u), rv = find(v);
        if (ru == rv)
            return false;
        parent[ru] = rv;
        return true;
    }
};

bool is_rsf_impl(const WeightedGraph& g, std::uint64_t edge_mask, UnionFind& uf) {
    uf.reset();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (!(edge_mask >> i & 1))
            continue;
        if (!uf.unite(g.edges[i].u, g.edges[i].v))
            return false; // cycle
    }
    // exactly one node per component
    std::vector<int> nodes_in_component(g.vertex_count, 0);
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (g.is_node(v))
            ++nodes_in_component[uf.find(v)];
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (uf.find(v) == v && nodes_in_component[v] != 1)
            return false;
    return true;
}

bool orientation_ok(const WeightedGraph& g, std::uint64_t edge_mask) {
    // outward orientation from the node: nodes take no in-arcs, internal
    // vertices exactly one
    std::vector<int> indeg(g.vertex_count, 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (edge_mask >> i & 1)
            ++indeg[g.edges[i].v];
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (g.is_node(v) ? indeg[v] != 0 : indeg[v] != 1)
            return false;
    }
    return true;
}

ForestReport enumerate_impl(const WeightedGraph& g, std::size_t cap, bool oriented_rule) {
    if (g.edges.size() > cap || g.edges.size() > 63)
        throw CapExceeded(g.edges.size(), std::min<std::size_t>(cap, 63));

    std::uint64_t cycle_mask = 0;
    for (std::size_t idx : g.cycle_edges)
        cycle_mask |= std::uint64_t{1} << idx;

    ForestReport report;
    if (!g.cycle_edges.empty())
        report.histogram.emplace();

    UnionFind uf(g.vertex_count);
    const std::uint64_t limit = std::uint64_t{1} << g.edges.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (!is_rsf_impl(g, mask, uf))
            continue;
        if (oriented_rule && !orientation_ok(g, mask))
            continue;
        ++report.forest_count;
        IntPoly product = IntPoly::one();
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            if (mask >> i & 1)
                product *= g.edges[i].weight;
        report.weighted_sum += product;
        if (report.histogram)
            ++(*report.histogram)[static_cast<std::size_t>(std::popcount(mask & cycle_mask))];
    }
    return report;
}

} // namespace

bool is_rsf(const WeightedGraph& g, std::uint64_t edge_mask) {
    UnionFind uf(g.vertex_count);
    return is_rsf_impl(g, edge_mask, uf);
}

bool is_oriented_rsf(const WeightedGraph& g, std::uint64_t edge_mask) {
    if (!g.oriented)
        throw DomainError("is_oriented_rsf expects an oriented graph");
    return is_rsf(g, edge_mask) && orientation_ok(g, edge_mask);
}

ForestReport enumerate_rsf(const WeightedGraph& g, std::size_t cap) {
    return enumerate_impl(g, cap, false);
}

ForestReport enumerate_oriented_rsf(const WeightedGraph& g, std::size_t cap) {
    if (!g.oriented)
        throw DomainError("enumerate_oriented_rsf expects an oriented graph");
    return enumerate_impl(g, cap, true);
}

} // namespace rsf
