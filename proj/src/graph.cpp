#include "rsf/graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace rsf {

std::size_t WeightedGraph::node_count() const {
    return static_cast<std::size_t>(std::count(node_flags.begin(), node_flags.end(), true));
}

void validate_graph(const WeightedGraph& g) {
    if (g.node_flags.size() != g.vertex_count)
        throw DomainError("node flag count does not match vertex count");
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const Edge& e : g.edges) {
        if (e.u >= g.vertex_count || e.v >= g.vertex_count)
            throw DomainError("edge endpoint out of range");
        if (e.u == e.v)
            throw DomainError("self loops are not allowed");
        std::pair<std::size_t, std::size_t> key =
            g.oriented ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.emplace(key, true).second)
            throw DomainError(g.oriented ? "duplicate arc" : "duplicate edge");
    }
    for (std::size_t idx : g.cycle_edges)
        if (idx >= g.edges.size())
            throw DomainError("cycle edge tag out of range");
}

WeightedGraph build_cycle(std::size_t n, const IntPoly& weight) {
    if (n < 3)
        throw DomainError("cycle graphs need at least 3 vertices");
    WeightedGraph g;
    g.vertex_count = n;
    g.node_flags.assign(n, false);
    g.edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        g.edges.push_back({i, (i + 1) % n, weight});
    return g;
}

namespace {

WeightedGraph build_sunlet_impl(std::size_t n, const IntPoly& a, const IntPoly& b,
                                bool oriented) {
    if (n < 3)
        throw DomainError("sunlet graphs need a cycle of at least 3 vertices");
    WeightedGraph g;
    g.oriented = oriented;
    g.vertex_count = 2 * n;
    g.node_flags.assign(2 * n, false);
    g.edges.reserve(2 * n);
    g.cycle_edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.edges.push_back({i, (i + 1) % n, b});
        g.cycle_edges.push_back(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.node_flags[n + i] = true;
        g.edges.push_back({n + i, i, a}); // pendant node -> cycle vertex
    }
    return g;
}

} // namespace

WeightedGraph build_sunlet(std::size_t n, const IntPoly& a, const IntPoly& b) {
    return build_sunlet_impl(n, a, b, false);
}

WeightedGraph build_oriented_sunlet(std::size_t n, const IntPoly& a, const IntPoly& b) {
    return build_sunlet_impl(n, a, b, true);
}

WeightedGraph collapse_nodes(const WeightedGraph& g) {
    if (g.node_count() == 0)
        throw DomainError("collapse_nodes requires at least one node");

    std::vector<std::size_t> remap(g.vertex_count);
    std::size_t next = 1;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        remap[v] = g.is_node(v) ? 0 : next++;

    WeightedGraph out;
    out.oriented = g.oriented;
    out.vertex_count = next;
    out.node_flags.assign(next, false);
    out.node_flags[0] = true;

    // first-seen order; parallel edges produced by the merge sum their weights
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_of;
    for (const Edge& e : g.edges) {
        std::size_t u = remap[e.u];
        std::size_t v = remap[e.v];
        if (u == 0 && v == 0)
            continue; // node-to-node edge: a self loop after the merge
        std::pair<std::size_t, std::size_t> key =
            g.oriented ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
        auto it = index_of.find(key);
        if (it == index_of.end()) {
            index_of.emplace(key, out.edges.size());
            out.edges.push_back({u, v, e.weight});
        } else {
            out.edges[it->second].weight += e.weight;
        }
    }
    return out;
}

} // namespace rsf
