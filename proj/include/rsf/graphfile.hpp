#ifndef RSF_GRAPHFILE_HPP
#define RSF_GRAPHFILE_HPP

#include <string>
#include <vector>

#include "rsf/graph.hpp"

namespace rsf {

// On-disk graph description. Vertices are named by free-form string ids and
// mapped to dense indices in file order, which also fixes the Laplacian row
// order. Weights are polynomial strings in the standard grammar.
struct GraphFileVertex {
    std::string id;
    bool node = false;
};

struct GraphFileEdge {
    std::string u;
    std::string v;
    std::string weight;
};

struct GraphFile {
    std::vector<GraphFileVertex> vertices;
    std::vector<GraphFileEdge> edges;
    bool oriented = false;
};

// Parses the JSON document; throws ParseError on malformed JSON or schema
// violations.
GraphFile parse_graph_json(const std::string& text);

// Resolves ids, parses weights, and checks the simple-graph invariants.
WeightedGraph to_weighted_graph(const GraphFile& file);

// Reads and converts a graph file; throws ParseError (bad content) or
// DomainError (unreadable file / invalid graph).
WeightedGraph load_graph_file(const std::string& path);

} // namespace rsf

#endif
