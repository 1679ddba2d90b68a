#include "rsf/graphfile.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace rsf {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
    throw ParseError("graph file: " + message, 0);
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(where + ": missing field \"" + key + "\"");
    return *it;
}

} // namespace

GraphFile parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph file: ") + e.what(), e.byte);
    }
    if (!doc.is_object())
        schema_error("top level must be an object");

    GraphFile file;
    if (doc.contains("oriented")) {
        if (!doc["oriented"].is_boolean())
            schema_error("\"oriented\" must be a boolean");
        file.oriented = doc["oriented"].get<bool>();
    }

    const json& vertices = require_field(doc, "vertices", "top level");
    if (!vertices.is_array())
        schema_error("\"vertices\" must be an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const json& v = vertices[i];
        std::string where = "vertex " + std::to_string(i);
        if (!v.is_object())
            schema_error(where + " must be an object");
        const json& id = require_field(v, "id", where);
        if (!id.is_string())
            schema_error(where + ": \"id\" must be a string");
        bool node = false;
        if (v.contains("node")) {
            if (!v["node"].is_boolean())
                schema_error(where + ": \"node\" must be a boolean");
            node = v["node"].get<bool>();
        }
        file.vertices.push_back({id.get<std::string>(), node});
    }

    const json& edges = require_field(doc, "edges", "top level");
    if (!edges.is_array())
        schema_error("\"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        std::string where = "edge " + std::to_string(i);
        if (!e.is_object())
            schema_error(where + " must be an object");
        const json& u = require_field(e, "u", where);
        const json& v = require_field(e, "v", where);
        const json& w = require_field(e, "weight", where);
        if (!u.is_string() || !v.is_string())
            schema_error(where + ": endpoints must be vertex id strings");
        if (!w.is_string())
            schema_error(where + ": \"weight\" must be a polynomial string");
        file.edges.push_back({u.get<std::string>(), v.get<std::string>(), w.get<std::string>()});
    }
    return file;
}

WeightedGraph to_weighted_graph(const GraphFile& file) {
    std::unordered_map<std::string, std::size_t> index_of;
    WeightedGraph g;
    g.oriented = file.oriented;
    g.vertex_count = file.vertices.size();
    g.node_flags.reserve(file.vertices.size());
    for (const GraphFileVertex& v : file.vertices) {
        if (!index_of.emplace(v.id, g.node_flags.size()).second)
            schema_error("duplicate vertex id \"" + v.id + "\"");
        g.node_flags.push_back(v.node);
    }
    for (std::size_t i = 0; i < file.edges.size(); ++i) {
        const GraphFileEdge& e = file.edges[i];
        auto u = index_of.find(e.u);
        auto v = index_of.find(e.v);
        if (u == index_of.end())
            schema_error("edge " + std::to_string(i) + ": unknown vertex id \"" + e.u + "\"");
        if (v == index_of.end())
            schema_error("edge " + std::to_string(i) + ": unknown vertex id \"" + e.v + "\"");
        IntPoly weight;
        try {
            weight = parse_poly(e.weight);
        } catch (const ParseError& err) {
            throw ParseError("edge " + std::to_string(i) + ": bad weight \"" + e.weight +
                                 "\": " + err.what(),
                             err.offset());
        }
        g.edges.push_back({u->second, v->second, std::move(weight)});
    }
    validate_graph(g);
    return g;
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return to_weighted_graph(parse_graph_json(buffer.str()));
}

} // namespace rsf
