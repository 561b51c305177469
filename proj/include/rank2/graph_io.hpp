#pragma once

// JSON and DOT serialization for WeightedGraph. The JSON form round-trips;
// DOT is for eyeballing with graphviz (arcs come out dashed).

#include <sstream>
#include <string>

#include <json.hpp>

#include "rank2/graph.hpp"

namespace rank2 {

struct UnknownFormat : std::runtime_error {
    explicit UnknownFormat(const std::string& fmt)
        : std::runtime_error("unknown graph format '" + fmt + "'") {}
};

inline nlohmann::ordered_json graph_to_json(const WeightedGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count;
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges) edges.push_back({e.u, e.v, weight_name(e.w)});
    j["edges"] = std::move(edges);
    auto cells = nlohmann::ordered_json::array();
    for (const Cell& c : g.cells) {
        nlohmann::ordered_json cell;
        cell["kind"] = c.kind == CellKind::Square ? "square" : "octagon";
        cell["edges"] = c.edges;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    j["arcs"] = g.arcs;
    j["tag"] = g.tag;
    return j;
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
    WeightedGraph g;
    g.vertex_count = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), weight_from_name(e.at(2).get<std::string>()));
    for (const auto& c : j.at("cells")) {
        Cell cell;
        const std::string kind = c.at("kind").get<std::string>();
        if (kind == "square") cell.kind = CellKind::Square;
        else if (kind == "octagon") cell.kind = CellKind::Octagon;
        else throw std::invalid_argument("unknown cell kind '" + kind + "'");
        cell.edges = c.at("edges").get<std::vector<int>>();
        g.cells.push_back(std::move(cell));
    }
    g.arcs = j.at("arcs").get<std::vector<int>>();
    g.tag = j.at("tag").get<std::string>();
    validate(g);
    return g;
}

inline std::string graph_to_dot(const WeightedGraph& g) {
    std::set<int> arc_set(g.arcs.begin(), g.arcs.end());
    std::ostringstream os;
    os << "graph \"" << g.tag << "\" {\n";
    for (int v = 0; v < g.vertex_count; ++v) os << "  v" << v << ";\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << weight_name(e.w) << "\"";
        if (arc_set.count(static_cast<int>(i))) os << ", style=dashed, arc=true";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string export_graph(const WeightedGraph& g, const std::string& format) {
    if (format == "json") return graph_to_json(g).dump(2) + "\n";
    if (format == "dot") return graph_to_dot(g);
    throw UnknownFormat(format);
}

}  // namespace rank2
