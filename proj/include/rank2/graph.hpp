#pragma once

// Edge-weighted graphs whose perfect matchings are enumerated downstream.
// Edge weights are restricted to 1, x1, x2; cells record the square and
// octagon faces the matching-graph families are assembled from, and arcs
// are the extra edges that are not part of any cell.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank2/laurent.hpp"

namespace rank2 {

struct IndexOutOfFamily : std::runtime_error {
    explicit IndexOutOfFamily(const std::string& what) : std::runtime_error(what) {}
};

enum class EdgeWeight { One, X1, X2 };

inline Laurent weight_laurent(EdgeWeight w) {
    switch (w) {
        case EdgeWeight::One: return Laurent(1);
        case EdgeWeight::X1: return Laurent::x1();
        case EdgeWeight::X2: return Laurent::x2();
    }
    throw std::logic_error("weight_laurent: bad enum");
}

inline const char* weight_name(EdgeWeight w) {
    switch (w) {
        case EdgeWeight::One: return "1";
        case EdgeWeight::X1: return "x1";
        case EdgeWeight::X2: return "x2";
    }
    throw std::logic_error("weight_name: bad enum");
}

inline EdgeWeight weight_from_name(const std::string& s) {
    if (s == "1") return EdgeWeight::One;
    if (s == "x1") return EdgeWeight::X1;
    if (s == "x2") return EdgeWeight::X2;
    throw std::invalid_argument("unknown edge weight '" + s + "'");
}

struct Edge {
    int u = 0;
    int v = 0;
    EdgeWeight w = EdgeWeight::One;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class CellKind { Square, Octagon };

struct Cell {
    CellKind kind = CellKind::Square;
    std::vector<int> edges;  // indices into WeightedGraph::edges

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct WeightedGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Cell> cells;
    std::vector<int> arcs;  // edge indices
    std::string tag;

    int add_edge(int u, int v, EdgeWeight w) {
        edges.push_back({u, v, w});
        return static_cast<int>(edges.size()) - 1;
    }

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

// Structural invariants shared by everything the factory builds: indices in
// range, no loops, no duplicate vertex pairs, squares of 4 edges and
// octagons of 8.
inline void validate(const WeightedGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count)
            throw std::invalid_argument(g.tag + ": edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument(g.tag + ": loop edge");
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            throw std::invalid_argument(g.tag + ": duplicate edge");
    }
    for (const Cell& c : g.cells) {
        const std::size_t want = c.kind == CellKind::Square ? 4 : 8;
        if (c.edges.size() != want) throw std::invalid_argument(g.tag + ": bad cell size");
        for (int idx : c.edges)
            if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
                throw std::invalid_argument(g.tag + ": cell edge index out of range");
    }
    for (int idx : g.arcs)
        if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
            throw std::invalid_argument(g.tag + ": arc edge index out of range");
}

// Number of square and octagon cells.
inline std::pair<int, int> cell_counts(const WeightedGraph& g) {
    int squares = 0, octagons = 0;
    for (const Cell& c : g.cells) (c.kind == CellKind::Square ? squares : octagons)++;
    return {squares, octagons};
}

// Side-by-side union with no identifications; vertex and edge indices of b
// are shifted past a.
inline WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    WeightedGraph g = a;
    g.tag = a.tag + " + " + b.tag;
    g.vertex_count = a.vertex_count + b.vertex_count;
    const int eshift = static_cast<int>(a.edges.size());
    for (const Edge& e : b.edges) g.edges.push_back({e.u + a.vertex_count, e.v + a.vertex_count, e.w});
    for (const Cell& c : b.cells) {
        Cell shifted = c;
        for (int& idx : shifted.edges) idx += eshift;
        g.cells.push_back(std::move(shifted));
    }
    for (int idx : b.arcs) g.arcs.push_back(idx + eshift);
    return g;
}

}  // namespace rank2
