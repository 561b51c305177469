#pragma once

// Perfect-matching generating polynomials.
//
// match_polynomial eliminates the lowest-index unmatched vertex, summing
// edge weight times subresult over its unmatched neighbours, and memoizes
// on the set of unmatched vertices. On the chain-shaped family graphs the
// reachable states form a narrow frontier, so the run time is effectively
// linear in chain length; correctness does not depend on that shape.
//
// enumerate_matchings is the deliberately naive oracle used to cross-check
// the memoized computation on small graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rank2/graph.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

struct GraphTooLarge : std::runtime_error {
    explicit GraphTooLarge(int n)
        : std::runtime_error("matching: graph has " + std::to_string(n) +
                             " vertices, limit is 127") {}
};

struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(std::size_t limit)
        : std::runtime_error("matching enumeration exceeded limit " + std::to_string(limit)) {}
};

namespace detail {

struct VertexSet {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static VertexSet full(int n) {
        VertexSet s;
        if (n >= 64) {
            s.lo = ~0ull;
            s.hi = n == 128 ? ~0ull : (1ull << (n - 64)) - 1;
        } else {
            s.lo = n == 64 ? ~0ull : (1ull << n) - 1;
        }
        return s;
    }
    bool empty() const { return lo == 0 && hi == 0; }
    bool contains(int v) const { return v < 64 ? (lo >> v) & 1 : (hi >> (v - 64)) & 1; }
    void remove(int v) {
        if (v < 64) lo &= ~(1ull << v);
        else hi &= ~(1ull << (v - 64));
    }
    void insert(int v) {
        if (v < 64) lo |= 1ull << v;
        else hi |= 1ull << (v - 64);
    }
    int lowest() const {
        return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(hi);
    }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        return static_cast<std::size_t>((s.lo ^ (s.hi * 0x9E3779B97F4A7C15ull)) *
                                        0xBF58476D1CE4E5B9ull);
    }
};

struct Adjacency {
    struct Hop {
        int to;
        int edge;
    };
    std::vector<std::vector<Hop>> at;

    explicit Adjacency(const WeightedGraph& g) : at(g.vertex_count) {
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const Edge& e = g.edges[i];
            at[e.u].push_back({e.v, static_cast<int>(i)});
            at[e.v].push_back({e.u, static_cast<int>(i)});
        }
    }
};

class MatchSolver {
public:
    explicit MatchSolver(const WeightedGraph& g) : g_(g), adj_(g) {}

    Laurent solve(VertexSet unmatched) {
        if (unmatched.empty()) return 1;
        if (auto it = memo_.find(unmatched); it != memo_.end()) return it->second;
        const int v = unmatched.lowest();
        Laurent total;
        VertexSet rest = unmatched;
        rest.remove(v);
        for (const auto& hop : adj_.at[v]) {
            if (!rest.contains(hop.to)) continue;
            VertexSet next = rest;
            next.remove(hop.to);
            total += weight_laurent(g_.edges[hop.edge].w) * solve(next);
        }
        memo_.emplace(unmatched, total);
        return total;
    }

private:
    const WeightedGraph& g_;
    Adjacency adj_;
    std::unordered_map<VertexSet, Laurent, VertexSetHash> memo_;
};

}  // namespace detail

// Sum over all perfect matchings of the product of edge weights. The empty
// graph contributes the empty product 1; an odd vertex count gives 0.
inline Laurent match_polynomial(const WeightedGraph& g) {
    if (g.vertex_count == 0) return 1;
    if (g.vertex_count % 2 != 0) return {};
    if (g.vertex_count > 127) throw GraphTooLarge(g.vertex_count);
    detail::MatchSolver solver(g);
    return solver.solve(detail::VertexSet::full(g.vertex_count));
}

// All perfect matchings as sorted edge-index sets, found by exhaustive
// branching with no memoization. Throws once more than `limit` matchings
// exist.
inline std::vector<std::vector<int>> enumerate_matchings(const WeightedGraph& g,
                                                         std::size_t limit) {
    std::vector<std::vector<int>> out;
    if (g.vertex_count == 0) {
        out.push_back({});
        return out;
    }
    if (g.vertex_count % 2 != 0) return out;
    if (g.vertex_count > 127) throw GraphTooLarge(g.vertex_count);
    detail::Adjacency adj(g);
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, detail::VertexSet unmatched) -> void {
        if (unmatched.empty()) {
            std::vector<int> matching = chosen;
            std::sort(matching.begin(), matching.end());
            if (out.size() == limit) throw LimitExceeded(limit);
            out.push_back(std::move(matching));
            return;
        }
        const int v = unmatched.lowest();
        detail::VertexSet rest = unmatched;
        rest.remove(v);
        for (const auto& hop : adj.at[v]) {
            if (!rest.contains(hop.to)) continue;
            detail::VertexSet next = rest;
            next.remove(hop.to);
            chosen.push_back(hop.edge);
            self(self, next);
            chosen.pop_back();
        }
    };
    recurse(recurse, detail::VertexSet::full(g.vertex_count));
    return out;
}

inline Int match_count(const WeightedGraph& g) { return eval(match_polynomial(g), 1, 1); }

}  // namespace rank2
