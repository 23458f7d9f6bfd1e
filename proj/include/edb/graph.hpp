#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "edb/errors.hpp"

namespace edb {

using Vertex = int;
using EdgeId = int;

/// Immutable finite simple undirected graph.
///
/// Vertices are 0..n-1. Edges keep dense ids 0..m-1 in insertion order and
/// remember their endpoints exactly as given. All analyses in this library
/// are pure functions over a Graph (plus a DistanceOracle), so a constructed
/// Graph can be shared freely across threads.
class Graph {
public:
    struct Neighbor {
        Vertex vertex;
        EdgeId edge;
    };

    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }

    std::pair<Vertex, Vertex> endpoints(EdgeId e) const {
        check_edge(e);
        return edges_[static_cast<std::size_t>(e)];
    }

    std::span<const Neighbor> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (degree(u) > degree(v)) std::swap(u, v);
        for (const Neighbor& nb : adj_[static_cast<std::size_t>(u)])
            if (nb.vertex == v) return true;
        return false;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRangeError("vertex " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(n_) + ")");
    }

    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count())
            throw EdgeOutOfRangeError("edge " + std::to_string(e) + " out of range [0, " +
                                      std::to_string(edge_count()) + ")");
    }

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Neighbor>> adj_;

    friend Graph build_graph(int, const std::vector<std::pair<Vertex, Vertex>>&);
};

/// Builds a simple graph; edge ids are assigned in input order.
/// Throws LoopEdgeError, DuplicateEdgeError or VertexOutOfRangeError,
/// naming the offending pair.
inline Graph build_graph(int vertex_count,
                         const std::vector<std::pair<Vertex, Vertex>>& edge_pairs) {
    if (vertex_count < 0)
        throw VertexOutOfRangeError("vertex count must be non-negative, got " +
                                    std::to_string(vertex_count));
    Graph g;
    g.n_ = vertex_count;
    g.adj_.resize(static_cast<std::size_t>(vertex_count));
    g.edges_.reserve(edge_pairs.size());

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_pairs.size() * 2);
    for (const auto& [u, v] : edge_pairs) {
        const std::string pair_text =
            "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw VertexOutOfRangeError("edge " + pair_text + " has an endpoint outside [0, " +
                                        std::to_string(vertex_count) + ")");
        if (u == v) throw LoopEdgeError("loop edge " + pair_text);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
            static_cast<std::uint64_t>(std::max(u, v));
        if (!seen.insert(key).second)
            throw DuplicateEdgeError("duplicate edge " + pair_text);

        const EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adj_[static_cast<std::size_t>(u)].push_back({v, id});
        g.adj_[static_cast<std::size_t>(v)].push_back({u, id});
    }
    return g;
}

}  // namespace edb
