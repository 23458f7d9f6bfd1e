#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edb/graph.hpp"

namespace edb {

/// All-pairs vertex distance table, one BFS per vertex.
///
/// Pairs in different components are explicitly Unreachable: distance()
/// returns nullopt for them. Hot loops can use row(), where unreachable
/// entries carry kUnreachableRaw (-1); casting a row entry to uint32_t
/// maps that to a huge value, so unsigned min/compare still orders
/// finite distances below unreachable ones.
class DistanceOracle {
public:
    static constexpr std::int32_t kUnreachableRaw = -1;

    DistanceOracle() = default;

    int vertex_count() const { return n_; }

    std::optional<int> distance(Vertex u, Vertex v) const {
        const std::int32_t d = raw(u, v);
        if (d == kUnreachableRaw) return std::nullopt;
        return static_cast<int>(d);
    }

    bool reachable(Vertex u, Vertex v) const { return raw(u, v) != kUnreachableRaw; }

    std::int32_t raw(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(v)];
    }

    std::span<const std::int32_t> row(Vertex v) const {
        check(v);
        return {table_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(n_),
                static_cast<std::size_t>(n_)};
    }

private:
    int n_ = 0;
    std::vector<std::int32_t> table_;

    void check(Vertex v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRangeError("vertex " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(n_) + ")");
    }

    friend DistanceOracle all_pairs_distances(const Graph&);
};

inline DistanceOracle all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceOracle oracle;
    oracle.n_ = n;
    oracle.table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                         DistanceOracle::kUnreachableRaw);

    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::int32_t* dist = oracle.table_.data() +
                             static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            const std::int32_t du = dist[u];
            for (const Graph::Neighbor& nb : g.neighbors(u)) {
                if (dist[nb.vertex] == DistanceOracle::kUnreachableRaw) {
                    dist[nb.vertex] = du + 1;
                    queue.push_back(nb.vertex);
                }
            }
        }
    }
    return oracle;
}

/// Distance from a vertex to an edge: min over the edge's endpoints.
/// nullopt when the edge lies in another component.
inline std::optional<int> vertex_edge_distance(const Graph& g, const DistanceOracle& oracle,
                                               Vertex v, EdgeId f) {
    const auto [a, b] = g.endpoints(f);
    const std::uint32_t da = static_cast<std::uint32_t>(oracle.raw(v, a));
    const std::uint32_t db = static_cast<std::uint32_t>(oracle.raw(v, b));
    const std::uint32_t d = std::min(da, db);
    if (d == static_cast<std::uint32_t>(DistanceOracle::kUnreachableRaw)) return std::nullopt;
    return static_cast<int>(d);
}

/// Distance between two edges: min over the four endpoint combinations.
inline std::optional<int> edge_edge_distance(const Graph& g, const DistanceOracle& oracle,
                                             EdgeId f, EdgeId f2) {
    const auto [a, b] = g.endpoints(f);
    const auto [c, d] = g.endpoints(f2);
    const std::uint32_t m =
        std::min(std::min(static_cast<std::uint32_t>(oracle.raw(a, c)),
                          static_cast<std::uint32_t>(oracle.raw(a, d))),
                 std::min(static_cast<std::uint32_t>(oracle.raw(b, c)),
                          static_cast<std::uint32_t>(oracle.raw(b, d))));
    if (m == static_cast<std::uint32_t>(DistanceOracle::kUnreachableRaw)) return std::nullopt;
    return static_cast<int>(m);
}

/// Largest finite distance. nullopt for disconnected graphs; 0 for K1 and
/// the empty graph.
inline std::optional<int> diameter(const Graph& g, const DistanceOracle& oracle) {
    const int n = g.vertex_count();
    std::int32_t best = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (const std::int32_t d : oracle.row(u)) {
            if (d == DistanceOracle::kUnreachableRaw) return std::nullopt;
            if (d > best) best = d;
        }
    }
    return static_cast<int>(best);
}

}  // namespace edb
