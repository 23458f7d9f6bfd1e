#pragma once

#include <algorithm>
#include <vector>

#include "edb/graph.hpp"

namespace edb {

/// True iff the graph has a single component. The empty graph and K1 count
/// as connected.
inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    std::size_t head = 0;
    int count = 1;
    while (head < queue.size()) {
        const Vertex u = queue[head++];
        for (const Graph::Neighbor& nb : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(nb.vertex)]) {
                seen[static_cast<std::size_t>(nb.vertex)] = 1;
                ++count;
                queue.push_back(nb.vertex);
            }
        }
    }
    return count == n;
}

/// BFS 2-coloring over every component.
inline bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<signed char> color(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        std::size_t head = 0;
        while (head < queue.size()) {
            const Vertex u = queue[head++];
            const signed char cu = color[static_cast<std::size_t>(u)];
            for (const Graph::Neighbor& nb : g.neighbors(u)) {
                signed char& cv = color[static_cast<std::size_t>(nb.vertex)];
                if (cv == -1) {
                    cv = static_cast<signed char>(1 - cu);
                    queue.push_back(nb.vertex);
                } else if (cv == cu) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
/// Isolated vertices contribute no block.
inline std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> edge_stack;
    std::vector<std::vector<EdgeId>> blocks;

    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    int timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto nbrs = g.neighbors(fr.v);
            if (fr.next < nbrs.size()) {
                const Graph::Neighbor nb = nbrs[fr.next++];
                if (nb.edge == fr.parent_edge) continue;
                const std::size_t w = static_cast<std::size_t>(nb.vertex);
                if (disc[w] == -1) {
                    edge_stack.push_back(nb.edge);
                    disc[w] = low[w] = timer++;
                    stack.push_back({nb.vertex, nb.edge, 0});
                } else if (disc[w] < disc[static_cast<std::size_t>(fr.v)]) {
                    edge_stack.push_back(nb.edge);
                    low[static_cast<std::size_t>(fr.v)] =
                        std::min(low[static_cast<std::size_t>(fr.v)], disc[w]);
                }
            } else {
                const Vertex child = fr.v;
                const EdgeId tree_edge = fr.parent_edge;
                stack.pop_back();
                if (stack.empty()) continue;
                Frame& parent = stack.back();
                const std::size_t p = static_cast<std::size_t>(parent.v);
                const std::size_t c = static_cast<std::size_t>(child);
                low[p] = std::min(low[p], low[c]);
                if (low[c] >= disc[p]) {
                    std::vector<EdgeId> block;
                    while (!edge_stack.empty()) {
                        const EdgeId e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == tree_edge) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

/// True iff some cycle of even length exists. A graph is even-cycle-free
/// exactly when every biconnected block is a single edge or an odd cycle:
/// a 2-connected block with more edges than vertices has an ear whose two
/// closing cycles have lengths of different parity, so one is even.
inline bool has_even_cycle(const Graph& g) {
    std::vector<Vertex> verts;
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() == 1) continue;
        verts.clear();
        for (const EdgeId e : block) {
            const auto [u, v] = g.endpoints(e);
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        const std::size_t vcount = verts.size();
        if (block.size() == vcount && vcount % 2 == 1) continue;  // odd cycle block
        return true;
    }
    return false;
}

/// The degree-1 vertices, ascending.
inline std::vector<Vertex> pendant_vertices(const Graph& g) {
    std::vector<Vertex> result;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) result.push_back(v);
    return result;
}

}  // namespace edb
