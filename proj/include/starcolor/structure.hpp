#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace starcolor {

// True-twin classes: u, v share a block iff N[u] = N[v].
struct TwinPartition {
    std::vector<std::vector<Vertex>> blocks;  // each sorted; ordered by smallest member
    std::vector<int> block_of;
};

inline TwinPartition twin_partition(const Graph& g) {
    TwinPartition tp;
    const int n = g.order();
    tp.block_of.assign(n, -1);
    std::vector<VertexSet> closed(n);
    for (Vertex v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);
    for (Vertex v = 0; v < n; ++v) {
        if (tp.block_of[v] >= 0) continue;
        int b = static_cast<int>(tp.blocks.size());
        tp.blocks.push_back({v});
        tp.block_of[v] = b;
        // twins are adjacent, so only neighbors need checking
        for (Vertex u : g.neighbor_list(v))
            if (u > v && tp.block_of[u] < 0 && closed[u] == closed[v]) {
                tp.blocks[b].push_back(u);
                tp.block_of[u] = b;
            }
        std::sort(tp.blocks[b].begin(), tp.blocks[b].end());
    }
    return tp;
}

// w dominates v: N[v] is a subset of N[w].
inline bool dominates(const Graph& g, Vertex w, Vertex v) {
    return g.closed_neighborhood(v).is_subset_of(g.closed_neighborhood(w));
}

// w false dominates v: N(v) is a subset of N(w), v != w.
inline bool false_dominates(const Graph& g, Vertex w, Vertex v) {
    return v != w && g.neighbors(v).is_subset_of(g.neighbors(w));
}

struct BlockSeparation {
    Vertex center = -1;
    std::vector<std::vector<Vertex>> parts;  // parts[0] holds center and its dominators
};

// Absent when two adjacent non-dominating neighbors of v are not twins in G[N(v)].
inline std::optional<BlockSeparation> block_separation(const Graph& g, Vertex v) {
    BlockSeparation sep;
    sep.center = v;
    const VertexSet closed_v = g.closed_neighborhood(v);
    VertexSet rest(g.order());
    sep.parts.push_back({v});
    for (Vertex w : g.neighbor_list(v)) {
        if (closed_v.is_subset_of(g.closed_neighborhood(w)))
            sep.parts[0].push_back(w);
        else
            rest.set(w);
    }
    std::sort(sep.parts[0].begin(), sep.parts[0].end());

    // Remaining neighbors: components of G[rest] must be twin classes of G[N(v)].
    VertexSet seen(g.order());
    for (Vertex a = rest.first(); a >= 0; a = rest.next(a)) {
        if (seen.test(a)) continue;
        const VertexSet local = g.closed_neighborhood(a) & closed_v;
        std::vector<Vertex> part;
        std::vector<Vertex> stack{a};
        seen.set(a);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            part.push_back(x);
            if ((g.closed_neighborhood(x) & closed_v) != local) return std::nullopt;
            (g.neighbors(x) & rest).for_each([&](Vertex y) {
                if (!seen.test(y)) {
                    seen.set(y);
                    stack.push_back(y);
                }
            });
        }
        std::sort(part.begin(), part.end());
        sep.parts.push_back(std::move(part));
    }
    return sep;
}

inline bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr) {
    std::vector<int> col(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex v = queue[h];
            for (Vertex w : g.neighbor_list(v)) {
                if (col[w] < 0) {
                    col[w] = 1 - col[v];
                    queue.push_back(w);
                } else if (col[w] == col[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(col);
    return true;
}

// Vertices adjacent to every other vertex.
inline std::vector<Vertex> universal_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

// Connected components of the subgraph induced by `within`, as sorted vertex lists.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within) {
    std::vector<std::vector<Vertex>> out;
    VertexSet seen(g.order());
    for (Vertex s = within.first(); s >= 0; s = within.next(s)) {
        if (seen.test(s)) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            (g.neighbors(v) & within).for_each([&](Vertex w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace starcolor
