#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "enumeration.hpp"
#include "patterns.hpp"
#include "structure.hpp"

namespace starcolor {

namespace detail {
inline void require_lists(const Graph& g, const ListAssignment& lists, int at_least) {
    validate(g, lists);
    for (std::size_t v = 0; v < lists.lists.size(); ++v)
        if (static_cast<int>(lists.lists[v].size()) < at_least)
            throw InputError("list of vertex " + std::to_string(v) + " has fewer than " + std::to_string(at_least) +
                             " colors");
}

inline int first_other(const std::vector<int>& list, int avoid) {
    for (int c : list)
        if (c != avoid) return c;
    return list.front();
}

inline void set_k(Coloring& rho) {
    rho.k = 0;
    for (int c : rho.colors) rho.k = std::max(rho.k, c);
}
}  // namespace detail

// BFS forest; each vertex avoids its parent's color.
inline Coloring color_triangle_free(const Graph& g, const ListAssignment& lists) {
    if (auto t = contains_induced(g, "K3"))
        throw InputError("graph has a triangle at vertices " + std::to_string((*t)[0]) + " " + std::to_string((*t)[1]) +
                         " " + std::to_string((*t)[2]));
    detail::require_lists(g, lists, 2);
    const int n = g.order();
    Coloring rho;
    rho.colors.assign(n, 0);
    std::vector<Vertex> queue;
    for (Vertex r = 0; r < n; ++r) {
        if (rho.colors[r]) continue;
        rho.colors[r] = lists.lists[r][0];
        queue.assign(1, r);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex v = queue[h];
            for (Vertex w : g.neighbor_list(v)) {
                if (rho.colors[w]) continue;
                rho.colors[w] = detail::first_other(lists.lists[w], rho.colors[v]);
                queue.push_back(w);
            }
        }
    }
    detail::set_k(rho);
    return rho;
}

// Every maximal biclique is a star or contains a false dominated vertex.
inline bool is_biclique_dominated(const Graph& g) {
    const int n = g.order();
    std::vector<bool> dominated(n, false);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n && !dominated[v]; ++w) dominated[v] = false_dominates(g, w, v);
    bool ok = true;
    for_each_maximal_biclique(g, [&](const Biclique& b) {
        if (b.s.size() == 1 || b.t.size() == 1) return true;
        for (Vertex v : b.vertices())
            if (dominated[v]) return true;
        ok = false;
        return false;
    });
    return ok;
}

// Star coloring first, then for each w in id order recolor every v that w false dominates.
inline Coloring color_biclique_dominated(const Graph& g, const ListAssignment& lists) {
    if (!is_biclique_dominated(g)) throw InputError("graph is not biclique-dominated");
    Coloring rho = color_triangle_free(g, lists);
    const int n = g.order();
    for (Vertex w = 0; w < n; ++w)
        for (Vertex v = 0; v < n; ++v)
            if (false_dominates(g, w, v)) rho.colors[v] = detail::first_other(lists.lists[v], rho.colors[w]);
    detail::set_k(rho);
    return rho;
}

// Connected P3-free graphs are complete; all four parameters equal n.
inline int chromatic_p3_free(const Graph& g) {
    if (!g.connected()) throw InputError("graph is not connected");
    if (g.size() != static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2)
        throw InputError("connected P3-free graphs are complete; this one is not");
    return g.order();
}

inline int chromatic_co_p3_free(const Graph& g) {
    if (contains_induced(g, "co-P3")) throw InputError("graph has an induced co-P3");
    if (g.size() == 0) return 1;
    return std::max<int>(2, static_cast<int>(universal_vertices(g).size()));
}

// Universal vertices rainbow; every part of the complete multipartite remainder gets two colors.
inline Coloring color_co_p3_free(const Graph& g, const ListAssignment& lists) {
    const int need = chromatic_co_p3_free(g);
    detail::require_lists(g, lists, need);
    const int n = g.order();
    Coloring rho;
    rho.colors.assign(n, 0);
    auto universal = universal_vertices(g);
    std::vector<int> used;
    for (Vertex v : universal) {
        for (int c : lists.lists[v])
            if (std::find(used.begin(), used.end(), c) == used.end()) {
                rho.colors[v] = c;
                break;
            }
        used.push_back(rho.colors[v]);
    }
    VertexSet rest = g.all() - VertexSet::of(n, universal);
    for (const auto& part : components(g.complement(), rest)) {
        rho.colors[part[0]] = lists.lists[part[0]][0];
        for (std::size_t i = 1; i < part.size(); ++i)
            rho.colors[part[i]] = i == 1 ? detail::first_other(lists.lists[part[i]], rho.colors[part[0]])
                                         : lists.lists[part[i]][0];
    }
    detail::set_k(rho);
    return rho;
}

// Pairs (v, w) with N(v) a subset of N(w).
inline std::vector<std::pair<Vertex, Vertex>> false_domination_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w = 0; w < g.order(); ++w)
            if (false_dominates(g, w, v)) out.emplace_back(v, w);
    return out;
}

struct CobipartiteTransform {
    Graph graph;  // complement of the padded bipartite graph
    // For vertex x: -1 for original vertices, else the index of the edge whose gadget holds x.
    std::vector<int> gadget_edge;
    std::vector<std::string> roles;
};

// For every edge vw (v on the side of vertex 0's class), four stars a_i + A_i with k-1 leaves
// and edges v-a1, v-a3, w-a2, w-a4, a1-a2, a3-a4; the output is the complement.
inline CobipartiteTransform cobipartite_transform(const Graph& g, int k) {
    if (k < 3) throw InputError("co-bipartite transform needs k >= 3");
    if (!g.connected()) throw InputError("graph is not connected");
    std::vector<int> side;
    if (!is_bipartite(g, &side)) throw InputError("graph is not bipartite");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && g.neighbors(u) == g.neighbors(v))
                throw InputError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are false twins");
    CobipartiteTransform out;
    GraphBuilder h(g);
    out.gadget_edge.assign(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) out.roles.push_back("v" + std::to_string(v));
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [v, w] = edges[e];
        if (side[v] != 0) std::swap(v, w);
        Vertex a[4];
        for (int i = 0; i < 4; ++i) {
            a[i] = h.add_vertex();
            out.gadget_edge.push_back(static_cast<int>(e));
            out.roles.push_back("a" + std::to_string(i + 1) + "(" + std::to_string(v) + "," + std::to_string(w) + ")");
            for (int j = 0; j < k - 1; ++j) {
                h.add_leaf(a[i]);
                out.gadget_edge.push_back(static_cast<int>(e));
                out.roles.push_back("A" + std::to_string(i + 1) + "(" + std::to_string(v) + "," + std::to_string(w) +
                                    ")[" + std::to_string(j) + "]");
            }
        }
        h.add_edge(v, a[0]);
        h.add_edge(v, a[2]);
        h.add_edge(w, a[1]);
        h.add_edge(w, a[3]);
        h.add_edge(a[0], a[1]);
        h.add_edge(a[2], a[3]);
    }
    out.graph = h.build().complement();
    return out;
}

}  // namespace starcolor
