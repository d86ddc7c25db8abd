#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "netblock.hpp"
#include "patterns.hpp"
#include "threshold.hpp"

namespace starcolor {

using Rng = std::mt19937_64;

namespace detail {
inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }
}  // namespace detail

// Random recursive tree plus extra edges that close no triangle. Connected.
inline Graph random_triangle_free(int n, Rng& rng, double extra = 0.3) {
    if (n < 1) throw InputError("need at least one vertex");
    GraphBuilder b(n);
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < n; ++i) b.add_edge(perm[i], perm[detail::uniform(rng, 0, i - 1)]);
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (auto [u, v] : candidates) {
        if (b.has_edge(u, v) || !detail::coin(rng, extra)) continue;
        bool closes = false;
        for (Vertex w = 0; w < n && !closes; ++w) closes = b.has_edge(u, w) && b.has_edge(v, w);
        if (!closes) b.add_edge(u, v);
    }
    return b.build();
}

// Every vertex gets `size` distinct random colors out of 1..palette.
inline ListAssignment random_lists(int n, int size, int palette, Rng& rng) {
    if (size > palette) throw InputError("list size exceeds palette");
    ListAssignment l;
    l.k = size;
    std::vector<int> all(palette);
    for (int c = 0; c < palette; ++c) all[c] = c + 1;
    for (int v = 0; v < n; ++v) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> list(all.begin(), all.begin() + size);
        std::sort(list.begin(), list.end());
        l.lists.push_back(std::move(list));
    }
    return l;
}

struct SplitSample {
    Graph graph;
    std::vector<Vertex> q, s;  // clique side, independent side
};

// Random nonempty Q; each S vertex picks a random subset of Q.
inline SplitSample random_split(int n, Rng& rng, double density = 0.5) {
    if (n < 1) throw InputError("need at least one vertex");
    SplitSample out;
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const int m = detail::uniform(rng, 1, n);
    out.q.assign(perm.begin(), perm.begin() + m);
    out.s.assign(perm.begin() + m, perm.end());
    GraphBuilder b(n);
    b.add_clique(out.q);
    for (Vertex x : out.s)
        for (Vertex y : out.q)
            if (detail::coin(rng, density)) b.add_edge(x, y);
    std::sort(out.q.begin(), out.q.end());
    std::sort(out.s.begin(), out.s.end());
    out.graph = b.build();
    return out;
}

// Uniform over compositions of n into an odd number of parts.
inline ThresholdRep random_threshold_rep(int n, Rng& rng) {
    if (n < 1) throw InputError("need at least one vertex");
    while (true) {
        std::vector<int> parts{1};
        for (int i = 1; i < n; ++i) {
            if (detail::coin(rng, 0.5))
                parts.push_back(1);
            else
                ++parts.back();
        }
        if (parts.size() % 2 == 0) continue;
        ThresholdRep rep;
        for (std::size_t i = 0; i < parts.size(); ++i) (i % 2 == 0 ? rep.q : rep.s).push_back(parts[i]);
        return rep;
    }
}

// Random tree whose netblock graph has exactly n vertices.
inline NetblockRep random_netblock_rep(int n, Rng& rng) {
    if (n < 1) throw InputError("need at least one vertex");
    NetblockRep rep;
    rep.nodes = n == 1 ? 1 : detail::uniform(rng, 2, n);
    for (int i = 1; i < rep.nodes; ++i) rep.edges.push_back({detail::uniform(rng, 0, i - 1), i, 0});
    for (int left = n - rep.nodes; left > 0; --left)
        ++rep.edges[detail::uniform(rng, 0, static_cast<int>(rep.edges.size()) - 1)].weight;
    return rep;
}

// Vertices arrive one by one with a random neighborhood; an arrival that creates an induced
// W4, dart or gem is retried, and after 50 failures the vertex becomes a true twin.
// None of the three patterns has true twins, so twins never create one.
inline Graph random_w4_dart_gem_free(int n, Rng& rng, double density = 0.4) {
    if (n < 1) throw InputError("need at least one vertex");
    static const Graph bad[] = {make_pattern("W4").graph, make_pattern("dart").graph, make_pattern("gem").graph};
    GraphBuilder b(1);
    for (int v = 1; v < n; ++v) {
        bool placed = false;
        for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
            GraphBuilder trial = b;
            Vertex x = trial.add_vertex();
            trial.add_edge(x, detail::uniform(rng, 0, v - 1));
            for (Vertex u = 0; u < v; ++u)
                if (detail::coin(rng, density)) trial.add_edge(x, u);
            Graph g = trial.build();
            VertexSet touch = VertexSet::of(g.order(), {x});
            placed = std::none_of(std::begin(bad), std::end(bad),
                                  [&](const Graph& p) { return contains_induced_touching(g, p, touch).has_value(); });
            if (placed) b = trial;
        }
        if (!placed) {
            Vertex u = detail::uniform(rng, 0, v - 1);
            Vertex x = b.add_vertex();
            b.add_edge(x, u);
            for (Vertex w = 0; w < v; ++w)
                if (b.has_edge(u, w)) b.add_edge(x, w);
        }
    }
    return b.build();
}

inline const std::vector<std::string>& random_classes() {
    static const std::vector<std::string> names{"triangle-free", "split", "threshold", "netblock", "w4dartgem-free"};
    return names;
}

inline Graph random_graph_of_class(const std::string& cls, int n, std::uint64_t seed) {
    Rng rng(seed);
    if (cls == "triangle-free") return random_triangle_free(n, rng);
    if (cls == "split") return random_split(n, rng).graph;
    if (cls == "threshold") return threshold_graph(random_threshold_rep(n, rng)).graph;
    if (cls == "netblock") return netblock_graph(random_netblock_rep(n, rng)).graph;
    if (cls == "w4dartgem-free") return random_w4_dart_gem_free(n, rng);
    throw InputError("unknown graph class: " + cls);
}

}  // namespace starcolor
