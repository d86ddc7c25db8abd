#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "structure.hpp"

namespace starcolor {

struct Pattern {
    std::string name;
    Graph graph;
};

namespace detail {
inline bool parse_int(const std::string& s, int& out) {
    if (s.empty() || s.size() > 3) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(s);
    return true;
}

// universal vertex 0 over the given graph on 1..n
inline Graph cone(const Graph& base) {
    GraphBuilder b(base.order() + 1);
    for (auto [u, v] : base.edges()) b.add_edge(u + 1, v + 1);
    for (int v = 1; v <= base.order(); ++v) b.add_edge(0, v);
    return b.build();
}
}  // namespace detail

// Recognized names: K3, co-K3, P3, co-P3, P4, C4, co-C4 (2K2), C5, Kn, Pn, Cn, Wn,
// diamond, dart, gem, net, Ki,j.
inline Pattern make_pattern(const std::string& name) {
    int a = 0, c = 0;
    auto fail = [&]() -> Pattern { throw InputError("unknown pattern: " + name); };
    if (name == "diamond") return {name, build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})};
    if (name == "dart")  // universal vertex over P3 + K1
        return {name, detail::cone(build_graph(4, {{0, 1}, {1, 2}}))};
    if (name == "gem") return {name, detail::cone(path_graph(4))};
    if (name == "net")
        return {name, build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}})};
    if (name == "claw") return {name, complete_bipartite_graph(1, 3)};
    if (name == "co-K3") return {name, GraphBuilder(3).build()};
    if (name == "co-P3") return {name, build_graph(3, {{0, 1}})};
    if (name == "co-C4" || name == "2K2") return {name, build_graph(4, {{0, 1}, {2, 3}})};
    if (name.size() >= 2 && name[0] == 'K') {
        auto comma = name.find(',');
        if (comma != std::string::npos) {
            if (!detail::parse_int(name.substr(1, comma - 1), a) || !detail::parse_int(name.substr(comma + 1), c) ||
                a < 1 || c < 1)
                return fail();
            return {name, complete_bipartite_graph(a, c)};
        }
        if (!detail::parse_int(name.substr(1), a) || a < 1) return fail();
        return {name, complete_graph(a)};
    }
    if (name.size() >= 2 && name[0] == 'P') {
        if (!detail::parse_int(name.substr(1), a) || a < 1) return fail();
        return {name, path_graph(a)};
    }
    if (name.size() >= 2 && name[0] == 'C') {
        if (!detail::parse_int(name.substr(1), a) || a < 3) return fail();
        return {name, cycle_graph(a)};
    }
    if (name.size() >= 2 && name[0] == 'W') {
        if (!detail::parse_int(name.substr(1), a) || a < 3) return fail();
        return {name, detail::cone(cycle_graph(a))};
    }
    return fail();
}

// Calls f(embedding) for each induced copy of `pattern` in g, where embedding[i] is the
// image of pattern vertex i. Stops when f returns false. Returns false if stopped.
template <class F>
bool for_each_induced(const Graph& g, const Graph& pattern, F&& f) {
    const int p = pattern.order();
    if (p == 0) return f(std::vector<Vertex>{});
    if (p > g.order()) return true;

    // Pattern vertex order: each next vertex maximizes adjacency to those already placed.
    std::vector<int> order;
    std::vector<bool> placed(p, false);
    for (int step = 0; step < p; ++step) {
        int best = -1, best_links = -1;
        for (int x = 0; x < p; ++x) {
            if (placed[x]) continue;
            int links = 0;
            for (int y : order) links += pattern.adjacent(x, y);
            if (links > best_links || (links == best_links && pattern.degree(x) > pattern.degree(best))) {
                best = x;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    // For each position, an earlier placed neighbor to draw candidates from (or -1).
    std::vector<int> anchor(p, -1);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < i; ++j)
            if (pattern.adjacent(order[i], order[j])) {
                anchor[i] = j;
                break;
            }

    std::vector<Vertex> image(p, -1);
    std::vector<Vertex> at(p, -1);  // g-vertex chosen at position i
    VertexSet used(g.order());
    bool keep_going = true;

    std::function<void(int)> place = [&](int i) {
        if (!keep_going) return;
        if (i == p) {
            keep_going = f(image);
            return;
        }
        const int x = order[i];
        auto try_vertex = [&](Vertex v) {
            if (!keep_going || used.test(v) || g.degree(v) < pattern.degree(x)) return;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(v, at[j]) != pattern.adjacent(x, order[j])) return;
            used.set(v);
            at[i] = v;
            image[x] = v;
            place(i + 1);
            used.reset(v);
        };
        if (anchor[i] >= 0) {
            for (Vertex v : g.neighbor_list(at[anchor[i]])) try_vertex(v);
        } else {
            for (Vertex v = 0; v < g.order(); ++v) try_vertex(v);
        }
    };
    place(0);
    return keep_going;
}

// Witness as a sorted vertex set.
inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& pattern) {
    std::optional<std::vector<Vertex>> found;
    for_each_induced(g, pattern, [&](const std::vector<Vertex>& emb) {
        std::vector<Vertex> w = emb;
        std::sort(w.begin(), w.end());
        found = std::move(w);
        return false;
    });
    return found;
}

inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const std::string& name) {
    return contains_induced(g, make_pattern(name).graph);
}

// Induced copy that meets `touch`.
inline std::optional<std::vector<Vertex>> contains_induced_touching(const Graph& g, const Graph& pattern,
                                                                    const VertexSet& touch) {
    std::optional<std::vector<Vertex>> found;
    for_each_induced(g, pattern, [&](const std::vector<Vertex>& emb) {
        for (Vertex v : emb)
            if (touch.test(v)) {
                std::vector<Vertex> w = emb;
                std::sort(w.begin(), w.end());
                found = std::move(w);
                return false;
            }
        return true;
    });
    return found;
}

// A chordless cycle of length >= 4, in cycle order, or absent. Exponential search.
inline std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> path;
    std::optional<std::vector<Vertex>> hole;
    // Path s = path[0] < every other vertex; path stays chordless.
    std::function<bool(Vertex)> extend = [&](Vertex s) -> bool {
        Vertex last = path.back();
        for (Vertex w : g.neighbor_list(last)) {
            if (w <= s) continue;
            bool ok = true;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (path[i] == w || g.adjacent(w, path[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (path.size() >= 2 && g.adjacent(w, s)) {
                if (path.size() >= 3) {
                    path.push_back(w);
                    hole = path;
                    return true;
                }
                continue;  // triangle or chord to s
            }
            path.push_back(w);
            if (extend(s)) return true;
            path.pop_back();
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        if (extend(s)) return hole;
    }
    return std::nullopt;
}

// Maximum cardinality search followed by a perfect-elimination check.
inline bool is_chordal(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(n, 0), position(n, -1);
    std::vector<Vertex> order(n);
    for (int i = n - 1; i >= 0; --i) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (position[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
        position[best] = i;
        order[i] = best;
        for (Vertex w : g.neighbor_list(best))
            if (position[w] < 0) ++weight[w];
    }
    // order is a PEO iff for each v, its later neighbors minus the earliest form a clique
    // with that earliest one (checked via neighborhood containment).
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        Vertex parent = -1;
        for (Vertex w : g.neighbor_list(v))
            if (position[w] > i && (parent < 0 || position[w] < position[parent])) parent = w;
        if (parent < 0) continue;
        for (Vertex w : g.neighbor_list(v))
            if (position[w] > i && w != parent && !g.adjacent(parent, w)) return false;
    }
    return true;
}

// (clique side, independent side) if g is split.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> split_partition(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> byDeg(n);
    for (int v = 0; v < n; ++v) byDeg[v] = v;
    std::stable_sort(byDeg.begin(), byDeg.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(byDeg[i]) >= i) m = i + 1;
    std::vector<Vertex> q(byDeg.begin(), byDeg.begin() + m), s(byDeg.begin() + m, byDeg.end());
    if (!g.is_clique(q) || !g.is_independent(s)) return std::nullopt;
    std::sort(q.begin(), q.end());
    std::sort(s.begin(), s.end());
    return std::make_pair(q, s);
}

struct ClassFlags {
    bool split = false;
    bool threshold = false;
    bool block = false;
    bool net_free_block = false;
    bool chordal_small = false;
    bool triangle_free = false;
    bool c4_free = false;
    bool diamond_free = false;
    bool w4_dart_gem_free = false;
};

inline bool is_w4_dart_gem_free(const Graph& g) {
    return !contains_induced(g, "W4") && !contains_induced(g, "dart") && !contains_induced(g, "gem");
}

inline ClassFlags recognize(const Graph& g) {
    ClassFlags f;
    const bool two_k2 = contains_induced(g, "2K2").has_value();
    f.c4_free = !contains_induced(g, "C4");
    f.triangle_free = !contains_induced(g, "K3");
    f.diamond_free = !contains_induced(g, "diamond");
    f.chordal_small = is_chordal(g);
    f.split = !two_k2 && f.c4_free && !contains_induced(g, "C5");
    f.threshold = !two_k2 && f.c4_free && !contains_induced(g, "P4");
    f.block = f.chordal_small && f.diamond_free;
    f.net_free_block = f.block && !contains_induced(g, "net");
    f.w4_dart_gem_free = is_w4_dart_gem_free(g);
    return f;
}

}  // namespace starcolor
