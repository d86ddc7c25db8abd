#pragma once

// Brute-force reference implementations. Deliberately naive: subsets, permutations and
// plain backtracking, sharing nothing with the library beyond Graph itself.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "starcolor.hpp"

namespace oracle {

using namespace starcolor;

inline bool bit(std::uint64_t m, int i) { return (m >> i & 1U) != 0; }

// ---- graphs up to isomorphism ----

// Upper-triangle adjacency code under vertex order perm.
inline std::uint64_t code(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t c = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c = c << 1 | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    return c;
}

// Maximum code over orders listing vertices by nonincreasing degree.
inline std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::uint64_t best = 0;
    // permute within runs of equal degree
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(perm[j]) == g.degree(perm[i])) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == runs.size()) {
            best = std::max(best, code(g, perm));
            return;
        }
        auto [a, b] = runs[r];
        std::sort(perm.begin() + a, perm.begin() + b);
        do rec(r + 1);
        while (std::next_permutation(perm.begin() + a, perm.begin() + b));
    };
    rec(0);
    return best;
}

// One representative per isomorphism class on exactly n vertices (n <= 7).
inline const std::vector<Graph>& graphs_of_order(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(GraphBuilder(n).build());
    } else {
        std::set<std::uint64_t> seen;
        for (const Graph& h : graphs_of_order(n - 1))
            for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
                GraphBuilder b(h);
                Vertex x = b.add_vertex();
                for (int v = 0; v < n - 1; ++v)
                    if (bit(mask, v)) b.add_edge(x, v);
                Graph g = b.build();
                if (seen.insert(canonical_code(g)).second) out.push_back(g);
            }
    }
    return cache[n] = std::move(out);
}

// ---- stars and bicliques by subsets ----

inline std::vector<Vertex> members(std::uint64_t m) {
    std::vector<Vertex> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1U) out.push_back(i);
    return out;
}

// Center of the star induced by vs, or -1. For an edge the smaller end.
inline Vertex star_center(const Graph& g, const std::vector<Vertex>& vs) {
    if (vs.size() < 2) return -1;
    for (Vertex c : vs) {
        bool ok = true;
        for (Vertex x : vs)
            if (x != c && !g.adjacent(c, x)) ok = false;
        for (Vertex x : vs)
            for (Vertex y : vs)
                if (x != c && y != c && x < y && g.adjacent(x, y)) ok = false;
        if (ok) return c;
    }
    return -1;
}

// Two nonempty independent sides complete to each other, or nullopt.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> biclique_sides(const Graph& g,
                                                                                       const std::vector<Vertex>& vs) {
    if (vs.size() < 2) return std::nullopt;
    std::vector<Vertex> a, b;
    for (Vertex x : vs) (g.adjacent(vs[0], x) ? b : a).push_back(x);
    if (b.empty()) return std::nullopt;
    for (Vertex x : a)
        for (Vertex y : a)
            if (g.adjacent(x, y)) return std::nullopt;
    for (Vertex x : b)
        for (Vertex y : b)
            if (g.adjacent(x, y)) return std::nullopt;
    for (Vertex x : a)
        for (Vertex y : b)
            if (!g.adjacent(x, y)) return std::nullopt;
    return std::make_pair(a, b);
}

inline std::vector<Star> stars_by_subsets(const Graph& g) {
    const int n = g.order();
    std::vector<Star> out;
    for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
        auto vs = members(m);
        Vertex c = star_center(g, vs);
        if (c < 0) continue;
        bool maximal = true;
        for (Vertex x = 0; x < n && maximal; ++x)
            if (!bit(m, x) && star_center(g, members(m | 1ULL << x)) >= 0) maximal = false;
        if (!maximal) continue;
        std::vector<Vertex> leaves;
        for (Vertex x : vs)
            if (x != c) leaves.push_back(x);
        out.push_back(make_star(c, leaves));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Biclique> bicliques_by_subsets(const Graph& g) {
    const int n = g.order();
    std::vector<Biclique> out;
    for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
        auto sides = biclique_sides(g, members(m));
        if (!sides) continue;
        bool maximal = true;
        for (Vertex x = 0; x < n && maximal; ++x)
            if (!bit(m, x) && biclique_sides(g, members(m | 1ULL << x))) maximal = false;
        if (maximal) out.push_back(make_biclique(sides->first, sides->second));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Maximal star vertex sets for larger graphs: per center, every independent subset of N(v)
// (grown by plain recursion), kept when no other neighbor can join it.
inline std::vector<std::vector<Vertex>> star_sets(const Graph& g) {
    std::set<std::vector<Vertex>> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Vertex> nb(g.neighbor_list(v).begin(), g.neighbor_list(v).end());
        std::vector<Vertex> leaves;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == nb.size()) {
                if (leaves.empty()) return;
                for (Vertex y : nb) {
                    bool free = std::find(leaves.begin(), leaves.end(), y) == leaves.end();
                    for (Vertex x : leaves) free = free && !g.adjacent(x, y);
                    if (free) return;
                }
                if (leaves.size() == 1) {
                    // {v, u} must not extend to a star centered at u
                    for (Vertex x : g.neighbor_list(leaves[0]))
                        if (x != v && !g.adjacent(x, v)) return;
                }
                std::vector<Vertex> set = leaves;
                set.push_back(v);
                std::sort(set.begin(), set.end());
                out.insert(set);
                return;
            }
            bool fits = true;
            for (Vertex x : leaves) fits = fits && !g.adjacent(x, nb[i]);
            if (fits) {
                leaves.push_back(nb[i]);
                rec(i + 1);
                leaves.pop_back();
            }
            rec(i + 1);
        };
        rec(0);
    }
    return {out.begin(), out.end()};
}

// ---- exhaustive colorings ----

// Backtracking over vertices 0..n-1. A set is rejected as soon as its last vertex is colored
// and it is monochromatic. Closed twins get distinct colors; with `symmetric` and uniform
// palettes, twins outside `pinned` also get increasing colors (one coloring per orbit).
class Colorings {
public:
    Colorings(const Graph& g, std::vector<std::vector<Vertex>> sets, int k) : g_(g), k_(k), sets_(std::move(sets)) {
        const int n = g.order();
        closing_.resize(n);
        for (std::size_t i = 0; i < sets_.size(); ++i)
            closing_[*std::max_element(sets_[i].begin(), sets_[i].end())].push_back(static_cast<int>(i));
        twin_before_.assign(n, {});
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (g.adjacent(u, v) && g.closed_neighborhood(u) == g.closed_neighborhood(v)) twin_before_[v].push_back(u);
    }

    void set_lists(std::vector<std::vector<int>> lists) { lists_ = std::move(lists); }
    void set_symmetry(std::vector<Vertex> pinned) {
        symmetric_ = true;
        pinned_.assign(g_.order(), false);
        for (Vertex v : pinned) pinned_[v] = true;
    }

    // Number of leaves of the search tree without set pruning; the oracle's state count.
    double states() const {
        double s = 1;
        for (Vertex v = 0; v < g_.order(); ++v) s *= static_cast<double>(palette(v).size());
        return s;
    }

    // f(colors) returns false to stop. `fixed` pins colors (0 = free).
    bool for_each(const std::vector<int>& fixed, const std::function<bool(const std::vector<int>&)>& f) {
        color_ = fixed;
        color_.resize(g_.order(), 0);
        fixed_ = color_;
        f_ = &f;
        return rec(0);
    }

    std::optional<std::vector<int>> find(const std::vector<int>& fixed = {}) {
        std::optional<std::vector<int>> out;
        for_each(fixed, [&](const std::vector<int>& c) {
            out = c;
            return false;
        });
        return out;
    }

private:
    std::vector<int> palette(Vertex v) const {
        if (!lists_.empty()) return lists_[v];
        std::vector<int> p(k_);
        std::iota(p.begin(), p.end(), 1);
        return p;
    }

    bool rec(Vertex v) {
        if (v == g_.order()) return (*f_)(color_);
        std::vector<int> choices = fixed_[v] ? std::vector<int>{fixed_[v]} : palette(v);
        for (int c : choices) {
            bool ok = true;
            for (Vertex u : twin_before_[v]) {
                if (color_[u] == c) ok = false;
                if (symmetric_ && !pinned_[u] && !pinned_[v] && !fixed_[u] && !fixed_[v] && color_[u] > c) ok = false;
            }
            if (!ok) continue;
            color_[v] = c;
            for (int s : closing_[v]) {
                const auto& set = sets_[s];
                if (std::all_of(set.begin(), set.end(), [&](Vertex x) { return color_[x] == c; })) {
                    ok = false;
                    break;
                }
            }
            if (ok && !rec(v + 1)) {
                color_[v] = fixed_[v];
                return false;
            }
        }
        color_[v] = fixed_[v];
        return true;
    }

    const Graph& g_;
    int k_;
    std::vector<std::vector<Vertex>> sets_;
    std::vector<std::vector<int>> closing_;
    std::vector<std::vector<Vertex>> twin_before_;
    std::vector<std::vector<int>> lists_;
    bool symmetric_ = false;
    std::vector<bool> pinned_;
    std::vector<int> color_, fixed_;
    const std::function<bool(const std::vector<int>&)>* f_ = nullptr;
};

inline std::vector<std::vector<Vertex>> biclique_sets(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& b : bicliques_by_subsets(g)) out.push_back(b.vertices());
    return out;
}

inline std::vector<std::vector<Vertex>> sets_for(const Graph& g, Mode mode) {
    return mode == Mode::star ? star_sets(g) : biclique_sets(g);
}

inline bool colorable(const Graph& g, int k, Mode mode = Mode::star) {
    Colorings c(g, sets_for(g, mode), k);
    c.set_symmetry({});
    return c.find().has_value();
}

inline bool list_colorable(const Graph& g, const std::vector<std::vector<int>>& lists, Mode mode = Mode::star) {
    Colorings c(g, sets_for(g, mode), 0);
    c.set_lists(lists);
    return c.find().has_value();
}

// Every coloring with no monochromatic set; the direct definition.
inline bool valid(const std::vector<std::vector<Vertex>>& sets, const std::vector<int>& colors) {
    for (const auto& s : sets)
        if (std::all_of(s.begin(), s.end(), [&](Vertex x) { return colors[x] == colors[s[0]]; })) return false;
    return true;
}

// ---- trees ----

// All labeled trees on t nodes via Prufer sequences.
inline std::vector<std::vector<std::pair<int, int>>> labeled_trees(int t) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (t == 1) return {{}};
    if (t == 2) return {{{0, 1}}};
    std::vector<int> seq(t - 2, 0);
    while (true) {
        std::vector<int> degree(t, 1);
        for (int x : seq) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        for (int x : seq)
            for (int leaf = 0; leaf < t; ++leaf)
                if (degree[leaf] == 1) {
                    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        std::vector<int> last;
        for (int v = 0; v < t; ++v)
            if (degree[v] == 1) last.push_back(v);
        edges.emplace_back(last[0], last[1]);
        out.push_back(edges);
        int i = 0;
        while (i < t - 2 && ++seq[i] == t) seq[i++] = 0;
        if (i == t - 2) break;
    }
    return out;
}

// Weighted trees on up to max_nodes nodes with weights 0..max_weight, one per isomorphism class.
inline std::vector<NetblockRep> weighted_trees(int max_nodes, int max_weight) {
    std::vector<NetblockRep> out;
    for (int t = 1; t <= max_nodes; ++t) {
        std::set<std::vector<std::array<int, 3>>> seen;
        std::vector<int> perm(t);
        for (const auto& tree : labeled_trees(t)) {
            const int m = t - 1;
            int combos = 1;
            for (int i = 0; i < m; ++i) combos *= max_weight + 1;
            for (int w = 0; w < combos; ++w) {
                NetblockRep rep;
                rep.nodes = t;
                int x = w;
                for (auto [u, v] : tree) {
                    rep.edges.push_back({u, v, x % (max_weight + 1)});
                    x /= max_weight + 1;
                }
                std::vector<std::array<int, 3>> best;
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<std::array<int, 3>> e;
                    for (const auto& ed : rep.edges)
                        e.push_back({std::min(perm[ed.u], perm[ed.v]), std::max(perm[ed.u], perm[ed.v]), ed.weight});
                    std::sort(e.begin(), e.end());
                    if (best.empty() || e < best) best = e;
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (seen.insert(best).second) out.push_back(rep);
            }
        }
    }
    return out;
}

}  // namespace oracle
