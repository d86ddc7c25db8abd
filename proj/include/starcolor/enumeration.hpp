#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <set>
#include <vector>

#include "graph.hpp"

namespace starcolor {

// {center} + leaves. For K_{1,1} the center is the smaller endpoint.
struct Star {
    Vertex center = -1;
    std::vector<Vertex> leaves;  // sorted

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs = leaves;
        vs.insert(std::lower_bound(vs.begin(), vs.end(), center), center);
        return vs;
    }
    // Both endpoints of a K_{1,1} are centers.
    bool has_center(Vertex v) const { return v == center || (leaves.size() == 1 && leaves[0] == v); }
    auto operator<=>(const Star&) const = default;
};

// Two independent sides, complete to each other; side s holds the smaller minimum.
struct Biclique {
    std::vector<Vertex> s, t;  // sorted

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs = s;
        vs.insert(vs.end(), t.begin(), t.end());
        std::sort(vs.begin(), vs.end());
        return vs;
    }
    auto operator<=>(const Biclique&) const = default;
};

inline Star make_star(Vertex center, std::vector<Vertex> leaves) {
    std::sort(leaves.begin(), leaves.end());
    if (leaves.size() == 1 && leaves[0] < center) std::swap(leaves[0], center);
    return Star{center, std::move(leaves)};
}

inline Biclique make_biclique(std::vector<Vertex> a, std::vector<Vertex> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (!a.empty() && !b.empty() && b.front() < a.front()) std::swap(a, b);
    return Biclique{std::move(a), std::move(b)};
}

// Bron-Kerbosch with pivoting on the complement of G[within]: reports every maximal
// independent set of G[within]. f returns false to stop; the function then returns false.
template <class F>
bool for_each_maximal_independent_set(const Graph& g, const VertexSet& within, F&& f) {
    const int n = g.order();
    if (within.empty()) return true;
    std::vector<Vertex> r;
    bool go = true;
    // non-neighbors of v inside `within`
    auto anti = [&](Vertex v) {
        VertexSet s = within - g.neighbors(v);
        s.reset(v);
        return s;
    };
    std::function<void(VertexSet, VertexSet)> rec = [&](VertexSet p, VertexSet x) {
        if (!go) return;
        if (p.empty()) {
            if (x.empty()) {
                std::vector<Vertex> out = r;
                std::sort(out.begin(), out.end());
                go = f(out);
            }
            return;
        }
        // pivot maximizing |P ∩ anti(u)|
        Vertex pivot = -1;
        int best = -1;
        VertexSet px = p | x;
        px.for_each([&](Vertex u) {
            int c = (p & anti(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        VertexSet cand = p - anti(pivot);
        for (Vertex v = cand.first(); v >= 0 && go; v = cand.next(v)) {
            VertexSet av = anti(v);
            r.push_back(v);
            rec(p & av, x & av);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    rec(within, VertexSet(n));
    return go;
}

// Calls f(star) once for every maximal star, in center order. Stops when f returns false.
template <class F>
bool for_each_maximal_star(const Graph& g, F&& f) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) continue;
        bool go = for_each_maximal_independent_set(g, g.neighbors(v), [&](const std::vector<Vertex>& leaves) {
            if (leaves.size() >= 2) return f(Star{v, leaves});
            // {v}{u} is maximal iff {v} is also maximal independent in N(u),
            // i.e. v is adjacent to every other neighbor of u.
            Vertex u = leaves[0];
            if (u < v) return true;  // reported from the smaller endpoint
            VertexSet others = g.neighbors(u);
            others.reset(v);
            if (!others.is_subset_of(g.neighbors(v))) return true;
            return f(Star{v, leaves});
        });
        if (!go) return false;
    }
    return true;
}

inline std::vector<Star> maximal_stars(const Graph& g) {
    std::vector<Star> out;
    for_each_maximal_star(g, [&](const Star& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Calls f(biclique) for every maximal biclique. Exponential in the worst case.
template <class F>
bool for_each_maximal_biclique(const Graph& g, F&& f, int max_n = 48) {
    const int n = g.order();
    if (n > max_n) throw CapExceeded("biclique enumeration: n=" + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
    bool go = true;
    std::vector<Vertex> side;
    // Grow independent sets S in increasing order, tracking C = common neighborhood.
    std::function<void(Vertex, const VertexSet&, const VertexSet&)> grow = [&](Vertex last, const VertexSet& common,
                                                                            const VertexSet& blocked) {
        if (!go) return;
        // Report bicliques with this S: T ranges over maximal independent sets of G[C].
        for_each_maximal_independent_set(g, common, [&](const std::vector<Vertex>& t) {
            if (t.front() < side.front()) return true;  // found with sides swapped
            // S must be maximal: no x outside S, independent of S, complete to T.
            VertexSet ct = g.neighbors(t[0]);
            for (std::size_t i = 1; i < t.size(); ++i) ct &= g.neighbors(t[i]);
            for (Vertex s : side) {
                ct -= g.neighbors(s);
                ct.reset(s);
            }
            if (!ct.empty()) return true;
            go = f(Biclique{side, t});
            return go;
        });
        for (Vertex v = last + 1; v < n && go; ++v) {
            if (blocked.test(v) || !common.intersects(g.neighbors(v))) continue;
            VertexSet c2 = common & g.neighbors(v);
            side.push_back(v);
            grow(v, c2, blocked | g.neighbors(v));
            side.pop_back();
        }
    };
    for (Vertex v = 0; v < n && go; ++v) {
        if (g.degree(v) == 0) continue;
        side.assign(1, v);
        grow(v, g.neighbors(v), g.neighbors(v));
    }
    return go;
}

inline std::vector<Biclique> maximal_bicliques(const Graph& g, int max_n = 48) {
    std::vector<Biclique> out;
    for_each_maximal_biclique(
        g,
        [&](const Biclique& b) {
            out.push_back(b);
            return true;
        },
        max_n);
    std::sort(out.begin(), out.end());
    return out;
}

// Split graphs: O(d(v)) candidate leaf sets per center, each a maximal independent set of N(v).
inline std::vector<Star> maximal_stars_split(const Graph& g, const std::vector<Vertex>& q,
                                             const std::vector<Vertex>& s) {
    const int n = g.order();
    VertexSet qs = VertexSet::of(n, q), ss = VertexSet::of(n, s);
    if (static_cast<int>(q.size() + s.size()) != n || qs.intersects(ss) || (qs | ss).count() != n ||
        !g.is_clique(q) || !g.is_independent(s))
        throw InputError("invalid split partition");

    std::set<Star> out;
    auto consider = [&](Vertex v, const VertexSet& leaves) {
        if (leaves.empty() || !leaves.is_subset_of(g.neighbors(v))) return;
        std::vector<Vertex> lv = leaves.to_vector();
        if (!g.is_independent(lv)) return;
        // maximal in N(v): every other neighbor has a neighbor among the leaves
        VertexSet rest = g.neighbors(v) - leaves;
        for (Vertex x = rest.first(); x >= 0; x = rest.next(x))
            if (!g.neighbors(x).intersects(leaves)) return;
        if (lv.size() == 1) {
            VertexSet others = g.neighbors(lv[0]);
            others.reset(v);
            if (!others.is_subset_of(g.neighbors(v))) return;
        }
        out.insert(make_star(v, std::move(lv)));
    };
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        consider(v, g.neighbors(v) & ss);
        for (Vertex w : q) {
            VertexSet cand = g.neighbors(v);
            cand.set(w);
            cand -= g.neighbors(w);
            cand.reset(v);
            if (!g.adjacent(v, w)) continue;
            consider(v, cand);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace starcolor
