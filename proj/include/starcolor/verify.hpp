#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "coloring.hpp"
#include "enumeration.hpp"
#include "structure.hpp"

namespace starcolor {

struct Violation {
    enum class Kind { mono_star, mono_biclique, block_repeat };
    Kind kind;
    std::variant<Star, Biclique, Edge> witness;

    std::vector<Vertex> vertices() const {
        if (auto* s = std::get_if<Star>(&witness)) return s->vertices();
        if (auto* b = std::get_if<Biclique>(&witness)) return b->vertices();
        auto e = std::get<Edge>(witness);
        return {e.first, e.second};
    }
};

inline const char* to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::mono_star: return "mono_star";
        case Violation::Kind::mono_biclique: return "mono_biclique";
        case Violation::Kind::block_repeat: return "block_repeat";
    }
    return "?";
}

// nullopt means the coloring is valid.
using VerifyResult = std::optional<Violation>;

namespace detail {
inline bool monochromatic(const Coloring& rho, Vertex first, const std::vector<Vertex>& rest) {
    for (Vertex v : rest)
        if (rho[v] != rho[first]) return false;
    return true;
}
}  // namespace detail

inline VerifyResult is_star_coloring(const Graph& g, const Coloring& rho) {
    validate(g, rho);
    VerifyResult out;
    for_each_maximal_star(g, [&](const Star& s) {
        if (!detail::monochromatic(rho, s.center, s.leaves)) return true;
        out = Violation{Violation::Kind::mono_star, s};
        return false;
    });
    return out;
}

inline VerifyResult is_biclique_coloring(const Graph& g, const Coloring& rho) {
    validate(g, rho);
    VerifyResult out;
    for_each_maximal_biclique(g, [&](const Biclique& b) {
        if (!detail::monochromatic(rho, b.s[0], b.s) || !detail::monochromatic(rho, b.s[0], b.t)) return true;
        out = Violation{Violation::Kind::mono_biclique, b};
        return false;
    });
    return out;
}

inline VerifyResult verify(const Graph& g, const Coloring& rho, Mode mode) {
    return mode == Mode::star ? is_star_coloring(g, rho) : is_biclique_coloring(g, rho);
}

// First pair of twins sharing a color.
inline VerifyResult rainbow_blocks(const TwinPartition& tp, const Coloring& rho) {
    for (const auto& block : tp.blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (rho[block[i]] == rho[block[j]])
                    return Violation{Violation::Kind::block_repeat, Edge{block[i], block[j]}};
    return std::nullopt;
}

// Polynomial check for graphs in which every vertex is block separable.
inline VerifyResult is_star_coloring_blocksep(const Graph& g, const Coloring& rho) {
    validate(g, rho);
    if (auto bad = rainbow_blocks(twin_partition(g), rho)) return bad;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto sep = block_separation(g, v);
        if (!sep) throw InputError("vertex " + std::to_string(v) + " is not block separable");
        if (sep->parts.size() < 3) continue;  // l <= 1: no star with two or more leaves at v
        std::vector<Vertex> leaves;
        for (std::size_t i = 1; i < sep->parts.size(); ++i) {
            Vertex hit = -1;
            for (Vertex x : sep->parts[i])
                if (rho[x] == rho[v]) {
                    hit = x;
                    break;
                }
            if (hit < 0) {
                leaves.clear();
                break;
            }
            leaves.push_back(hit);
        }
        if (!leaves.empty()) return Violation{Violation::Kind::mono_star, make_star(v, leaves)};
    }
    return std::nullopt;
}

struct StarBicliqueCheck {
    bool exists = false;
    std::optional<Biclique> witness;
    // Existence was concluded from the count of monochromatic stars at v reaching n.
    bool by_count_bound = false;
};

// Is some monochromatic maximal star {v}S also a maximal biclique? Assumes rainbow twin blocks.
inline StarBicliqueCheck mono_star_biclique_exists(const Graph& g, const Coloring& rho, Vertex v) {
    validate(g, rho);
    auto sep = block_separation(g, v);
    if (!sep) throw InputError("vertex " + std::to_string(v) + " is not block separable");
    StarBicliqueCheck out;
    const int n = g.order();

    // A twin of v with the same color is a monochromatic maximal biclique.
    for (Vertex u : g.neighbor_list(v))
        if (rho[u] == rho[v] && g.closed_neighborhood(u) == g.closed_neighborhood(v)) {
            out.exists = true;
            out.witness = make_biclique({v}, {u});
            return out;
        }
    const std::size_t ell = sep->parts.size() - 1;
    if (ell == 0) return out;

    std::vector<std::vector<Vertex>> mono(ell);
    long long product = 1;
    for (std::size_t i = 0; i < ell; ++i) {
        for (Vertex x : sep->parts[i + 1])
            if (rho[x] == rho[v]) mono[i].push_back(x);
        if (mono[i].empty()) return out;
        product = std::min<long long>(product * static_cast<long long>(mono[i].size()), n);
    }
    if (product >= n) {
        out.exists = true;
        out.by_count_bound = true;
    }

    // Walk transversals in lexicographic order; a star {v}S extends to a larger biclique
    // iff some vertex outside N[v] is complete to S. At most n walks are needed when the
    // bound holds, since each outside vertex blocks at most one such star.
    std::vector<std::size_t> idx(ell, 0);
    const VertexSet outside = g.all() - g.closed_neighborhood(v);
    for (int walks = 0; walks <= n; ++walks) {
        VertexSet common = outside;
        std::vector<Vertex> leaves(ell);
        for (std::size_t i = 0; i < ell; ++i) {
            leaves[i] = mono[i][idx[i]];
            common &= g.neighbors(leaves[i]);
        }
        if (common.empty()) {
            out.exists = true;
            out.witness = make_biclique({v}, leaves);
            return out;
        }
        std::size_t pos = ell;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < mono[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
    return out;
}

// With I = common neighborhood of S: decide whether a monochromatic maximal biclique ST
// exists, for an independent S with 2 <= |S| < i_cap.
inline std::optional<Biclique> mono_biclique_from_indepset(const Graph& g, const Coloring& rho,
                                                          const std::vector<Vertex>& s, int i_cap) {
    validate(g, rho);
    if (s.size() < 2) throw InputError("independent set needs at least two vertices");
    if (static_cast<int>(s.size()) >= i_cap) throw InputError("independent set reaches the size cap");
    if (!g.is_independent(s)) throw InputError("set is not independent");
    const int c = rho[s[0]];
    for (Vertex x : s)
        if (rho[x] != c) return std::nullopt;
    VertexSet common = g.all();
    for (Vertex x : s) common &= g.neighbors(x);
    if (common.empty()) return std::nullopt;

    std::vector<Vertex> t;
    for (const auto& block : components(g, common)) {
        if (!g.is_clique(block)) throw InputError("common neighborhood is not a union of cliques");
        Vertex hit = -1;
        for (Vertex x : block)
            if (rho[x] == c) {
                hit = x;
                break;
            }
        if (hit < 0) return std::nullopt;
        t.push_back(hit);
    }
    // S must be a maximal independent set of J, the common neighborhood of I. Requiring
    // J = S instead misses bicliques whose S-side is blocked by a vertex adjacent to S.
    VertexSet closure = g.all();
    common.for_each([&](Vertex w) { closure &= g.neighbors(w); });
    const VertexSet in_s = VertexSet::of(g.order(), s);
    for (Vertex x = closure.first(); x >= 0; x = closure.next(x))
        if (!in_s.test(x) && !g.neighbors(x).intersects(in_s)) return std::nullopt;
    return make_biclique(s, t);
}

// Biclique verification for {W4, dart, gem}-free graphs without induced K_{i_cap,i_cap}.
inline VerifyResult is_biclique_coloring_fast(const Graph& g, const Coloring& rho, int i_cap) {
    validate(g, rho);
    if (auto bad = rainbow_blocks(twin_partition(g), rho)) {
        auto e = std::get<Edge>(bad->witness);
        return Violation{Violation::Kind::mono_biclique, make_biclique({e.first}, {e.second})};
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        auto r = mono_star_biclique_exists(g, rho, v);
        if (r.exists && r.witness) return Violation{Violation::Kind::mono_biclique, *r.witness};
        if (r.exists) throw InputError("count bound reached without a located witness at vertex " + std::to_string(v));
    }
    VerifyResult out;
    std::vector<Vertex> s;
    std::function<void(Vertex, const VertexSet&, const VertexSet&)> grow = [&](Vertex last, const VertexSet& common,
                                                                            const VertexSet& blocked) {
        if (out) return;
        if (s.size() >= 2) {
            if (auto b = mono_biclique_from_indepset(g, rho, s, i_cap)) {
                out = Violation{Violation::Kind::mono_biclique, *b};
                return;
            }
        }
        if (static_cast<int>(s.size()) + 1 >= i_cap) return;
        for (Vertex v = last + 1; v < g.order() && !out; ++v) {
            if (blocked.test(v) || rho[v] != rho[s[0]] || !common.intersects(g.neighbors(v))) continue;
            s.push_back(v);
            grow(v, common & g.neighbors(v), blocked | g.neighbors(v));
            s.pop_back();
        }
    };
    for (Vertex v = 0; v < g.order() && !out; ++v) {
        if (g.degree(v) == 0) continue;
        s.assign(1, v);
        grow(v, g.neighbors(v), g.closed_neighborhood(v));
    }
    return out;
}

}  // namespace starcolor
