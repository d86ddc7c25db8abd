#pragma once

#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "enumeration.hpp"
#include "graph.hpp"

namespace starcolor {

// (Q, S) with |Q| = |S| + 1 and all entries positive. Indices are 1-based in the API.
struct ThresholdRep {
    std::vector<int> q, s;

    int r() const { return static_cast<int>(s.size()); }
    int order() const {
        return std::accumulate(q.begin(), q.end(), 0) + std::accumulate(s.begin(), s.end(), 0);
    }
    friend bool operator==(const ThresholdRep&, const ThresholdRep&) = default;
};

inline void validate(const ThresholdRep& rep) {
    if (rep.q.empty() || rep.q.size() != rep.s.size() + 1) throw InputError("threshold rep needs |Q| = |S| + 1 >= 1");
    for (int x : rep.q)
        if (x < 1) throw InputError("threshold rep entries must be positive");
    for (int x : rep.s)
        if (x < 1) throw InputError("threshold rep entries must be positive");
}

struct ThresholdRole {
    bool in_q = true;
    int index = 0;  // 1-based
};

struct ThresholdGraph {
    Graph graph;
    std::vector<ThresholdRole> roles;
    std::vector<std::vector<Vertex>> q_blocks;  // q_blocks[i-1] = Q_i
    std::vector<std::vector<Vertex>> s_sets;    // s_sets[i-1] = S_i
};

// Vertices numbered Q_1, S_1, Q_2, S_2, ..., Q_{r+1}.
inline ThresholdGraph threshold_graph(const ThresholdRep& rep) {
    validate(rep);
    ThresholdGraph tg;
    const int r = rep.r();
    GraphBuilder b;
    tg.q_blocks.resize(r + 1);
    tg.s_sets.resize(r);
    for (int i = 0; i <= r; ++i) {
        for (int x = 0; x < rep.q[i]; ++x) {
            tg.q_blocks[i].push_back(b.add_vertex());
            tg.roles.push_back({true, i + 1});
        }
        if (i < r)
            for (int x = 0; x < rep.s[i]; ++x) {
                tg.s_sets[i].push_back(b.add_vertex());
                tg.roles.push_back({false, i + 1});
            }
    }
    // Q_i ~ S_j and Q_i ~ Q_{j+1} for i <= j; each Q_i is a clique.
    for (int i = 0; i <= r; ++i) {
        b.add_clique(tg.q_blocks[i]);
        for (int j = i; j < r; ++j) {
            b.join(tg.q_blocks[i], tg.s_sets[j]);
            b.join(tg.q_blocks[i], tg.q_blocks[j + 1]);
        }
    }
    tg.graph = b.build();
    return tg;
}

struct ThresholdExtraction {
    ThresholdRep rep;
    std::vector<std::vector<Vertex>> q_blocks;  // vertices of g per Q_i
    std::vector<std::vector<Vertex>> s_sets;
};

// Peel alternately the dominating vertices and the then-isolated vertices.
inline std::optional<ThresholdExtraction> extract_threshold_classes(const Graph& g) {
    if (!g.connected()) throw InputError("threshold extraction needs a connected graph");
    ThresholdExtraction ex;
    if (g.order() == 0) return std::nullopt;
    VertexSet alive = g.all();
    while (true) {
        const int size = alive.count();
        VertexSet dom(g.order());
        alive.for_each([&](Vertex v) {
            if ((g.neighbors(v) & alive).count() == size - 1) dom.set(v);
        });
        if (dom.empty()) return std::nullopt;
        if (dom == alive) {
            ex.q_blocks.push_back(dom.to_vector());
            break;
        }
        alive -= dom;
        VertexSet iso(g.order());
        alive.for_each([&](Vertex v) {
            if (!g.neighbors(v).intersects(alive)) iso.set(v);
        });
        if (iso.empty()) return std::nullopt;
        ex.q_blocks.push_back(dom.to_vector());
        alive -= iso;
        if (alive.empty()) {
            // The last block is a single vertex indistinguishable from the isolated ones.
            auto rest = iso.to_vector();
            ex.q_blocks.push_back({rest.back()});
            rest.pop_back();
            ex.s_sets.push_back(rest);
            break;
        }
        ex.s_sets.push_back(iso.to_vector());
    }
    for (auto& b : ex.q_blocks) ex.rep.q.push_back(static_cast<int>(b.size()));
    for (auto& s : ex.s_sets) ex.rep.s.push_back(static_cast<int>(s.size()));
    return ex;
}

inline std::optional<ThresholdRep> extract_threshold(const Graph& g) {
    auto ex = extract_threshold_classes(g);
    if (!ex) return std::nullopt;
    return ex->rep;
}

// Smallest k-forbidden index (1-based), if any.
inline std::optional<int> k_forbidden_index(const ThresholdRep& rep, int k) {
    validate(rep);
    const int m = static_cast<int>(rep.q.size());
    // reach[i]: some j > i has q_j = k, q_h = k-1 for i < h < j, and s_h = 1 for i <= h < j.
    std::vector<bool> reach(m, false);
    for (int i = m - 2; i >= 0; --i)
        reach[i] = rep.s[i] == 1 && (rep.q[i + 1] == k || (rep.q[i + 1] == k - 1 && reach[i + 1]));
    for (int i = 0; i < m; ++i)
        if (rep.q[i] > k || (rep.q[i] == k && reach[i])) return i + 1;
    return std::nullopt;
}

namespace detail {
// First color of `list` not in `avoid`, or throws.
inline int pick_avoiding(const std::vector<int>& list, std::initializer_list<int> avoid_small,
                         const std::vector<int>& avoid = {}) {
    for (int c : list) {
        bool bad = false;
        for (int a : avoid_small) bad |= (a == c);
        for (int a : avoid) bad |= (a == c);
        if (!bad) return c;
    }
    throw std::logic_error("no admissible color left in list");
}
}  // namespace detail

// Star L-coloring by the ordered rules: Q_i rainbow, w_i in S_i, remaining S_i.
inline Coloring color_threshold(const ThresholdRep& rep, const ListAssignment& lists, int k) {
    validate(rep);
    if (k_forbidden_index(rep, k)) throw InputError("representation has a k-forbidden index");
    auto tg = threshold_graph(rep);
    validate(tg.graph, lists);
    for (const auto& l : lists.lists)
        if (static_cast<int>(l.size()) < k) throw InputError("lists must have at least k colors");
    const int r = rep.r();
    Coloring rho;
    rho.colors.assign(tg.graph.order(), 0);
    std::vector<int> w_color(r + 1, 0);  // w_color[i] for 1 <= i <= r
    int last_full = 0;                   // largest index h <= i with q_h >= k, 0 if none
    for (int i = 1; i <= r + 1; ++i) {
        const auto& qi = tg.q_blocks[i - 1];
        const int q = rep.q[i - 1];
        if (q >= k) last_full = i;
        const int p = last_full > 0 ? last_full : 1;  // p(i)
        // Q_i rainbow; avoid the color of w_{p(i)} when q_i < k and it is already colored.
        int avoid_p = (q < k && p < i) ? w_color[p] : 0;
        std::vector<int> used;
        for (Vertex v : qi) {
            int c = detail::pick_avoiding(lists.lists[v], {avoid_p}, used);
            rho.colors[v] = c;
            used.push_back(c);
        }
        if (i == r + 1) break;
        const auto& si = tg.s_sets[i - 1];
        // w_i: avoid rho(Q_i) when q_i < k; also avoid rho(w_{p(i)}) when q_i < k-1, 1 < i.
        Vertex w = si[0];
        std::vector<int> avoid = q < k ? used : std::vector<int>{};
        int avoid_w = (q < k - 1 && i > 1) ? w_color[p] : 0;
        int cw = detail::pick_avoiding(lists.lists[w], {avoid_w}, avoid);
        rho.colors[w] = cw;
        w_color[i] = cw;
        for (std::size_t x = 1; x < si.size(); ++x) {
            Vertex v = si[x];
            rho.colors[v] = x == 1 ? detail::pick_avoiding(lists.lists[v], {cw}) : lists.lists[v][0];
        }
    }
    int mx = 0;
    for (int c : rho.colors) mx = std::max(mx, c);
    rho.k = mx;
    return rho;
}

struct ThresholdChromatic {
    int k = 0;
    Coloring coloring;
};

inline ThresholdChromatic star_chromatic_threshold(const ThresholdRep& rep) {
    validate(rep);
    int m = *std::max_element(rep.q.begin(), rep.q.end());
    // one color only fits K1; the index test does not see this for k = 1
    if (rep.order() > 1) m = std::max(m, 2);
    int k = k_forbidden_index(rep, m) ? m + 1 : m;
    auto rho = color_threshold(rep, uniform_lists(rep.order(), k), k);
    rho.k = k;
    return {k, rho};
}

// Closed form: {v}({w} + S_i + ... + S_{j-1}) for v in Q_i, w in Q_j, i <= j.
inline std::vector<Star> maximal_stars_threshold(const ThresholdRep& rep) {
    auto tg = threshold_graph(rep);
    const int r = rep.r();
    std::vector<Star> out;
    for (int i = 0; i <= r; ++i)
        for (Vertex v : tg.q_blocks[i]) {
            for (Vertex w : tg.q_blocks[i])
                if (v < w) out.push_back(Star{v, {w}});
            std::vector<Vertex> chain;
            for (int j = i + 1; j <= r; ++j) {
                chain.insert(chain.end(), tg.s_sets[j - 1].begin(), tg.s_sets[j - 1].end());
                for (Vertex w : tg.q_blocks[j]) {
                    std::vector<Vertex> leaves = chain;
                    leaves.push_back(w);
                    out.push_back(make_star(v, std::move(leaves)));
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Text format: "Q: q1 q2 ..." then "S: s1 ...".
inline ThresholdRep read_threshold_rep(std::istream& in) {
    ThresholdRep rep;
    std::string line;
    int lineno = 0;
    bool have_q = false, have_s = false;
    while (detail::next_data_line(in, line, lineno)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        std::vector<int>* target = nullptr;
        if (tag == "Q:" && !have_q) {
            target = &rep.q;
            have_q = true;
        } else if (tag == "S:" && !have_s) {
            target = &rep.s;
            have_s = true;
        } else {
            throw InputError("threshold rep line " + std::to_string(lineno) + ": expected 'Q:' or 'S:'");
        }
        std::string tok;
        while (ss >> tok) {
            try {
                std::size_t used = 0;
                int x = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                target->push_back(x);
            } catch (const std::exception&) {
                throw InputError("threshold rep line " + std::to_string(lineno) + ": bad number '" + tok + "'");
            }
        }
    }
    if (!have_q) throw InputError("threshold rep: missing Q line");
    validate(rep);
    return rep;
}

inline void write_threshold_rep(std::ostream& out, const ThresholdRep& rep) {
    out << "Q:";
    for (int x : rep.q) out << ' ' << x;
    out << "\nS:";
    for (int x : rep.s) out << ' ' << x;
    out << '\n';
}

// All canonical reps with exactly `total` vertices.
inline std::vector<ThresholdRep> threshold_reps_of_order(int total) {
    std::vector<ThresholdRep> out;
    // compositions of total into an odd number of positive parts, alternating Q, S, Q, ...
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            if (parts.size() % 2 == 1) {
                ThresholdRep rep;
                for (std::size_t i = 0; i < parts.size(); ++i) (i % 2 == 0 ? rep.q : rep.s).push_back(parts[i]);
                out.push_back(rep);
            }
            return;
        }
        for (int x = 1; x <= left; ++x) {
            parts.push_back(x);
            rec(left - x);
            parts.pop_back();
        }
    };
    rec(total);
    return out;
}

}  // namespace starcolor
