#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"

namespace starcolor {

struct WeightedEdge {
    int u = 0, v = 0;
    int weight = 0;  // K(uv): size of the clique B(uv)
    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Weighted tree (T, K) over nodes 0..nodes-1.
struct NetblockRep {
    int nodes = 1;
    std::vector<WeightedEdge> edges;
    friend bool operator==(const NetblockRep&, const NetblockRep&) = default;
};

inline void validate(const NetblockRep& rep) {
    if (rep.nodes < 1) throw InputError("netblock tree needs at least one node");
    if (static_cast<int>(rep.edges.size()) != rep.nodes - 1) throw InputError("netblock tree must have nodes-1 edges");
    std::vector<int> parent(rep.nodes);
    for (int i = 0; i < rep.nodes; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : rep.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= rep.nodes || e.v >= rep.nodes || e.u == e.v)
            throw InputError("netblock edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is invalid");
        if (e.weight < 0) throw InputError("netblock weights must be nonnegative");
        int a = find(e.u), b = find(e.v);
        if (a == b) throw InputError("netblock edges contain a cycle");
        parent[a] = b;
    }
}

struct NetblockGraph {
    Graph graph;
    // Tree node i is vertex i; b_sets[e] holds the vertices of B(edges[e]).
    std::vector<std::vector<Vertex>> b_sets;
    std::vector<int> edge_of;  // vertex -> edge index for B vertices, -1 for tree nodes
};

inline NetblockGraph netblock_graph(const NetblockRep& rep) {
    validate(rep);
    NetblockGraph out;
    GraphBuilder b(rep.nodes);
    out.edge_of.assign(rep.nodes, -1);
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
        const auto& e = rep.edges[i];
        std::vector<Vertex> clique{e.u, e.v};
        std::vector<Vertex> bs;
        for (int x = 0; x < e.weight; ++x) {
            bs.push_back(b.add_vertex());
            out.edge_of.push_back(static_cast<int>(i));
        }
        clique.insert(clique.end(), bs.begin(), bs.end());
        b.add_clique(clique);
        out.b_sets.push_back(std::move(bs));
    }
    out.graph = b.build();
    return out;
}

namespace detail {

// Biconnected components as vertex lists (iterative Hopcroft-Tarjan).
inline std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::vector<Vertex>> out;
    std::vector<Edge> estack;
    int timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.push_back({root});
            continue;
        }
        // frame: vertex, parent, next neighbor index
        std::vector<std::tuple<Vertex, Vertex, std::size_t>> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, parent, idx] = stack.back();
            auto nb = g.neighbor_list(v);
            if (idx < nb.size()) {
                Vertex w = nb[idx++];
                if (disc[w] < 0) {
                    estack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, v, 0);
                } else if (w != parent && disc[w] < disc[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            Vertex child = v, up = parent;
            stack.pop_back();
            if (up < 0) continue;
            low[up] = std::min(low[up], low[child]);
            if (low[child] >= disc[up]) {
                std::vector<Vertex> comp;
                while (true) {
                    Edge e = estack.back();
                    estack.pop_back();
                    comp.push_back(e.first);
                    comp.push_back(e.second);
                    if (e == Edge{up, child}) break;
                }
                std::sort(comp.begin(), comp.end());
                comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

}  // namespace detail

struct NetblockExtraction {
    NetblockRep rep;
    std::vector<Vertex> node_vertex;              // tree node -> vertex of g
    std::vector<std::vector<Vertex>> b_vertices;  // per rep edge, vertices of g in B(e)
};

// Absent unless every biconnected component is a clique with at most two cut vertices.
inline std::optional<NetblockExtraction> extract_netblock_classes(const Graph& g) {
    if (!g.connected()) throw InputError("netblock extraction needs a connected graph");
    const int n = g.order();
    if (n == 0) return std::nullopt;
    NetblockExtraction ex;
    if (n == 1) {
        ex.node_vertex = {0};
        return ex;
    }
    auto blocks = detail::biconnected_components(g);
    std::vector<int> count(n, 0);
    for (const auto& b : blocks) {
        if (!g.is_clique(b)) return std::nullopt;
        for (Vertex v : b) ++count[v];
    }
    std::map<Vertex, int> node_of;
    auto node = [&](Vertex v) {
        auto [it, fresh] = node_of.emplace(v, static_cast<int>(ex.node_vertex.size()));
        if (fresh) ex.node_vertex.push_back(v);
        return it->second;
    };
    for (const auto& b : blocks) {
        std::vector<Vertex> cuts, rest;
        for (Vertex v : b) (count[v] > 1 ? cuts : rest).push_back(v);
        if (cuts.size() > 2) return std::nullopt;
        while (cuts.size() < 2) {  // a block with fewer cut vertices lends tree leaves
            cuts.push_back(rest.front());
            rest.erase(rest.begin());
        }
        int a = node(cuts[0]), c = node(cuts[1]);
        ex.rep.edges.push_back({a, c, static_cast<int>(rest.size())});
        ex.b_vertices.push_back(rest);
    }
    ex.rep.nodes = static_cast<int>(ex.node_vertex.size());
    return ex;
}

inline std::optional<NetblockRep> extract_netblock(const Graph& g) {
    auto ex = extract_netblock_classes(g);
    if (!ex) return std::nullopt;
    return ex->rep;
}

// A maximal (k-1)-subtree: a component of T under the weight-(k-1) edges, isolated nodes included.
struct SubtreeComponent {
    std::vector<int> nodes;
    std::optional<int> exit;  // lowest-id (k-1)-exit node, if any
};

inline std::vector<SubtreeComponent> k1_subtrees(const NetblockRep& rep, int k) {
    validate(rep);
    if (k < 1) throw InputError("palette size must be at least 1");
    std::vector<std::vector<int>> tree(rep.nodes);
    std::vector<bool> is_exit(rep.nodes, false);
    for (const auto& e : rep.edges) {
        if (e.weight == k - 1) {
            tree[e.u].push_back(e.v);
            tree[e.v].push_back(e.u);
        }
        if (e.weight < k - 1) is_exit[e.u] = is_exit[e.v] = true;
    }
    std::vector<SubtreeComponent> out;
    std::vector<bool> seen(rep.nodes, false);
    for (int s = 0; s < rep.nodes; ++s) {
        if (seen[s]) continue;
        SubtreeComponent c;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.nodes.push_back(v);
            for (int w : tree[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(c.nodes.begin(), c.nodes.end());
        for (int v : c.nodes)
            if (is_exit[v]) {
                c.exit = v;
                break;
            }
        out.push_back(std::move(c));
    }
    return out;
}

struct WeightViolation {
    WeightedEdge edge;
};
struct SubtreeCertificate {
    std::vector<int> nodes;
    int k = 0;
};
struct Colorable {};

using NetblockVerdict = std::variant<Colorable, WeightViolation, SubtreeCertificate>;

inline NetblockVerdict star_k_colorable_netblock(const NetblockRep& rep, int k) {
    validate(rep);
    if (k < 1) throw InputError("palette size must be at least 1");
    if (rep.nodes == 1) return Colorable{};  // K_1 has no stars
    for (const auto& e : rep.edges)
        if (e.weight > k) return WeightViolation{e};
    for (auto& c : k1_subtrees(rep, k))
        if (!c.exit) return SubtreeCertificate{std::move(c.nodes), k};
    return Colorable{};
}

inline bool is_colorable(const NetblockVerdict& v) { return std::holds_alternative<Colorable>(v); }

// Rules: adjacent tree nodes differ; each B(vw) rainbow and, when K(vw) <= k-2, avoiding both
// endpoints; when K(vw) = k-1, B(vw) avoids the endpoint farther from its subtree's exit.
inline Coloring color_netblock(const NetblockRep& rep, const ListAssignment& lists, int k) {
    if (!is_colorable(star_k_colorable_netblock(rep, k)))
        throw InputError("netblock representation is not star " + std::to_string(k) + "-colorable");
    auto ng = netblock_graph(rep);
    validate(ng.graph, lists);
    for (const auto& l : lists.lists)
        if (static_cast<int>(l.size()) < k) throw InputError("lists must have at least k colors");

    Coloring rho;
    rho.colors.assign(ng.graph.order(), 0);
    if (rep.nodes == 1) {
        rho.colors[0] = lists.lists[0][0];
        rho.k = rho.colors[0];
        return rho;
    }
    std::vector<std::vector<int>> tree(rep.nodes);
    for (const auto& e : rep.edges) {
        tree[e.u].push_back(e.v);
        tree[e.v].push_back(e.u);
    }
    // rule (1): BFS from node 0
    std::vector<int> order{0}, parent(rep.nodes, -1);
    std::vector<bool> seen(rep.nodes, false);
    seen[0] = true;
    rho.colors[0] = lists.lists[0][0];
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int w : tree[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = v;
            for (int c : lists.lists[w])
                if (c != rho.colors[v]) {
                    rho.colors[w] = c;
                    break;
                }
            order.push_back(w);
        }
    }

    // distance of each node to the exit of its (k-1)-subtree, within the subtree
    std::vector<int> dist(rep.nodes, -1);
    std::vector<std::vector<int>> sub(rep.nodes);
    for (const auto& e : rep.edges)
        if (e.weight == k - 1) {
            sub[e.u].push_back(e.v);
            sub[e.v].push_back(e.u);
        }
    for (const auto& c : k1_subtrees(rep, k)) {
        std::vector<int> q{*c.exit};
        dist[*c.exit] = 0;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : sub[q[h]])
                if (dist[w] < 0) {
                    dist[w] = dist[q[h]] + 1;
                    q.push_back(w);
                }
    }

    // rules (2) and (3)
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
        const auto& e = rep.edges[i];
        std::vector<int> avoid;
        if (e.weight <= k - 2) {
            avoid = {rho.colors[e.u], rho.colors[e.v]};
        } else if (e.weight == k - 1) {
            int far = dist[e.u] > dist[e.v] ? e.u : e.v;
            avoid = {rho.colors[far]};
        }
        for (Vertex x : ng.b_sets[i]) {
            int pick = 0;
            for (int c : lists.lists[x])
                if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) {
                    pick = c;
                    break;
                }
            if (pick == 0) throw std::logic_error("no admissible color for a B(e) vertex");
            rho.colors[x] = pick;
            avoid.push_back(pick);
        }
    }
    int mx = 0;
    for (int c : rho.colors) mx = std::max(mx, c);
    rho.k = mx;
    return rho;
}

// Text format: "nodes N" then one "u v K" line per tree edge.
inline NetblockRep read_netblock_rep(std::istream& in) {
    NetblockRep rep;
    std::string line;
    int lineno = 0;
    if (!detail::next_data_line(in, line, lineno)) throw InputError("netblock rep: empty input");
    {
        std::istringstream ss(line);
        std::string tag, extra;
        if (!(ss >> tag >> rep.nodes) || tag != "nodes" || (ss >> extra))
            throw InputError("netblock rep line " + std::to_string(lineno) + ": expected 'nodes N'");
    }
    while (detail::next_data_line(in, line, lineno)) {
        std::istringstream ss(line);
        WeightedEdge e;
        std::string extra;
        if (!(ss >> e.u >> e.v >> e.weight) || (ss >> extra))
            throw InputError("netblock rep line " + std::to_string(lineno) + ": expected 'u v K'");
        rep.edges.push_back(e);
    }
    validate(rep);
    return rep;
}

inline void write_netblock_rep(std::ostream& out, const NetblockRep& rep) {
    out << "nodes " << rep.nodes << '\n';
    for (const auto& e : rep.edges) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

}  // namespace starcolor
