#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace starcolor {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return num_edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    std::span<const Vertex> neighbor_list(Vertex v) const { return lists_[v]; }
    int degree(Vertex v) const { return static_cast<int>(lists_[v].size()); }

    VertexSet closed_neighborhood(Vertex v) const {
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }
    VertexSet all() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(num_edges_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : lists_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_independent(std::span<const Vertex> vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (adjacent(vs[i], vs[j])) return false;
        return true;
    }
    bool is_clique(std::span<const Vertex> vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!adjacent(vs[i], vs[j])) return false;
        return true;
    }

    // Subgraph induced by `keep`; vertex keep[i] becomes i.
    Graph induced(std::span<const Vertex> keep) const;
    Graph complement() const;

    bool connected() const {
        if (order() == 0) return true;
        VertexSet seen(order());
        std::vector<Vertex> stack{0};
        seen.set(0);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : lists_[v])
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
        }
        return seen.count() == order();
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<Vertex>> lists_;
    std::size_t num_edges_ = 0;
};

// Mutable staging area used by constructions; build() freezes it.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : adj_(n) {}
    explicit GraphBuilder(const Graph& g) : adj_(g.order()) {
        for (auto [u, v] : g.edges()) add_edge(u, v);
    }

    int order() const { return static_cast<int>(adj_.size()); }

    Vertex add_vertex() {
        adj_.emplace_back();
        return order() - 1;
    }
    // Returns the first of `count` consecutive new ids.
    Vertex add_vertices(int count) {
        Vertex first = order();
        adj_.resize(adj_.size() + count);
        return first;
    }

    void add_edge(Vertex u, Vertex v) {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].count(v) != 0; }

    void add_clique(std::span<const Vertex> vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    }
    void join(std::span<const Vertex> a, std::span<const Vertex> b) {
        for (Vertex u : a)
            for (Vertex v : b) add_edge(u, v);
    }
    // Attach a new pendant vertex to v.
    Vertex add_leaf(Vertex v) {
        Vertex l = add_vertex();
        add_edge(v, l);
        return l;
    }

    Graph build() const {
        Graph g;
        int n = order();
        g.adj_.assign(n, VertexSet(n));
        g.lists_.resize(n);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v : adj_[u]) {
                g.adj_[u].set(v);
                g.lists_[u].push_back(v);
                if (u < v) ++g.num_edges_;
            }
        }
        return g;
    }

private:
    std::vector<std::set<Vertex>> adj_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw InputError("negative vertex count");
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph Graph::induced(std::span<const Vertex> keep) const {
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

inline Graph Graph::complement() const {
    GraphBuilder b(order());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = u + 1; v < order(); ++v)
            if (!adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

// Named small graphs.
inline Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}
inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}
inline Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}
inline Graph complete_bipartite_graph(int a, int c) {
    GraphBuilder b(a + c);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < c; ++v) b.add_edge(u, a + v);
    return b.build();
}

// --- edge-list text format -------------------------------------------------
// First non-comment line "n m", then m lines "u v". '#' starts a comment.

namespace detail {
inline bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}
}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_data_line(in, line, lineno)) throw InputError("edge list: missing header");
    long long n = -1, m = -1;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra) || n < 0 || m < 0)
            throw InputError("edge list line " + std::to_string(lineno) + ": expected 'n m'");
    }
    GraphBuilder b(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_data_line(in, line, lineno))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream ss(line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw InputError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge list line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v) throw InputError("edge list line " + std::to_string(lineno) + ": self-loop");
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (detail::next_data_line(in, line, lineno))
        throw InputError("edge list line " + std::to_string(lineno) + ": trailing data");
    return b.build();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace starcolor
