#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "enumeration.hpp"
#include "graph.hpp"
#include "solve.hpp"
#include "structure.hpp"

namespace starcolor {

// A vertex of a blueprint: the index-th member of a named group (anchor or new).
struct Slot {
    std::string group;
    int index = 0;
};

// Declarative description of a gadget: anchor groups it connects, groups of new vertices,
// the edges among them, and nested gadgets with their anchors bound to local slots.
struct Blueprint {
    struct Sub {
        std::string prefix;
        std::shared_ptr<const Blueprint> blueprint;
        std::map<std::string, std::vector<Slot>> bind;
    };

    std::string kind;
    std::vector<std::pair<std::string, int>> anchors;
    std::vector<std::pair<std::string, int>> groups;
    std::vector<std::pair<Slot, Slot>> edges;
    std::vector<Sub> subs;

    int size_of(const std::string& group) const {
        for (const auto& [name, n] : anchors)
            if (name == group) return n;
        for (const auto& [name, n] : groups)
            if (name == group) return n;
        throw std::logic_error("blueprint " + kind + " has no group " + group);
    }
    std::vector<Slot> all(const std::string& group) const {
        std::vector<Slot> out;
        for (int i = 0; i < size_of(group); ++i) out.push_back({group, i});
        return out;
    }
    void edge(Slot a, Slot b) { edges.emplace_back(std::move(a), std::move(b)); }
    void clique(const std::vector<Slot>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) edge(s[i], s[j]);
    }
    void join(const std::vector<Slot>& a, const std::vector<Slot>& b) {
        for (const auto& x : a)
            for (const auto& y : b) edge(x, y);
    }
    // a[i] - b[i] for every i
    void match(const std::string& a, const std::string& b) {
        for (int i = 0; i < size_of(a); ++i) edge({a, i}, {b, i});
    }
    void nest(std::string prefix, Blueprint inner, std::map<std::string, std::vector<Slot>> bind) {
        subs.push_back({std::move(prefix), std::make_shared<const Blueprint>(std::move(inner)), std::move(bind)});
    }
};

inline std::vector<Slot> operator+(std::vector<Slot> a, const std::vector<Slot>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct GadgetHandle {
    std::string kind;
    std::vector<Vertex> anchors;
    std::vector<std::pair<Vertex, std::string>> internals;  // vertex, role
    std::map<std::string, std::vector<Vertex>> groups;      // role group -> vertices in index order
    std::vector<Edge> expected;                             // every edge the blueprint demands

    const std::vector<Vertex>& group(const std::string& name) const {
        auto it = groups.find(name);
        if (it == groups.end()) throw std::out_of_range("gadget " + kind + " has no group " + name);
        return it->second;
    }
    std::vector<Vertex> internal_vertices() const {
        std::vector<Vertex> out;
        for (const auto& [v, role] : internals) out.push_back(v);
        return out;
    }
};

namespace detail {

inline void instantiate(GraphBuilder& b, const Blueprint& bp, const std::string& prefix,
                        const std::map<std::string, std::vector<Vertex>>& anchors, GadgetHandle& h) {
    std::map<std::string, std::vector<Vertex>> at;
    for (const auto& [name, n] : bp.anchors) {
        auto it = anchors.find(name);
        if (it == anchors.end() || static_cast<int>(it->second.size()) != n)
            throw InputError(bp.kind + ": anchor group " + name + " needs " + std::to_string(n) + " vertices");
        for (Vertex v : it->second)
            if (v < 0 || v >= b.order()) throw InputError(bp.kind + ": anchor " + std::to_string(v) + " is missing");
        at[name] = it->second;
    }
    for (const auto& [name, n] : bp.groups) {
        auto& vs = at[name];
        for (int i = 0; i < n; ++i) {
            Vertex v = b.add_vertex();
            vs.push_back(v);
            h.internals.emplace_back(v, prefix + name + "[" + std::to_string(i) + "]");
        }
        h.groups[prefix + name] = vs;
    }
    auto resolve = [&](const Slot& s) { return at.at(s.group).at(s.index); };
    for (const auto& [x, y] : bp.edges) {
        Vertex u = resolve(x), v = resolve(y);
        b.add_edge(u, v);
        h.expected.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (const auto& sub : bp.subs) {
        std::map<std::string, std::vector<Vertex>> inner;
        for (const auto& [name, slots] : sub.bind)
            for (const auto& s : slots) inner[name].push_back(resolve(s));
        instantiate(b, *sub.blueprint, prefix + sub.prefix + ".", inner, h);
    }
}

}  // namespace detail

// The single attachment engine: every gadget below is a blueprint run through here.
inline GadgetHandle attach(GraphBuilder& b, const Blueprint& bp, const std::map<std::string, std::vector<Vertex>>& anchors) {
    GadgetHandle h;
    h.kind = bp.kind;
    for (const auto& [name, n] : bp.anchors) {
        auto it = anchors.find(name);
        if (it != anchors.end()) h.anchors.insert(h.anchors.end(), it->second.begin(), it->second.end());
    }
    detail::instantiate(b, bp, "", anchors, h);
    std::sort(h.expected.begin(), h.expected.end());
    h.expected.erase(std::unique(h.expected.begin(), h.expected.end()), h.expected.end());
    return h;
}

// Edge-by-edge comparison: every expected edge is present and no other edge touches an internal
// vertex. Returns human-readable discrepancies (empty when the gadget is intact).
inline std::vector<std::string> audit(const Graph& g, const GadgetHandle& h) {
    std::vector<std::string> out;
    std::set<Edge> expected(h.expected.begin(), h.expected.end());
    for (auto [u, v] : expected)
        if (!g.adjacent(u, v)) out.push_back("missing edge " + std::to_string(u) + "-" + std::to_string(v));
    for (const auto& [v, role] : h.internals)
        for (Vertex w : g.neighbor_list(v))
            if (!expected.count({std::min(v, w), std::max(v, w)}))
                out.push_back("extra edge " + std::to_string(v) + "-" + std::to_string(w) + " at " + role);
    return out;
}

// ---- blueprints ----

inline Blueprint keeper_blueprint(int k) {
    Blueprint bp;
    bp.kind = "keeper";
    bp.anchors = {{"v", 1}, {"w", 1}};
    bp.groups = {{"D", k - 1}};
    for (int i = 1; i < k; ++i) bp.groups.emplace_back("C" + std::to_string(i), k);
    bp.clique(bp.all("D") + bp.all("v") + bp.all("w"));
    for (int i = 1; i < k; ++i) bp.clique(bp.all("C" + std::to_string(i)) + std::vector<Slot>{{"D", i - 1}});
    return bp;
}

inline Blueprint switcher_blueprint(int k, int h) {
    Blueprint bp;
    bp.kind = "switcher";
    bp.anchors = {{"U", h}};
    bp.groups = {{"C", k}};
    for (int i = 0; i < h; ++i) bp.clique(bp.all("C") + std::vector<Slot>{{"U", i}});
    return bp;
}

inline Blueprint long_switcher_blueprint(int k, int h) {
    Blueprint bp;
    bp.kind = "long_switcher";
    bp.anchors = {{"W", h}};
    bp.groups = {{"U", h}, {"leaf", h}};
    bp.match("U", "leaf");
    bp.nest("S", switcher_blueprint(k, h), {{"U", bp.all("U")}});
    for (int i = 0; i < h; ++i)
        bp.nest("Q" + std::to_string(i + 1), keeper_blueprint(k), {{"v", {{"W", i}}}, {"w", {{"U", i}}}});
    return bp;
}

inline Blueprint cluster_blueprint(int ell) {
    Blueprint bp;
    bp.kind = "cluster";
    bp.anchors = {{"s", 1}, {"X", ell}, {"NX", ell}};
    bp.groups = {{"V", ell}, {"leaf", ell}};
    bp.match("V", "leaf");
    bp.join(bp.all("s"), bp.all("X") + bp.all("NX") + bp.all("V"));
    // hole x_1, -x_1, v_1, ..., x_l, -x_l, v_l
    for (int i = 0; i < ell; ++i) {
        bp.edge({"X", i}, {"NX", i});
        bp.edge({"NX", i}, {"V", i});
        bp.edge({"V", i}, {"X", (i + 1) % ell});
    }
    return bp;
}

inline Blueprint list_switcher_blueprint(int h) {
    Blueprint bp;
    bp.kind = "list_switcher";
    bp.anchors = {{"W", h}};
    bp.groups = {{"U", h}};
    bp.match("W", "U");
    bp.nest("S", switcher_blueprint(2, h), {{"U", bp.all("U")}});
    return bp;
}

inline int forcer_b_size(int k) {
    int p = 1;
    for (int i = 0; i < k; ++i) p *= k;
    return p - 1;
}

inline Blueprint forcer_blueprint(int k) {
    Blueprint bp;
    bp.kind = "forcer";
    const int nb = forcer_b_size(k);
    bp.anchors = {{"v", 1}};
    bp.groups = {{"A", k - 1}, {"B", nb}, {"leafA", k - 1}, {"leafB", nb}};
    bp.match("A", "leafA");
    bp.match("B", "leafB");
    std::vector<Slot> astar = bp.all("v") + bp.all("A");
    for (const auto& a : astar)
        for (int j = 0; j < nb; ++j) {
            std::string name = "C(" + (a.group == "v" ? std::string("v") : "A" + std::to_string(a.index)) + ",B" +
                               std::to_string(j) + ")";
            bp.nest(name, switcher_blueprint(k, 2), {{"U", {a, {"B", j}}}});
        }
    return bp;
}

inline Blueprint diamond_switcher_blueprint(int k, int h) {
    Blueprint bp;
    bp.kind = "diamond_switcher";
    bp.anchors = {{"U", h}};
    bp.groups = {{"W", h}, {"leaf", h - 1}, {"C", k}};
    bp.clique(bp.all("C") + std::vector<Slot>{{"W", 0}});
    for (int i = 1; i < h; ++i) {
        bp.edge({"W", 0}, {"W", i});
        bp.edge({"W", i}, {"leaf", i - 1});
    }
    for (int i = 0; i < h; ++i)
        bp.nest("Q" + std::to_string(i + 1), keeper_blueprint(k), {{"v", {{"U", i}}}, {"w", {{"W", i}}}});
    return bp;
}

// q = size of the host clique side the new clique vertices must be complete to.
inline Blueprint split_switcher_blueprint(int k, int h, int q) {
    Blueprint bp;
    bp.kind = "split_switcher";
    bp.anchors = {{"W", h}, {"Q", q}};
    bp.groups = {{"X", k}, {"Y", k}, {"a", 2}};
    for (const auto& v : bp.all("W") + bp.all("a")) bp.join(bp.all("X"), {v});
    bp.join(bp.all("Y"), bp.all("a"));
    bp.clique(bp.all("X") + bp.all("Y"));
    bp.join(bp.all("X") + bp.all("Y"), bp.all("Q"));
    return bp;
}

inline Blueprint split_forcer_blueprint(int k, int q) {
    Blueprint bp;
    bp.kind = "split_forcer";
    const int nb = forcer_b_size(k);
    bp.anchors = {{"v", 1}, {"Q", q}};
    bp.groups = {{"A", k - 1}, {"B", nb}};
    std::vector<Slot> every_c;
    std::vector<Slot> astar = bp.all("v") + bp.all("A");
    for (const auto& a : astar)
        for (int j = 0; j < nb; ++j) {
            std::string name = "C(" + (a.group == "v" ? std::string("v") : "A" + std::to_string(a.index)) + ",B" +
                               std::to_string(j) + ")";
            bp.groups.emplace_back(name, k);
            bp.join(bp.all(name), {a, {"B", j}});
            auto c = bp.all(name);
            every_c.insert(every_c.end(), c.begin(), c.end());
        }
    bp.clique(every_c);
    bp.join(every_c, bp.all("Q"));
    return bp;
}

// ---- attachments ----

namespace detail {
inline void require_distinct(const std::vector<Vertex>& vs, const char* what) {
    std::set<Vertex> s(vs.begin(), vs.end());
    if (s.size() != vs.size()) throw InputError(std::string(what) + ": anchors must be distinct");
}
inline void require_independent(const GraphBuilder& b, const std::vector<Vertex>& vs, const char* what) {
    for (Vertex v : vs)
        if (v < 0 || v >= b.order()) throw InputError(std::string(what) + ": anchor " + std::to_string(v) + " is missing");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (b.has_edge(vs[i], vs[j])) throw InputError(std::string(what) + ": anchors must be independent");
}
inline void require_k(int k, const char* what) {
    if (k < 2) throw InputError(std::string(what) + " needs k >= 2");
}
}  // namespace detail

inline GadgetHandle attach_keeper(GraphBuilder& b, Vertex v, Vertex w, int k) {
    detail::require_k(k, "keeper");
    if (v == w) throw InputError("keeper: anchors must be distinct");
    return attach(b, keeper_blueprint(k), {{"v", {v}}, {"w", {w}}});
}

inline GadgetHandle attach_switcher(GraphBuilder& b, const std::vector<Vertex>& u_set, int k) {
    detail::require_k(k, "switcher");
    if (u_set.size() < 2) throw InputError("switcher needs at least two anchors");
    detail::require_distinct(u_set, "switcher");
    detail::require_independent(b, u_set, "switcher");
    return attach(b, switcher_blueprint(k, static_cast<int>(u_set.size())), {{"U", u_set}});
}

inline GadgetHandle attach_long_switcher(GraphBuilder& b, const std::vector<Vertex>& w_set, int k) {
    detail::require_k(k, "long switcher");
    if (w_set.size() < 2) throw InputError("long switcher needs at least two anchors");
    detail::require_distinct(w_set, "long switcher");
    return attach(b, long_switcher_blueprint(k, static_cast<int>(w_set.size())), {{"W", w_set}});
}

inline GadgetHandle attach_cluster(GraphBuilder& b, Vertex s, const std::vector<Vertex>& x_list,
                                   const std::vector<Vertex>& negx_list) {
    if (x_list.size() < 2 || x_list.size() != negx_list.size())
        throw InputError("cluster needs two literal lists of equal length >= 2");
    std::vector<Vertex> all = x_list;
    all.insert(all.end(), negx_list.begin(), negx_list.end());
    all.push_back(s);
    detail::require_distinct(all, "cluster");
    return attach(b, cluster_blueprint(static_cast<int>(x_list.size())), {{"s", {s}}, {"X", x_list}, {"NX", negx_list}});
}

inline GadgetHandle attach_list_switcher(GraphBuilder& b, const std::vector<Vertex>& w_set) {
    if (w_set.size() < 2) throw InputError("list switcher needs at least two anchors");
    detail::require_distinct(w_set, "list switcher");
    return attach(b, list_switcher_blueprint(static_cast<int>(w_set.size())), {{"W", w_set}});
}

inline GadgetHandle attach_forcer(GraphBuilder& b, Vertex v, int k) {
    detail::require_k(k, "forcer");
    if (k > 3) throw CapExceeded("forcer with k > 3 has k^k - 1 = " + std::to_string(forcer_b_size(k)) + " B vertices");
    return attach(b, forcer_blueprint(k), {{"v", {v}}});
}

inline GadgetHandle attach_diamond_switcher(GraphBuilder& b, const std::vector<Vertex>& u_set, int k) {
    detail::require_k(k, "diamond switcher");
    if (u_set.size() < 2) throw InputError("diamond switcher needs at least two anchors");
    detail::require_distinct(u_set, "diamond switcher");
    detail::require_independent(b, u_set, "diamond switcher");
    return attach(b, diamond_switcher_blueprint(k, static_cast<int>(u_set.size())), {{"U", u_set}});
}

// Sides of a split host; updated by the split attachments.
struct SplitRoles {
    std::vector<Vertex> clique, independent;
};

namespace detail {
inline void require_split_side(const SplitRoles& roles, const std::vector<Vertex>& vs, const char* what) {
    for (Vertex v : vs)
        if (std::find(roles.independent.begin(), roles.independent.end(), v) == roles.independent.end())
            throw InputError(std::string(what) + ": anchor " + std::to_string(v) + " is not on the independent side");
}
}  // namespace detail

inline GadgetHandle attach_split_switcher(GraphBuilder& b, const std::vector<Vertex>& w_set, int k, SplitRoles& roles) {
    detail::require_k(k, "split switcher");
    if (w_set.size() < 2) throw InputError("split switcher needs at least two anchors");
    detail::require_distinct(w_set, "split switcher");
    detail::require_split_side(roles, w_set, "split switcher");
    auto h = attach(b, split_switcher_blueprint(k, static_cast<int>(w_set.size()), static_cast<int>(roles.clique.size())),
                    {{"W", w_set}, {"Q", roles.clique}});
    for (Vertex x : h.group("X")) roles.clique.push_back(x);
    for (Vertex y : h.group("Y")) roles.clique.push_back(y);
    for (Vertex a : h.group("a")) roles.independent.push_back(a);
    return h;
}

inline GadgetHandle attach_split_forcer(GraphBuilder& b, Vertex v, int k, SplitRoles& roles) {
    detail::require_k(k, "split forcer");
    if (k > 3) throw CapExceeded("split forcer with k > 3 is too large");
    detail::require_split_side(roles, {v}, "split forcer");
    auto h = attach(b, split_forcer_blueprint(k, static_cast<int>(roles.clique.size())), {{"v", {v}}, {"Q", roles.clique}});
    for (const auto& [x, role] : h.internals) {
        if (role[0] == 'C')
            roles.clique.push_back(x);
        else
            roles.independent.push_back(x);
    }
    return h;
}

// ---- forcer lists and admissibility ----

namespace detail {
// Vertices of the forcer proper: everything internal except pendant leaves.
inline std::vector<Vertex> forcer_body(const GadgetHandle& h) {
    std::vector<Vertex> out;
    for (const auto& [v, role] : h.internals)
        if (role.rfind("leaf", 0) != 0) out.push_back(v);
    return out;
}

// (a, b, C(a,b)) triples of a forcer handle; a = -1 stands for the anchor v.
inline std::vector<std::tuple<Vertex, Vertex, std::vector<Vertex>>> forcer_switchers(const GadgetHandle& h) {
    std::vector<std::tuple<Vertex, Vertex, std::vector<Vertex>>> out;
    const auto& as = h.group("A");
    const auto& bs = h.group("B");
    auto find_c = [&](const std::string& name) -> std::vector<Vertex> {
        auto it = h.groups.find(name);
        if (it != h.groups.end()) return it->second;  // split forcer: C groups are local
        return h.group(name + ".C");
    };
    for (int a = -1; a < static_cast<int>(as.size()); ++a)
        for (std::size_t j = 0; j < bs.size(); ++j) {
            std::string name = "C(" + (a < 0 ? std::string("v") : "A" + std::to_string(a)) + ",B" + std::to_string(j) + ")";
            out.emplace_back(a < 0 ? h.anchors[0] : as[a], bs[j], find_c(name));
        }
    return out;
}
}  // namespace detail

// Extends `base` (one list per vertex of g; entries inside the forcer are replaced) so that
// `target` is the only admissible color of the forcer's anchor: A lists are fresh and disjoint,
// B lists are all transversals of L(v), L(A) except the one through target and each A list's
// first color, and L(C(a,b)) = L(b).
inline ListAssignment forcing_lists(const Graph& g, const GadgetHandle& h, const ListAssignment& base, int target) {
    if (h.kind != "forcer" && h.kind != "split_forcer") throw InputError("forcing lists need a forcer handle");
    validate(g, base);
    const Vertex v = h.anchors.at(0);
    const auto& lv = base.lists[v];
    const int k = static_cast<int>(lv.size());
    if (static_cast<int>(h.group("A").size()) != k - 1) throw InputError("anchor list size does not match the forcer");
    if (!std::binary_search(lv.begin(), lv.end(), target)) throw InputError("target color is not in the anchor's list");
    ListAssignment out = base;
    out.k = 0;
    int fresh = 0;
    for (const auto& l : base.lists)
        for (int c : l) fresh = std::max(fresh, c);
    std::vector<std::vector<int>> astar{lv};
    for (Vertex a : h.group("A")) {
        std::vector<int> l;
        for (int i = 0; i < k; ++i) l.push_back(++fresh);
        out.lists[a] = l;
        astar.push_back(l);
    }
    std::vector<int> excluded{target};
    for (std::size_t i = 1; i < astar.size(); ++i) excluded.push_back(astar[i][0]);
    std::sort(excluded.begin(), excluded.end());
    std::vector<std::vector<int>> transversals;
    std::vector<int> idx(astar.size(), 0);
    while (true) {
        std::vector<int> t;
        for (std::size_t i = 0; i < astar.size(); ++i) t.push_back(astar[i][idx[i]]);
        std::sort(t.begin(), t.end());
        if (t != excluded) transversals.push_back(t);
        std::size_t pos = astar.size();
        while (pos > 0 && ++idx[pos - 1] == k) idx[--pos] = 0;
        if (pos == 0) break;
    }
    const auto& bs = h.group("B");
    for (std::size_t j = 0; j < bs.size(); ++j) out.lists[bs[j]] = transversals.at(j);
    for (const auto& [a, b, c] : detail::forcer_switchers(h))
        for (Vertex x : c) out.lists[x] = out.lists[b];
    for (const auto& [x, role] : h.internals)
        if (role.rfind("leaf", 0) == 0) out.lists[x] = out.lists[g.neighbor_list(x)[0]];
    return out;
}

namespace detail {

// "No maximal star centered at `center` is monochromatic", with the star family given either
// as a disjoint union of cliques in N(center) (a star takes one vertex per block) or, when
// `blocks` are singletons, as one explicit star.
struct CoverConstraint {
    Vertex center;
    std::vector<std::vector<Vertex>> blocks;
};

inline std::vector<CoverConstraint> star_constraints_at(const Graph& g, Vertex x) {
    VertexSet nb = g.neighbors(x);
    auto parts = components(g, nb);
    bool cliques = parts.size() >= 2;
    for (const auto& p : parts) cliques = cliques && g.is_clique(p);
    if (cliques) return {CoverConstraint{x, parts}};
    std::vector<CoverConstraint> out;
    std::size_t seen = 0;
    for_each_maximal_independent_set(g, nb, [&](const std::vector<Vertex>& leaves) {
        if (++seen > 100000) throw CapExceeded("too many maximal stars at vertex " + std::to_string(x));
        if (leaves.size() == 1) {
            VertexSet others = g.neighbors(leaves[0]);
            others.reset(x);
            if (!others.is_subset_of(g.neighbors(x))) return true;
        }
        CoverConstraint c{x, {}};
        for (Vertex u : leaves) c.blocks.push_back({u});
        out.push_back(std::move(c));
        return true;
    });
    return out;
}

// 1 = violated, 0 = satisfied for good, -1 = undecided (colors: 0 means unassigned).
inline int cover_state(const CoverConstraint& c, const std::vector<int>& color) {
    const int cc = color[c.center];
    bool open = cc == 0;
    for (const auto& b : c.blocks) {
        bool hit = false, unknown = false;
        for (Vertex u : b) {
            if (color[u] == 0)
                unknown = true;
            else if (cc != 0 && color[u] == cc)
                hit = true;
        }
        if (cc != 0 && !hit && !unknown) return 0;
        if (!hit) open = true;
    }
    return open ? -1 : 1;
}

}  // namespace detail

// Colors c of L(v) for which some L-coloring with rho(v) = c leaves no monochromatic maximal
// star centered in the forcer. v and A separate the rest into independent pieces, so the search
// fixes them and enumerates each piece on its own, tracking which A-centered constraints it breaks.
inline std::vector<int> admissible_colors(const Graph& g, const GadgetHandle& h, const ListAssignment& lists,
                                          double timeout_s = 0) {
    validate(g, lists);
    const int n = g.order();
    const Vertex v = h.anchors.at(0);
    std::vector<Vertex> sep{v};
    for (Vertex a : h.group("A")) sep.push_back(a);
    VertexSet in_sep = VertexSet::of(n, sep);

    std::vector<detail::CoverConstraint> cons;
    for (Vertex x : detail::forcer_body(h))
        for (auto& c : detail::star_constraints_at(g, x)) cons.push_back(std::move(c));
    // Pieces: vertices outside the separator linked by constraints not centered in it.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    VertexSet involved(n);
    for (const auto& c : cons) {
        involved.set(c.center);
        Vertex first = in_sep.test(c.center) ? -1 : c.center;
        for (const auto& b : c.blocks)
            for (Vertex u : b) {
                involved.set(u);
                if (in_sep.test(u) || in_sep.test(c.center)) continue;
                parent[find(u)] = find(first);
            }
    }
    std::map<int, std::vector<Vertex>> by_root;
    (involved - in_sep).for_each([&](Vertex u) { by_root[find(u)].push_back(u); });
    std::vector<std::vector<Vertex>> pieces;
    for (auto& [r, vs] : by_root) pieces.push_back(std::move(vs));
    std::vector<int> piece_of(n, -1);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (Vertex u : pieces[i]) piece_of[u] = static_cast<int>(i);
    // Constraints spanning several pieces get a bit; the rest belong to one piece.
    std::vector<std::vector<int>> local_cons(pieces.size());
    std::vector<int> cross;
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
        std::set<int> touched;
        if (piece_of[cons[ci].center] >= 0) touched.insert(piece_of[cons[ci].center]);
        for (const auto& b : cons[ci].blocks)
            for (Vertex u : b)
                if (piece_of[u] >= 0) touched.insert(piece_of[u]);
        if (touched.size() == 1) {
            local_cons[*touched.begin()].push_back(static_cast<int>(ci));
        } else if (!touched.empty()) {
            if (!in_sep.test(cons[ci].center)) throw InputError("unsupported forcer shape");
            for (const auto& b : cons[ci].blocks) {
                std::set<int> bp;
                for (Vertex u : b) bp.insert(piece_of[u]);
                if (bp.size() > 1) throw InputError("unsupported forcer shape");
            }
            cross.push_back(static_cast<int>(ci));
        }
    }
    if (cross.size() > 20) throw CapExceeded("too many constraints across the forcer");
    const std::uint32_t full = (std::uint32_t{1} << cross.size()) - 1;

    detail::Deadline deadline(timeout_s);
    std::vector<int> color(n, 0);
    // Bit i set: cross constraint i is satisfied by some fully colored block inside the piece.
    auto breaks = [&](const std::vector<Vertex>& piece) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < cross.size(); ++i) {
            const auto& c = cons[cross[i]];
            for (const auto& b : c.blocks) {
                if (piece_of[b[0]] < 0 || std::find(piece.begin(), piece.end(), b[0]) == piece.end()) continue;
                bool hit = false;
                for (Vertex u : b) hit |= color[u] == color[c.center];
                if (!hit) m |= std::uint32_t{1} << i;
            }
        }
        return m;
    };
    auto piece_masks = [&](int pi) {
        const auto& piece = pieces[pi];
        std::set<std::uint32_t> masks;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            deadline.check();
            if (i == piece.size()) {
                masks.insert(breaks(piece));
                return;
            }
            Vertex u = piece[i];
            for (int c : lists.lists[u]) {
                color[u] = c;
                bool ok = true;
                for (int ci : local_cons[pi]) ok = ok && detail::cover_state(cons[ci], color) != 1;
                if (ok) rec(i + 1);
            }
            color[u] = 0;
        };
        rec(0);
        return masks;
    };
    // separator constraints decided by the separator alone
    auto sep_ok = [&] {
        for (const auto& c : cons) {
            bool inside = in_sep.test(c.center);
            for (const auto& b : c.blocks)
                for (Vertex u : b) inside = inside && in_sep.test(u);
            if (inside && detail::cover_state(c, color) == 1) return false;
        }
        return true;
    };

    std::vector<int> out;
    for (int target : lists.lists[v]) {
        bool found = false;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (found) return;
            if (i == sep.size()) {
                if (!sep_ok()) return;
                std::set<std::uint32_t> reach{0};
                for (std::size_t pi = 0; pi < pieces.size() && !reach.empty(); ++pi) {
                    auto masks = piece_masks(static_cast<int>(pi));
                    std::set<std::uint32_t> next;
                    for (auto r : reach)
                        for (auto m : masks) next.insert(r | m);
                    reach = std::move(next);
                }
                found = reach.count(full) > 0;
                return;
            }
            const auto& choices = i == 0 ? std::vector<int>{target} : lists.lists[sep[i]];
            for (int c : choices) {
                color[sep[i]] = c;
                rec(i + 1);
            }
            color[sep[i]] = 0;
        };
        rec(0);
        if (found) out.push_back(target);
    }
    return out;
}

}  // namespace starcolor
