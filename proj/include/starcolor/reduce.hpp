#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gadgets.hpp"
#include "graph.hpp"

namespace starcolor {

// Literals are DIMACS style: +v or -v with v in 1..vars.
struct CnfFormula {
    int vars = 0;
    std::vector<std::vector<int>> clauses;
};

// (exists `exists`)(forall `forall`) OR_h (l1 AND l2 AND l3)
struct QDnfFormula {
    std::vector<int> exists, forall;
    std::vector<std::array<int, 3>> clauses;

    int vars() const { return static_cast<int>(exists.size() + forall.size()); }
};

inline void validate(const CnfFormula& f) {
    if (f.vars < 0) throw InputError("negative variable count");
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (int l : f.clauses[c])
            if (l == 0 || std::abs(l) > f.vars)
                throw InputError("clause " + std::to_string(c + 1) + " has literal " + std::to_string(l) +
                                 " outside the declared variables");
}

inline void validate(const QDnfFormula& f) {
    std::set<int> seen;
    for (int v : f.exists)
        if (v < 1 || !seen.insert(v).second) throw InputError("variable " + std::to_string(v) + " quantified twice");
    for (int v : f.forall)
        if (v < 1 || !seen.insert(v).second) throw InputError("variable " + std::to_string(v) + " quantified twice");
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (int l : f.clauses[c])
            if (l == 0 || !seen.count(std::abs(l)))
                throw InputError("clause " + std::to_string(c + 1) + " uses unquantified literal " + std::to_string(l));
}

// ---- text formats ----

namespace detail {
inline std::vector<long long> read_ints(const std::string& text, int lineno) {
    std::istringstream ss(text);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            long long x = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(x);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
        }
    }
    return out;
}
}  // namespace detail

// DIMACS CNF: "c" comments, "p cnf V C", zero-terminated clauses (may span lines).
inline CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    int lineno = 0;
    long long declared = -1;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;
        if (line[first] == 'p') {
            std::istringstream ss(line.substr(first));
            std::string p, fmt;
            long long v = -1, c = -1;
            ss >> p >> fmt >> v >> c;
            if (fmt != "cnf" || v < 0 || c < 0 || declared >= 0)
                throw InputError("line " + std::to_string(lineno) + ": bad DIMACS header");
            f.vars = static_cast<int>(v);
            declared = c;
            continue;
        }
        if (declared < 0) throw InputError("line " + std::to_string(lineno) + ": clause before 'p cnf' header");
        for (long long x : detail::read_ints(line, lineno)) {
            if (x == 0) {
                f.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::llabs(x) > f.vars)
                    throw InputError("line " + std::to_string(lineno) + ": literal " + std::to_string(x) +
                                     " exceeds declared variables");
                cur.push_back(static_cast<int>(x));
            }
        }
    }
    if (declared < 0) throw InputError("missing 'p cnf' header");
    if (!cur.empty()) throw InputError("last clause is not zero-terminated");
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw InputError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    return f;
}

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int l : c) out << l << ' ';
        out << "0\n";
    }
}

// QDNF text: "p qdnf V C", one "e ... 0" line, one "a ... 0" line, then clauses of exactly three
// literals, each "l1 l2 l3 0". Clauses are conjunctions; the matrix is their disjunction.
inline QDnfFormula read_qdnf(std::istream& in) {
    QDnfFormula f;
    std::string line;
    int lineno = 0;
    long long vars = -1, declared = -1;
    bool have_e = false, have_a = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c') continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        char tag = line[first];
        if (tag == 'p') {
            std::istringstream ss(line.substr(first));
            std::string p, fmt;
            ss >> p >> fmt >> vars >> declared;
            if (fmt != "qdnf" || vars < 0 || declared < 0) throw InputError(where + "bad 'p qdnf' header");
            continue;
        }
        if (vars < 0) throw InputError(where + "content before 'p qdnf' header");
        if (tag == 'e' || tag == 'a') {
            if ((tag == 'e' && (have_e || have_a)) || (tag == 'a' && have_a))
                throw InputError(where + "expected one 'e' line followed by one 'a' line");
            auto xs = detail::read_ints(line.substr(first + 1), lineno);
            if (xs.empty() || xs.back() != 0) throw InputError(where + "quantifier line must end with 0");
            xs.pop_back();
            auto& target = tag == 'e' ? f.exists : f.forall;
            for (long long x : xs) {
                if (x < 1 || x > vars) throw InputError(where + "variable " + std::to_string(x) + " out of range");
                target.push_back(static_cast<int>(x));
            }
            (tag == 'e' ? have_e : have_a) = true;
            continue;
        }
        auto xs = detail::read_ints(line.substr(first), lineno);
        if (xs.size() != 4 || xs[3] != 0) throw InputError(where + "clause needs exactly three literals and a 0");
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = static_cast<int>(xs[i]);
        f.clauses.push_back(c);
    }
    if (vars < 0) throw InputError("missing 'p qdnf' header");
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw InputError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    validate(f);
    return f;
}

inline QDnfFormula parse_qdnf(const std::string& text) {
    std::istringstream in(text);
    return read_qdnf(in);
}

inline void write_qdnf(std::ostream& out, const QDnfFormula& f) {
    int vars = 0;
    for (int v : f.exists) vars = std::max(vars, v);
    for (int v : f.forall) vars = std::max(vars, v);
    out << "p qdnf " << vars << ' ' << f.clauses.size() << "\ne";
    for (int v : f.exists) out << ' ' << v;
    out << " 0\na";
    for (int v : f.forall) out << ' ' << v;
    out << " 0\n";
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

// ---- oracles ----

// Valuation indexed 1..vars (entry 0 unused), or nullopt.
inline std::optional<std::vector<int>> nae_satisfiable(const CnfFormula& f) {
    validate(f);
    if (f.vars > 20) throw CapExceeded("nae oracle handles at most 20 variables");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.vars); ++mask) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool t = false, fl = false;
            for (int l : c) {
                bool val = (mask >> (std::abs(l) - 1) & 1U) != 0;
                (val == (l > 0) ? t : fl) = true;
            }
            if (!(t && fl)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> nu(f.vars + 1, 0);
            for (int v = 1; v <= f.vars; ++v) nu[v] = mask >> (v - 1) & 1U;
            return nu;
        }
    }
    return std::nullopt;
}

inline bool qsat2_true(const QDnfFormula& f) {
    validate(f);
    if (f.vars() > 12) throw CapExceeded("qsat2 oracle handles at most 12 variables");
    int top = 0;
    for (int v : f.exists) top = std::max(top, v);
    for (int v : f.forall) top = std::max(top, v);
    std::vector<int> val(top + 1, 0);
    auto phi = [&] {
        for (const auto& c : f.clauses) {
            bool all = true;
            for (int l : c) all = all && (val[std::abs(l)] == (l > 0 ? 1 : 0));
            if (all) return true;
        }
        return false;
    };
    const std::size_t ne = f.exists.size(), na = f.forall.size();
    for (std::uint32_t xm = 0; xm < (std::uint32_t{1} << ne); ++xm) {
        for (std::size_t i = 0; i < ne; ++i) val[f.exists[i]] = xm >> i & 1U;
        bool every = true;
        for (std::uint32_t ym = 0; ym < (std::uint32_t{1} << na) && every; ++ym) {
            for (std::size_t j = 0; j < na; ++j) val[f.forall[j]] = ym >> j & 1U;
            every = phi();
        }
        if (every) return true;
    }
    return false;
}

// ---- reductions ----

struct ReductionOutput {
    Graph graph;
    std::vector<std::string> roles;  // one per vertex
    int k = 0;
    std::vector<GadgetHandle> gadgets;
    std::vector<Edge> plain_edges;  // edges outside every gadget (construction edges and leaves)
    std::map<std::string, Vertex> connection;  // role -> vertex
};

namespace detail {

class ReductionBuilder {
public:
    explicit ReductionBuilder(int k) { out_.k = k; }

    Vertex vertex(const std::string& role) {
        Vertex v = b_.add_vertex();
        out_.roles.push_back(role);
        out_.connection[role] = v;
        return v;
    }
    Vertex at(const std::string& role) const {
        auto it = out_.connection.find(role);
        if (it == out_.connection.end()) throw std::logic_error("no connection vertex " + role);
        return it->second;
    }
    void edge(Vertex u, Vertex v) {
        if (b_.has_edge(u, v)) return;
        b_.add_edge(u, v);
        out_.plain_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    void leaf(Vertex v) {
        Vertex l = b_.add_vertex();
        out_.roles.push_back("leaf(" + out_.roles[v] + ")");
        edge(v, l);
    }
    template <class Attach>
    const GadgetHandle& gadget(Attach&& attach) {
        GadgetHandle h = attach(b_);
        const std::string tag = h.kind + "#" + std::to_string(out_.gadgets.size());
        for (const auto& [v, role] : h.internals) {
            if (static_cast<int>(out_.roles.size()) <= v) out_.roles.resize(v + 1);
            out_.roles[v] = tag + ":" + role;
        }
        out_.gadgets.push_back(std::move(h));
        return out_.gadgets.back();
    }
    GraphBuilder& builder() { return b_; }
    ReductionOutput finish() {
        out_.graph = b_.build();
        std::sort(out_.plain_edges.begin(), out_.plain_edges.end());
        return std::move(out_);
    }

private:
    GraphBuilder b_;
    ReductionOutput out_;
};

inline std::string lit_role(int l) { return (l > 0 ? "x" : "-x") + std::to_string(std::abs(l)); }

inline std::vector<std::vector<int>> nae_clause_sets(const CnfFormula& f) {
    validate(f);
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        std::vector<int> lits = f.clauses[c];
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        if (lits.size() < 2)
            throw InputError("clause " + std::to_string(c + 1) + " has fewer than two distinct literals");
        out.push_back(lits);
    }
    return out;
}

// Connection vertices and anchor sets shared by both NAE reductions.
struct NaeLayout {
    std::vector<std::vector<std::string>> color, valuation, clause;
};

inline NaeLayout nae_layout(const CnfFormula& f, int k) {
    NaeLayout lay;
    std::vector<std::string> xy;
    for (int i = 1; i <= f.vars; ++i) xy.push_back(lit_role(i));
    for (int i = 1; i <= f.vars; ++i) xy.push_back(lit_role(-i));
    std::vector<std::string> ys;
    for (int q = 3; q <= k; ++q) ys.push_back("y" + std::to_string(q));
    xy.insert(xy.end(), ys.begin(), ys.end());
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& v : xy)
        for (const auto& y : ys)
            if (v != y && seen.insert(std::minmax(v, y)).second) lay.color.push_back({v, y});
    for (int i = 1; i <= f.vars; ++i) lay.valuation.push_back({lit_role(i), lit_role(-i)});
    for (const auto& c : nae_clause_sets(f)) {
        std::vector<std::string> p;
        for (int l : c) p.push_back(lit_role(l));
        lay.clause.push_back(p);
    }
    return lay;
}

template <class AttachSet>
ReductionOutput build_nae(const CnfFormula& f, int k, bool leafed, AttachSet&& attach_set) {
    if (k < 2) throw InputError("reduction needs k >= 2");
    auto lay = nae_layout(f, k);
    ReductionBuilder rb(k);
    for (int i = 1; i <= f.vars; ++i) rb.vertex(lit_role(i));
    for (int i = 1; i <= f.vars; ++i) rb.vertex(lit_role(-i));
    for (int q = 3; q <= k; ++q) rb.vertex("y" + std::to_string(q));
    const int connections = rb.builder().order();
    if (leafed)
        for (Vertex v = 0; v < connections; ++v) rb.leaf(v);
    auto anchors = [&](const std::vector<std::string>& names) {
        std::vector<Vertex> vs;
        for (const auto& nm : names) vs.push_back(rb.at(nm));
        return vs;
    };
    for (const auto* group : {&lay.color, &lay.valuation, &lay.clause})
        for (const auto& names : *group) attach_set(rb, anchors(names));
    return rb.finish();
}

}  // namespace detail

// Split graph: split k-switchers for the color pairs {v, y_q}, each {x_i, -x_i}, and each clause.
inline ReductionOutput reduce_nae_split(const CnfFormula& f, int k) {
    SplitRoles sides;
    return detail::build_nae(f, k, false, [&](detail::ReductionBuilder& rb, const std::vector<Vertex>& w) {
        if (sides.independent.empty())
            for (Vertex v = 0; v < rb.builder().order(); ++v) sides.independent.push_back(v);
        rb.gadget([&](GraphBuilder& b) { return attach_split_switcher(b, w, k, sides); });
    });
}

struct NaeOptions {
    // Pendant leaf on every connection vertex. Without it a literal vertex lying in two
    // diamond switchers centers the star {u}{w, w'} through both keepers, which is forced
    // monochromatic, so the output is never colorable once some literal is reused.
    bool leafed = true;
};

// Same layout with diamond k-switchers.
inline ReductionOutput reduce_nae_diamondfree(const CnfFormula& f, int k, const NaeOptions& opt = {}) {
    return detail::build_nae(f, k, opt.leafed, [&](detail::ReductionBuilder& rb, const std::vector<Vertex>& w) {
        rb.gadget([&](GraphBuilder& b) { return attach_diamond_switcher(b, w, k); });
    });
}

struct QsatOptions {
    // Hole stretching: each level subdivides the s-t keeper once more and pads every
    // cluster with one more literal pair that no clause vertex sees.
    int stretch = 0;
};

namespace detail {

struct QsatLayout {
    int ell = 0, width = 0;  // clauses; literal positions per cluster side (ell + stretch)
    std::vector<std::string> order;  // connection vertices in creation order
    std::vector<std::string> leafed;
    std::vector<std::pair<std::string, std::string>> plain;  // construction edges
    std::vector<std::pair<std::string, std::string>> keepers;
    std::vector<std::pair<std::string, std::string>> long_switchers;
    struct Cluster {
        std::vector<std::string> x, negx;
    };
    std::vector<Cluster> clusters;
};

inline std::string pos(const std::string& set, int h) { return set + "[" + std::to_string(h) + "]"; }

inline QsatLayout qsat_layout(const QDnfFormula& f, int k, int stretch) {
    validate(f);
    if (k < 2) throw InputError("reduction needs k >= 2");
    if (stretch < 0) throw InputError("stretch must be non-negative");
    QsatLayout lay;
    lay.ell = static_cast<int>(f.clauses.size());
    if (lay.ell < 2) throw InputError("reduction needs at least two clauses");
    lay.width = lay.ell + stretch;
    std::map<int, std::string> name;  // variable -> "X1" / "Y2"
    for (std::size_t i = 0; i < f.exists.size(); ++i) name[f.exists[i]] = "X" + std::to_string(i + 1);
    for (std::size_t j = 0; j < f.forall.size(); ++j) name[f.forall[j]] = "Y" + std::to_string(j + 1);

    auto& o = lay.order;
    o.push_back("s");
    o.push_back("t");
    for (int z = 1; z <= stretch; ++z) o.push_back("z" + std::to_string(z));
    for (int q = 1; q <= k; ++q) o.push_back("c" + std::to_string(q));
    for (int h = 1; h <= lay.ell; ++h) o.push_back("p" + std::to_string(h));
    for (std::size_t i = 1; i <= f.exists.size(); ++i) o.push_back("x" + std::to_string(i));
    std::vector<std::string> literal_sets;
    for (std::size_t i = 1; i <= f.exists.size(); ++i) literal_sets.push_back("X" + std::to_string(i));
    for (std::size_t j = 1; j <= f.forall.size(); ++j) literal_sets.push_back("Y" + std::to_string(j));
    for (const auto& set : literal_sets) {
        for (int h = 1; h <= lay.width; ++h) o.push_back(pos(set, h));
        for (int h = 1; h <= lay.width; ++h) o.push_back(pos("-" + set, h));
    }
    for (const auto& v : o)
        if (v != "s") lay.leafed.push_back(v);

    // Edges
    for (int h = 1; h <= lay.ell; ++h) {
        const std::string p = "p" + std::to_string(h);
        lay.plain.emplace_back("s", p);
        for (int l : f.clauses[h - 1]) {
            const std::string& set = name.at(std::abs(l));
            lay.plain.emplace_back(p, pos(l > 0 ? "-" + set : set, h));
        }
    }
    // Keepers: s - z1 - ... - t
    std::string prev = "s";
    for (int z = 1; z <= stretch; ++z) {
        lay.keepers.emplace_back(prev, "z" + std::to_string(z));
        prev = "z" + std::to_string(z);
    }
    lay.keepers.emplace_back(prev, "t");
    // Long switchers
    for (std::size_t i = 1; i <= f.exists.size(); ++i) {
        const std::string set = "X" + std::to_string(i);
        for (int h = 1; h <= lay.width; ++h) {
            lay.long_switchers.emplace_back("x" + std::to_string(i), pos("-" + set, h));
            lay.long_switchers.emplace_back(pos(set, h), pos("-" + set, h));
        }
    }
    for (int h = 1; h <= lay.ell; ++h) lay.long_switchers.emplace_back("c1", "p" + std::to_string(h));
    for (std::size_t j = 1; j <= f.forall.size(); ++j)
        for (const auto& set : {"Y" + std::to_string(j), "-Y" + std::to_string(j)})
            for (int h = 1; h <= lay.width; ++h) lay.long_switchers.emplace_back("c2", pos(set, h));
    std::set<std::pair<std::string, std::string>> seen;
    for (int q = 3; q <= k; ++q) {
        const std::string c = "c" + std::to_string(q);
        for (const auto& w : o)
            if (w != "s" && w != c && seen.insert(std::minmax(c, w)).second) lay.long_switchers.emplace_back(c, w);
    }
    lay.long_switchers.emplace_back("c1", "c2");
    lay.long_switchers.emplace_back("c2", "t");
    // Variables
    for (const auto& set : literal_sets) {
        QsatLayout::Cluster cl;
        for (int h = 1; h <= lay.width; ++h) {
            cl.x.push_back(pos(set, h));
            cl.negx.push_back(pos("-" + set, h));
        }
        lay.clusters.push_back(cl);
    }
    return lay;
}

}  // namespace detail

// Star k-colorable iff (exists x)(forall y) phi. Connection roles: s, t, c_q, p_h, x_i, X_i[h],
// -X_i[h], Y_j[h], -Y_j[h] (and z_i under stretching); every other vertex is a leaf or
// lives in a gadget.
inline ReductionOutput reduce_qsat2(const QDnfFormula& f, int k, const QsatOptions& opt = {}) {
    auto lay = detail::qsat_layout(f, k, opt.stretch);
    detail::ReductionBuilder rb(k);
    for (const auto& v : lay.order) rb.vertex(v);
    for (const auto& v : lay.leafed) rb.leaf(rb.at(v));
    for (const auto& [a, b] : lay.plain) rb.edge(rb.at(a), rb.at(b));
    for (const auto& [a, b] : lay.keepers)
        rb.gadget([&](GraphBuilder& g) { return attach_keeper(g, rb.at(a), rb.at(b), k); });
    for (const auto& [a, b] : lay.long_switchers)
        rb.gadget([&](GraphBuilder& g) { return attach_long_switcher(g, {rb.at(a), rb.at(b)}, k); });
    for (const auto& cl : lay.clusters) {
        std::vector<Vertex> x, nx;
        for (const auto& r : cl.x) x.push_back(rb.at(r));
        for (const auto& r : cl.negx) nx.push_back(rb.at(r));
        rb.gadget([&](GraphBuilder& g) { return attach_cluster(g, rb.at("s"), x, nx); });
    }
    return rb.finish();
}

// G_{k+1}: the vertices of g (roles w<i>) plus z, a (k+1)-forcer on z, and a (k+1)-switcher
// connecting {z, w} for every w.
inline ReductionOutput choosability_lift(const Graph& g, int k) {
    if (k < 2) throw InputError("lift needs k >= 2");
    detail::ReductionBuilder rb(k + 1);
    for (Vertex v = 0; v < g.order(); ++v) rb.vertex("w" + std::to_string(v));
    for (auto [u, v] : g.edges()) rb.edge(u, v);
    Vertex z = rb.vertex("z");
    rb.gadget([&](GraphBuilder& b) { return attach_forcer(b, z, k + 1); });
    for (Vertex w = 0; w < g.order(); ++w) rb.gadget([&](GraphBuilder& b) { return attach_switcher(b, {z, w}, k + 1); });
    return rb.finish();
}

// ---- audits ----

// Gadget rule instances as "kind(anchor roles)" strings, sorted.
inline std::vector<std::string> rule_instances(const ReductionOutput& r) {
    std::vector<std::string> out;
    for (const auto& h : r.gadgets) {
        std::string s = h.kind + "(";
        for (std::size_t i = 0; i < h.anchors.size(); ++i) s += (i ? "," : "") + r.roles[h.anchors[i]];
        out.push_back(s + ")");
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline std::string instance(const std::string& kind, const std::vector<std::string>& anchors) {
    std::string s = kind + "(";
    for (std::size_t i = 0; i < anchors.size(); ++i) s += (i ? "," : "") + anchors[i];
    return s + ")";
}

// Every edge of the graph is a plain edge or expected by exactly one gadget; gadget audits pass.
inline std::vector<std::string> audit_edges(const ReductionOutput& r) {
    std::vector<std::string> out;
    if (static_cast<int>(r.roles.size()) != r.graph.order()) out.push_back("role map does not cover every vertex");
    for (std::size_t v = 0; v < r.roles.size(); ++v)
        if (r.roles[v].empty()) out.push_back("vertex " + std::to_string(v) + " has no role");
    std::map<Edge, int> owners;
    for (const auto& e : r.plain_edges) ++owners[e];
    std::set<Vertex> internal;
    for (const auto& h : r.gadgets) {
        for (const auto& e : h.expected) ++owners[e];
        for (const auto& [v, role] : h.internals)
            if (!internal.insert(v).second) out.push_back("vertex " + std::to_string(v) + " is in two gadgets");
    }
    for (const auto& [e, n] : owners) {
        if (n > 1) out.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " claimed twice");
        if (!r.graph.adjacent(e.first, e.second))
            out.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " is missing");
    }
    for (const auto& e : r.graph.edges())
        if (!owners.count(e))
            out.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " has no rule");
    return out;
}

inline void compare_rules(std::vector<std::string> expected, const ReductionOutput& r, std::vector<std::string>& out) {
    std::sort(expected.begin(), expected.end());
    auto got = rule_instances(r);
    std::vector<std::string> missing, extra;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    for (const auto& m : missing) out.push_back("missing rule instance " + m);
    for (const auto& e : extra) out.push_back("unexpected rule instance " + e);
}

inline void compare_plain(std::vector<std::pair<std::string, std::string>> expected, const ReductionOutput& r,
                          std::vector<std::string>& out) {
    std::set<std::pair<std::string, std::string>> want;
    for (auto& [a, b] : expected) want.insert(std::minmax(a, b));
    std::set<std::pair<std::string, std::string>> got;
    for (auto [u, v] : r.plain_edges) got.insert(std::minmax(r.roles[u], r.roles[v]));
    for (const auto& e : want)
        if (!got.count(e)) out.push_back("missing edge " + e.first + "-" + e.second);
    for (const auto& e : got)
        if (!want.count(e)) out.push_back("unexpected edge " + e.first + "-" + e.second);
}
}  // namespace detail

// target: "split" or "diamond-free". Empty result means the output matches the construction.
inline std::vector<std::string> audit_nae(const CnfFormula& f, const ReductionOutput& r, const std::string& target,
                                          const NaeOptions& opt = {}) {
    if (target != "split" && target != "diamond-free") throw InputError("unknown reduction target " + target);
    auto out = detail::audit_edges(r);
    auto lay = detail::nae_layout(f, r.k);
    const std::string kind = target == "split" ? "split_switcher" : "diamond_switcher";
    std::vector<std::string> expected;
    for (const auto* group : {&lay.color, &lay.valuation, &lay.clause})
        for (const auto& names : *group) expected.push_back(detail::instance(kind, names));
    if (target == "split") {
        // a split switcher also lists the host clique as anchors; compare on W only
        std::vector<std::string> got;
        for (const auto& h : r.gadgets) {
            std::vector<std::string> w;
            for (Vertex a : h.anchors)
                if (r.roles[a].find('#') == std::string::npos) w.push_back(r.roles[a]);
            got.push_back(detail::instance(h.kind, w));
        }
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        if (got != expected) out.push_back("rule instances differ from the construction");
    } else {
        detail::compare_rules(expected, r, out);
    }
    std::vector<std::pair<std::string, std::string>> plain;
    if (target != "split" && opt.leafed)
        for (const auto& [role, v] : r.connection) plain.emplace_back(role, "leaf(" + role + ")");
    detail::compare_plain(plain, r, out);
    return out;
}

inline std::vector<std::string> audit_qsat2(const QDnfFormula& f, const ReductionOutput& r, const QsatOptions& opt = {}) {
    auto out = detail::audit_edges(r);
    auto lay = detail::qsat_layout(f, r.k, opt.stretch);
    std::vector<std::string> expected;
    for (const auto& [a, b] : lay.keepers) expected.push_back(detail::instance("keeper", {a, b}));
    for (const auto& [a, b] : lay.long_switchers) expected.push_back(detail::instance("long_switcher", {a, b}));
    for (const auto& cl : lay.clusters) {
        std::vector<std::string> names{"s"};
        names.insert(names.end(), cl.x.begin(), cl.x.end());
        names.insert(names.end(), cl.negx.begin(), cl.negx.end());
        expected.push_back(detail::instance("cluster", names));
    }
    detail::compare_rules(expected, r, out);
    auto plain = lay.plain;
    for (const auto& v : lay.leafed) plain.emplace_back(v, "leaf(" + v + ")");
    detail::compare_plain(plain, r, out);
    return out;
}

inline std::vector<std::string> audit_lift(const Graph& g, const ReductionOutput& r) {
    auto out = detail::audit_edges(r);
    std::vector<std::string> expected{detail::instance("forcer", {"z"})};
    for (Vertex w = 0; w < g.order(); ++w) expected.push_back(detail::instance("switcher", {"z", "w" + std::to_string(w)}));
    detail::compare_rules(expected, r, out);
    std::vector<std::pair<std::string, std::string>> plain;
    for (auto [u, v] : g.edges()) plain.emplace_back("w" + std::to_string(u), "w" + std::to_string(v));
    detail::compare_plain(plain, r, out);
    return out;
}

}  // namespace starcolor
