#pragma once

// JSON forms of colorings, lists, witnesses and role-annotated graphs.
// Needs nlohmann's json.hpp on the include path; not pulled in by starcolor.hpp.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coloring.hpp"
#include "enumeration.hpp"
#include "graph.hpp"
#include "verify.hpp"

namespace starcolor {

using Json = nlohmann::ordered_json;

inline Json to_json(const Coloring& rho) { return Json{{"k", rho.k}, {"colors", rho.colors}}; }

inline Json to_json(const ListAssignment& l) { return Json{{"k", l.k}, {"lists", l.lists}}; }

inline Json to_json(const Star& s) { return Json{{"center", s.center}, {"leaves", s.leaves}}; }

inline Json to_json(const Biclique& b) { return Json{{"s", b.s}, {"t", b.t}}; }

inline Json to_json(const Violation& v) {
    Json j{{"kind", to_string(v.kind)}};
    if (auto* s = std::get_if<Star>(&v.witness)) {
        j["center"] = s->center;
        j["leaves"] = s->leaves;
    } else if (auto* b = std::get_if<Biclique>(&v.witness)) {
        j["s"] = b->s;
        j["t"] = b->t;
    } else {
        auto e = std::get<Edge>(v.witness);
        j["pair"] = {e.first, e.second};
    }
    return j;
}

inline Json to_json(const VerifyResult& r) {
    if (!r) return Json{{"ok", true}};
    return Json{{"ok", false}, {"violation", to_json(*r)}};
}

inline Json enumeration_json(const std::vector<Star>& stars, const std::vector<Biclique>& bicliques) {
    Json j = Json::object();
    j["stars"] = Json::array();
    for (const auto& s : stars) j["stars"].push_back(to_json(s));
    j["bicliques"] = Json::array();
    for (const auto& b : bicliques) j["bicliques"].push_back(to_json(b));
    return j;
}

// {"n":N,"edges":[[u,v],...],"roles":[...]}; roles may be empty.
inline Json graph_json(const Graph& g, const std::vector<std::string>& roles = {}) {
    Json j{{"n", g.order()}, {"edges", Json::array()}};
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!roles.empty()) j["roles"] = roles;
    return j;
}

namespace detail {
inline Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

template <class T>
T field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw InputError(std::string(what) + ": field '" + key + "' has the wrong type");
    }
}
}  // namespace detail

inline Coloring coloring_from_json(const Json& j) {
    Coloring rho;
    rho.k = j.is_object() && j.contains("k") ? detail::field<int>(j, "k", "coloring") : 0;
    rho.colors = detail::field<std::vector<int>>(j, "colors", "coloring");
    return rho;
}

inline Coloring parse_coloring(const std::string& text) {
    return coloring_from_json(detail::parse_json(text, "coloring"));
}

inline ListAssignment lists_from_json(const Json& j) {
    ListAssignment l;
    l.k = j.is_object() && j.contains("k") ? detail::field<int>(j, "k", "lists") : 0;
    l.lists = detail::field<std::vector<std::vector<int>>>(j, "lists", "lists");
    return l;
}

inline ListAssignment parse_lists(const std::string& text) { return lists_from_json(detail::parse_json(text, "lists")); }

inline Graph graph_from_json(const Json& j) {
    const int n = detail::field<int>(j, "n", "graph");
    auto edges = detail::field<std::vector<std::pair<int, int>>>(j, "edges", "graph");
    if (n < 0) throw InputError("graph: negative vertex count");
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InputError("graph: bad edge " + std::to_string(u) + " " + std::to_string(v));
    return build_graph(n, edges);
}

// Edge-list text, or the JSON object written by graph_json.
inline Graph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(detail::parse_json(text, "graph"));
    return parse_edge_list(text);
}

// DOT with fill colors: per-vertex color index, or one shade per distinct role prefix.
inline std::string to_dot(const Graph& g, const std::vector<int>& colors, const std::vector<std::string>& labels = {}) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5"};
    std::ostringstream out;
    out << "graph G {\n  node [style=filled];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v << " [";
        if (!labels.empty()) out << "label=\"" << v << ":" << labels[v] << "\" ";
        const int c = colors.empty() ? 0 : colors[v];
        out << "fillcolor=\"" << (c > 0 ? palette[(c - 1) % 10] : "#ffffff") << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// Role class = role text up to the first '#', ':', '(', '[' or digit.
inline std::vector<int> role_classes(const std::vector<std::string>& roles) {
    std::vector<std::string> seen;
    std::vector<int> out;
    for (const auto& r : roles) {
        std::string key = r.substr(0, r.find_first_of("#:([0123456789"));
        auto it = std::find(seen.begin(), seen.end(), key);
        if (it == seen.end()) {
            seen.push_back(key);
            out.push_back(static_cast<int>(seen.size()));
        } else {
            out.push_back(static_cast<int>(it - seen.begin()) + 1);
        }
    }
    return out;
}

}  // namespace starcolor
