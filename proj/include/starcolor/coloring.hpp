#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace starcolor {

// Colors are positive integers. k > 0 bounds them by k; k == 0 allows any positive
// color (list colorings over arbitrary palettes).
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    int operator[](Vertex v) const { return colors[v]; }
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline void validate(const Graph& g, const Coloring& rho) {
    if (static_cast<int>(rho.colors.size()) != g.order())
        throw InputError("coloring has " + std::to_string(rho.colors.size()) + " entries for " +
                         std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < rho.colors.size(); ++v) {
        int c = rho.colors[v];
        if (c < 1 || (rho.k > 0 && c > rho.k))
            throw InputError("vertex " + std::to_string(v) + " has color " + std::to_string(c) + " outside 1.." +
                             (rho.k > 0 ? std::to_string(rho.k) : std::string("inf")));
    }
}

// Per-vertex color lists. k > 0 means every list has exactly k colors.
struct ListAssignment {
    int k = 0;
    std::vector<std::vector<int>> lists;  // each sorted, duplicate-free

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

inline ListAssignment uniform_lists(int n, int k) {
    ListAssignment l;
    l.k = k;
    std::vector<int> all(k);
    for (int c = 0; c < k; ++c) all[c] = c + 1;
    l.lists.assign(n, all);
    return l;
}

inline void validate(const Graph& g, const ListAssignment& l) {
    if (static_cast<int>(l.lists.size()) != g.order())
        throw InputError("list assignment has " + std::to_string(l.lists.size()) + " lists for " +
                         std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < l.lists.size(); ++v) {
        const auto& list = l.lists[v];
        std::set<int> uniq(list.begin(), list.end());
        if (uniq.size() != list.size()) throw InputError("list of vertex " + std::to_string(v) + " repeats a color");
        if (list.empty()) throw InputError("empty list at vertex " + std::to_string(v));
        if (*uniq.begin() < 1) throw InputError("list of vertex " + std::to_string(v) + " has a nonpositive color");
        if (l.k > 0 && static_cast<int>(list.size()) != l.k)
            throw InputError("list of vertex " + std::to_string(v) + " does not have " + std::to_string(l.k) +
                             " colors");
    }
}

inline void normalize(ListAssignment& l) {
    for (auto& list : l.lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

inline bool respects(const Coloring& rho, const ListAssignment& l) {
    if (rho.colors.size() != l.lists.size()) return false;
    for (std::size_t v = 0; v < l.lists.size(); ++v)
        if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), rho.colors[v])) return false;
    return true;
}

enum class Mode { star, biclique };

inline const char* to_string(Mode m) { return m == Mode::star ? "star" : "biclique"; }

inline Mode parse_mode(const std::string& s) {
    if (s == "star") return Mode::star;
    if (s == "biclique") return Mode::biclique;
    throw InputError("unknown mode: " + s);
}

}  // namespace starcolor
