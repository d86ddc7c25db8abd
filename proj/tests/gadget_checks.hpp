#pragma once

// Small hosts for each gadget and an exact check of its color-forcing property.

#include <cmath>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace gadget_checks {

using namespace starcolor;

struct Case {
    std::string name;
    int k = 2;
    bool equal = false;  // keeper: anchors share a color; switchers: anchors are not monochromatic
    Graph g;
    std::vector<Vertex> anchors;
    GadgetHandle handle;
};

inline std::vector<Vertex> leafed_anchors(GraphBuilder& b, int h) {
    std::vector<Vertex> out;
    for (int i = 0; i < h; ++i) out.push_back(b.add_vertex());
    for (Vertex v : out) b.add_leaf(v);
    return out;
}

inline Case keeper(int k) {
    // isolated anchors would be twins inside the keeper clique, which forces them apart
    GraphBuilder b;
    Case c{"keeper", k, true};
    c.anchors = leafed_anchors(b, 2);
    c.handle = attach_keeper(b, c.anchors[0], c.anchors[1], k);
    c.g = b.build();
    return c;
}

inline Case switcher(int k, int h) {
    GraphBuilder b;
    Case c{"switcher", k};
    c.anchors = leafed_anchors(b, h);
    c.handle = attach_switcher(b, c.anchors, k);
    c.g = b.build();
    return c;
}

inline Case long_switcher(int k, int h) {
    GraphBuilder b;
    Case c{"long_switcher", k};
    c.anchors = leafed_anchors(b, h);
    c.handle = attach_long_switcher(b, c.anchors, k);
    c.g = b.build();
    return c;
}

inline Case list_switcher(int h) {
    GraphBuilder b;
    Case c{"list_switcher", 2};
    c.anchors = leafed_anchors(b, h);
    c.handle = attach_list_switcher(b, c.anchors);
    c.g = b.build();
    return c;
}

inline Case diamond_switcher(int k, int h) {
    GraphBuilder b;
    Case c{"diamond_switcher", k};
    c.anchors = leafed_anchors(b, h);
    c.handle = attach_diamond_switcher(b, c.anchors, k);
    c.g = b.build();
    return c;
}

inline Case split_switcher(int k, int h) {
    GraphBuilder b(h);
    Case c{"split_switcher", k};
    for (Vertex v = 0; v < h; ++v) c.anchors.push_back(v);
    SplitRoles roles{{}, c.anchors};
    c.handle = attach_split_switcher(b, c.anchors, k, roles);
    c.g = b.build();
    return c;
}

struct Outcome {
    bool forced = true;   // every star k-coloring satisfies the anchor property
    bool extends = true;  // every anchor precoloring with the property extends
    bool brute = false;   // decided by coloring enumeration (else by the solver per precoloring)
    double states = 0;
    long long colorings = 0;
    std::string failure;
};

inline bool property(const Case& c, const std::vector<int>& anchor_colors) {
    bool all_same = true;
    for (int x : anchor_colors) all_same = all_same && x == anchor_colors[0];
    return c.equal ? all_same : !all_same;
}

// Every anchor precoloring in lexicographic order.
template <class F>
void each_precoloring(int h, int k, F&& f) {
    std::vector<int> col(h, 1);
    while (true) {
        f(col);
        int i = 0;
        while (i < h && ++col[i] > k) col[i++] = 1;
        if (i == h) return;
    }
}

inline std::string describe(const std::vector<int>& col) {
    std::string s;
    for (int x : col) s += std::to_string(x);
    return s;
}

// Enumeration when the plain state count k^n is at most `state_limit`, else the exact solver
// on each anchor precoloring.
inline Outcome check(const Case& c, double state_limit = std::pow(3.0, 12)) {
    Outcome out;
    const int n = c.g.order();
    const int h = static_cast<int>(c.anchors.size());
    out.states = std::pow(static_cast<double>(c.k), n);
    if (out.states <= state_limit) {
        out.brute = true;
        oracle::Colorings all(c.g, oracle::star_sets(c.g), c.k);
        all.set_symmetry(c.anchors);
        all.for_each({}, [&](const std::vector<int>& col) {
            ++out.colorings;
            std::vector<int> at;
            for (Vertex a : c.anchors) at.push_back(col[a]);
            if (!property(c, at)) {
                out.forced = false;
                out.failure = "coloring with anchors " + describe(at);
                return false;
            }
            return true;
        });
        each_precoloring(h, c.k, [&](const std::vector<int>& at) {
            if (!property(c, at) || !out.extends) return;
            std::vector<int> fixed(n, 0);
            for (int i = 0; i < h; ++i) fixed[c.anchors[i]] = at[i];
            if (!all.find(fixed)) {
                out.extends = false;
                out.failure = "precoloring " + describe(at) + " does not extend";
            }
        });
        return out;
    }
    auto sets = constraint_sets(c.g, Mode::star);
    each_precoloring(h, c.k, [&](const std::vector<int>& at) {
        std::vector<std::pair<Vertex, int>> fixed;
        for (int i = 0; i < h; ++i) fixed.emplace_back(c.anchors[i], at[i]);
        bool ok = solve_constraints(n, sets, c.k, std::nullopt, fixed).has_value();
        out.colorings += ok;
        if (property(c, at) && !ok && out.extends) {
            out.extends = false;
            out.failure = "precoloring " + describe(at) + " does not extend";
        }
        if (!property(c, at) && ok && out.forced) {
            out.forced = false;
            out.failure = "precoloring " + describe(at) + " extends";
        }
    });
    return out;
}

// The forcing suite: k = 2 always, k = 3 where the gadget exists for k = 3.
inline std::vector<Case> suite() {
    std::vector<Case> out;
    for (int k = 2; k <= 3; ++k) {
        out.push_back(keeper(k));
        out.push_back(switcher(k, 2));
        out.push_back(switcher(k, 3));
        out.push_back(long_switcher(k, 2));
        out.push_back(diamond_switcher(k, 2));
        out.push_back(split_switcher(k, 2));
    }
    out.push_back(list_switcher(2));
    out.push_back(list_switcher(3));
    return out;
}

}  // namespace gadget_checks
