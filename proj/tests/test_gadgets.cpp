#include <gtest/gtest.h>

#include "gadget_checks.hpp"

using namespace starcolor;

namespace {

int added(const GadgetHandle& h) { return static_cast<int>(h.internals.size()); }

VertexSet internal_set(const Graph& g, const GadgetHandle& h) { return VertexSet::of(g.order(), h.internal_vertices()); }

// Maximal stars with a center in `where`; an edge star counts for both ends.
std::vector<std::vector<Vertex>> stars_centered_in(const Graph& g, const VertexSet& where) {
    std::vector<std::vector<Vertex>> out;
    for (const Star& s : maximal_stars(g))
        if (where.test(s.center) || (s.leaves.size() == 1 && where.test(s.leaves[0]))) out.push_back(s.vertices());
    return out;
}

// Maximal stars with at least one vertex in `where`.
std::vector<std::vector<Vertex>> stars_touching(const Graph& g, const VertexSet& where) {
    std::vector<std::vector<Vertex>> out;
    for (const Star& s : maximal_stars(g)) {
        auto vs = s.vertices();
        if (std::any_of(vs.begin(), vs.end(), [&](Vertex x) { return where.test(x); })) out.push_back(vs);
    }
    return out;
}

}  // namespace

TEST(Gadgets, VertexCounts) {
    {
        GraphBuilder b(2);
        EXPECT_EQ(added(attach_keeper(b, 0, 1, 2)), 3);
        EXPECT_EQ(added(attach_keeper(b, 0, 1, 3)), 8);
    }
    {
        GraphBuilder b(3);
        auto h = attach_switcher(b, {0, 1, 2}, 3);
        EXPECT_EQ(added(h), 3);
        Graph g = b.build();
        int cross = 0, internal = 0;
        VertexSet in = internal_set(g, h);
        for (auto [u, v] : g.edges()) (in.test(u) && in.test(v) ? internal : cross)++;
        EXPECT_EQ(cross, 9);
        EXPECT_EQ(internal, 3);
    }
    {
        GraphBuilder b(2);
        EXPECT_EQ(added(attach_long_switcher(b, {0, 1}, 2)), 12);
    }
    {
        GraphBuilder b(5);
        EXPECT_EQ(added(attach_cluster(b, 0, {1, 2}, {3, 4})), 4);
        GraphBuilder c(7);
        EXPECT_EQ(added(attach_cluster(c, 0, {1, 2, 3}, {4, 5, 6})), 6);
    }
    {
        GraphBuilder b(1);
        attach_forcer(b, 0, 2);
        EXPECT_EQ(b.order(), 21);
    }
    {
        GraphBuilder b(2);
        EXPECT_EQ(added(attach_list_switcher(b, {0, 1})), 4);
        GraphBuilder c(2);
        EXPECT_EQ(added(attach_diamond_switcher(c, {0, 1}, 2)), 11);
        GraphBuilder d(2);
        SplitRoles roles{{}, {0, 1}};
        EXPECT_EQ(added(attach_split_switcher(d, {0, 1}, 2, roles)), 6);
    }
}

TEST(Gadgets, AuditsAreClean) {
    for (const auto& c : gadget_checks::suite()) EXPECT_TRUE(audit(c.g, c.handle).empty()) << c.name;

    GraphBuilder b(2);
    auto h = attach_keeper(b, 0, 1, 2);
    b.add_edge(h.internal_vertices()[0], b.add_vertex());
    auto report = audit(b.build(), h);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].rfind("extra edge", 0), 0u);
}

TEST(Gadgets, ErrorCases) {
    GraphBuilder b(3);
    b.add_edge(0, 1);
    EXPECT_THROW(attach_keeper(b, 0, 0, 2), InputError);
    EXPECT_THROW(attach_keeper(b, 0, 2, 1), InputError);
    EXPECT_THROW(attach_switcher(b, {0, 1}, 2), InputError);
    EXPECT_THROW(attach_switcher(b, {2}, 2), InputError);
    EXPECT_THROW(attach_switcher(b, {0, 7}, 2), InputError);
    EXPECT_THROW(attach_diamond_switcher(b, {0, 1}, 2), InputError);
    EXPECT_THROW(attach_cluster(b, 0, {1}, {2}), InputError);
    EXPECT_THROW(attach_cluster(b, 0, {0, 1}, {2, 3}), InputError);
    EXPECT_THROW(attach_forcer(b, 0, 4), CapExceeded);
    SplitRoles roles{{0, 1}, {2}};
    EXPECT_THROW(attach_split_switcher(b, {0, 2}, 2, roles), InputError);
    EXPECT_THROW(attach_split_forcer(b, 1, 2, roles), InputError);
}

TEST(Cluster, InducesWheel) {
    GraphBuilder b(5);
    auto h = attach_cluster(b, 0, {1, 2}, {3, 4});
    Graph g = b.build();
    std::vector<Vertex> keep{0, 1, 2, 3, 4};
    for (Vertex v : h.group("V")) keep.push_back(v);
    Graph w6 = detail::cone(cycle_graph(6));
    EXPECT_EQ(oracle::canonical_code(g.induced(keep)), oracle::canonical_code(w6));
}

TEST(Cluster, StarsAtTheHubSelectOneLiteralSet) {
    for (int ell = 2; ell <= 3; ++ell) {
        GraphBuilder b(1 + 2 * ell);
        std::vector<Vertex> x, nx;
        for (int i = 0; i < ell; ++i) {
            x.push_back(1 + i);
            nx.push_back(1 + ell + i);
        }
        auto h = attach_cluster(b, 0, x, nx);
        Graph g = b.build();
        VertexSet k = internal_set(g, h);
        int seen = 0;
        for (const Star& s : maximal_stars(g)) {
            if (s.center != 0) continue;
            if (std::any_of(s.leaves.begin(), s.leaves.end(), [&](Vertex u) { return k.test(u); })) continue;
            ++seen;
            EXPECT_TRUE(s.leaves == x || s.leaves == nx);
        }
        EXPECT_EQ(seen, 2);
    }
}

TEST(Gadgets, ForbiddenSubgraphs) {
    for (int k = 2; k <= 3; ++k) {
        Graph kk = complete_graph(k + 2);
        for (const auto& c : {gadget_checks::keeper(k), gadget_checks::long_switcher(k, 2)}) {
            EXPECT_FALSE(find_hole(c.g)) << c.name << " k=" << k;
            EXPECT_FALSE(contains_induced(c.g, kk)) << c.name << " k=" << k;
        }
        auto d = gadget_checks::diamond_switcher(k, 2);
        EXPECT_FALSE(contains_induced(d.g, "C4")) << k;
        EXPECT_FALSE(contains_induced(d.g, "diamond")) << k;
        EXPECT_FALSE(contains_induced(d.g, kk)) << k;
    }
    GraphBuilder b(1);
    attach_forcer(b, 0, 2);
    Graph f = b.build();
    EXPECT_FALSE(contains_induced(f, "C4"));
    EXPECT_FALSE(contains_induced(f, "K4"));
}

TEST(Gadgets, ForcingSuite) {
    for (const auto& c : gadget_checks::suite()) {
        auto r = gadget_checks::check(c);
        EXPECT_TRUE(r.forced) << c.name << " k=" << c.k << " h=" << c.anchors.size() << ": " << r.failure;
        EXPECT_TRUE(r.extends) << c.name << " k=" << c.k << " h=" << c.anchors.size() << ": " << r.failure;
        EXPECT_GT(r.colorings, 0) << c.name;
    }
}

// Host w1, w2 plus a list switcher; lists on all six vertices up to color renaming.
TEST(ListSwitcher, ExtendsUnderEveryTwoListAssignment) {
    GraphBuilder b(2);
    auto h = attach_list_switcher(b, {0, 1});
    Graph g = b.build();
    const int n = g.order();
    ASSERT_EQ(n, 6);
    auto sets = stars_touching(g, internal_set(g, h));
    std::vector<std::vector<int>> lists(n);
    long long patterns = 0;
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            ++patterns;
            oracle::Colorings c(g, sets, 0);
            c.set_lists(lists);
            for (int a : lists[0])
                for (int bcol : lists[1]) {
                    if (a == bcol) continue;
                    std::vector<int> fixed(n, 0);
                    fixed[0] = a;
                    fixed[1] = bcol;
                    ASSERT_TRUE(c.find(fixed)) << "pattern " << patterns;
                }
            return;
        }
        for (int x = 1; x <= used + 2; ++x)
            for (int y = x + 1; y <= used + 2; ++y) {
                lists[v] = {x, y};
                rec(v + 1, std::max(used, y));
            }
    };
    rec(0, 0);
    EXPECT_GT(patterns, 1000);
}

TEST(Forcer, TwoColorAdmissibility) {
    GraphBuilder b(1);
    auto h = attach_forcer(b, 0, 2);
    Graph g = b.build();
    auto uniform = uniform_lists(g.order(), 2);
    EXPECT_EQ(admissible_colors(g, h, uniform), (std::vector<int>{1, 2}));
    for (int target = 1; target <= 2; ++target)
        EXPECT_EQ(admissible_colors(g, h, forcing_lists(g, h, uniform, target)), std::vector<int>{target});
    EXPECT_THROW(forcing_lists(g, h, uniform, 3), InputError);
}

// Plain enumeration of L-colorings over stars centered in A, B and the switchers.
TEST(Forcer, TwoColorAdmissibilityByEnumeration) {
    GraphBuilder b(1);
    auto h = attach_forcer(b, 0, 2);
    Graph g = b.build();
    VertexSet body(g.order());
    for (const auto& [v, role] : h.internals)
        if (role.rfind("leaf", 0) != 0) body.set(v);
    auto sets = stars_centered_in(g, body);
    for (int target = 0; target <= 2; ++target) {
        ListAssignment l = uniform_lists(g.order(), 2);
        if (target) l = forcing_lists(g, h, l, target);
        oracle::Colorings c(g, sets, 0);
        c.set_lists(l.lists);
        std::vector<int> want;
        for (int col : l.lists[0]) {
            std::vector<int> fixed(g.order(), 0);
            fixed[0] = col;
            if (c.find(fixed)) want.push_back(col);
        }
        EXPECT_EQ(admissible_colors(g, h, l), want) << "target " << target;
        if (target) EXPECT_EQ(want, std::vector<int>{target});
    }
}

TEST(Forcer, ThreeColorTargets) {
    GraphBuilder b(1);
    auto h = attach_forcer(b, 0, 3);
    Graph g = b.build();
    EXPECT_EQ(g.order(), 1 + 2 + 2 + 26 + 26 + 3 * 26 * 3);
    EXPECT_TRUE(audit(g, h).empty());
    auto uniform = uniform_lists(g.order(), 3);
    for (int target = 1; target <= 3; ++target)
        EXPECT_EQ(admissible_colors(g, h, forcing_lists(g, h, uniform, target)), std::vector<int>{target});
}

// Every C(a,b) block is adjacent to every other, so two blocks at the anchor that share
// the anchor's B color leave a monochromatic star; no color is admissible.
TEST(SplitForcer, NoColorIsAdmissible) {
    GraphBuilder b(2);
    SplitRoles roles{{}, {0, 1}};
    attach_split_switcher(b, {0, 1}, 2, roles);
    auto f = attach_split_forcer(b, 0, 2, roles);
    Graph g = b.build();
    EXPECT_TRUE(audit(g, f).empty());
    auto lists = forcing_lists(g, f, uniform_lists(g.order(), 2), 1);
    EXPECT_TRUE(admissible_colors(g, f, lists).empty());
    auto sets = stars_centered_in(g, VertexSet::of(g.order(), detail::forcer_body(f)));
    for (int c = 1; c <= 2; ++c) EXPECT_FALSE(solve_constraints(g.order(), sets, 0, lists, {{0, c}}));
}

TEST(Split, AttachmentsKeepTheHostSplit) {
    for (int k = 2; k <= 3; ++k) {
        GraphBuilder b;
        SplitRoles roles;
        for (int i = 0; i < 3; ++i) roles.clique.push_back(b.add_vertex());
        b.add_clique(roles.clique);
        for (int i = 0; i < 3; ++i) {
            roles.independent.push_back(b.add_vertex());
            b.add_edge(roles.independent.back(), roles.clique[i]);
        }
        attach_split_switcher(b, {roles.independent[0], roles.independent[1]}, k, roles);
        attach_split_switcher(b, {roles.independent[1], roles.independent[2]}, k, roles);
        if (k == 2) attach_split_forcer(b, roles.independent[0], k, roles);
        Graph g = b.build();
        auto parts = split_partition(g);
        ASSERT_TRUE(parts) << k;
        EXPECT_TRUE(g.is_clique(roles.clique));
        for (std::size_t i = 0; i < roles.independent.size(); ++i)
            for (std::size_t j = i + 1; j < roles.independent.size(); ++j)
                EXPECT_FALSE(g.adjacent(roles.independent[i], roles.independent[j]));
    }
}
