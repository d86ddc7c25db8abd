#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace starcolor;

TEST(BuildGraph, SmallCases) {
    Graph k1 = build_graph(1, {});
    EXPECT_EQ(k1.order(), 1);
    EXPECT_EQ(k1.degree(0), 0);

    Graph k2 = build_graph(2, {{0, 1}});
    EXPECT_TRUE(k2.adjacent(0, 1));
    EXPECT_EQ(k2.size(), 1u);

    Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4.degree(v), 3);
}

TEST(BuildGraph, DeduplicatesAndRejectsBadInput) {
    Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.size(), 1u);
    EXPECT_THROW(build_graph(2, {{0, 2}}), InputError);
    EXPECT_THROW(build_graph(2, {{1, 1}}), InputError);
    EXPECT_THROW(build_graph(2, {{-1, 0}}), InputError);
}

TEST(EdgeList, RoundTrip) {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::graphs_of_order(n)) {
            Graph back = parse_edge_list(to_edge_list(g));
            EXPECT_EQ(back.edges(), g.edges());
            EXPECT_EQ(back.order(), g.order());
        }
}

TEST(EdgeList, CommentsAndErrors) {
    Graph g = parse_edge_list("# triangle\n3 3\n0 1 # first\n1 2\n\n2 0\n");
    EXPECT_EQ(g.size(), 3u);
    EXPECT_THROW(parse_edge_list(""), InputError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 0\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), InputError);
}

TEST(TwinPartition, Examples) {
    auto k4 = twin_partition(complete_graph(4));
    ASSERT_EQ(k4.blocks.size(), 1u);
    EXPECT_EQ(k4.blocks[0].size(), 4u);

    EXPECT_EQ(twin_partition(path_graph(3)).blocks.size(), 3u);
    // false twins are not twins
    EXPECT_EQ(twin_partition(complete_bipartite_graph(2, 2)).blocks.size(), 4u);
}

TEST(TwinPartition, MatchesClosedNeighborhoodsOnAllSmallGraphs) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::graphs_of_order(n)) {
            auto tp = twin_partition(g);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    bool same = tp.block_of[u] == tp.block_of[v];
                    EXPECT_EQ(same, g.closed_neighborhood(u) == g.closed_neighborhood(v));
                    if (same && u != v) EXPECT_TRUE(g.adjacent(u, v));
                }
        }
}

TEST(BlockSeparation, Examples) {
    auto claw = block_separation(complete_bipartite_graph(1, 3), 0);
    ASSERT_TRUE(claw);
    EXPECT_EQ(claw->parts.size(), 4u);
    EXPECT_EQ(claw->parts[0], std::vector<Vertex>{0});

    EXPECT_FALSE(block_separation(make_pattern("W4").graph, 0));

    auto k4 = block_separation(complete_graph(4), 2);
    ASSERT_TRUE(k4);
    ASSERT_EQ(k4->parts.size(), 1u);
    EXPECT_EQ(k4->parts[0], (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(BlockSeparation, InvariantsAndForbiddenSubgraphEquivalence) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : oracle::graphs_of_order(n)) {
            bool all_sep = true;
            for (Vertex v = 0; v < n; ++v) {
                auto sep = block_separation(g, v);
                if (!sep) {
                    all_sep = false;
                    continue;
                }
                VertexSet cover(n);
                for (const auto& p : sep->parts)
                    for (Vertex x : p) {
                        EXPECT_FALSE(cover.test(x));
                        cover.set(x);
                    }
                EXPECT_EQ(cover, g.closed_neighborhood(v));
                for (Vertex x : sep->parts[0]) EXPECT_TRUE(dominates(g, x, v));
                for (std::size_t i = 1; i < sep->parts.size(); ++i)
                    for (std::size_t j = i + 1; j < sep->parts.size(); ++j)
                        for (Vertex a : sep->parts[i])
                            for (Vertex b : sep->parts[j]) EXPECT_FALSE(g.adjacent(a, b));
            }
            EXPECT_EQ(all_sep, is_w4_dart_gem_free(g)) << to_edge_list(g);
        }
}

TEST(ContainsInduced, Examples) {
    EXPECT_FALSE(contains_induced(complete_graph(4), "diamond"));
    auto w4 = make_pattern("W4").graph;
    auto hit = contains_induced(w4, "W4");
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->size(), 5u);

    // diamond: vertices 0 and 1 have degree 3
    auto d = make_pattern("diamond").graph;
    auto tri = contains_induced(d, "K3");
    ASSERT_TRUE(tri);
    std::vector<Vertex> t = *tri;
    std::sort(t.begin(), t.end());
    EXPECT_TRUE(std::binary_search(t.begin(), t.end(), 0));
    EXPECT_TRUE(std::binary_search(t.begin(), t.end(), 1));

    EXPECT_THROW(contains_induced(d, "hexagon"), InputError);
}

TEST(ContainsInduced, MatchesSubsetSearch) {
    const char* names[] = {"K3", "co-K3", "P3", "co-P3", "P4", "C4", "2K2", "C5", "K4", "diamond", "claw", "dart", "gem", "W4"};
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::graphs_of_order(n))
            for (const char* name : names) {
                const Graph p = make_pattern(name).graph;
                const std::uint64_t want = oracle::canonical_code(p);
                bool found = false;
                for (std::uint64_t m = 0; m < (1ULL << n) && !found; ++m) {
                    auto vs = oracle::members(m);
                    if (static_cast<int>(vs.size()) == p.order()) found = oracle::canonical_code(g.induced(vs)) == want;
                }
                auto got = contains_induced(g, name);
                ASSERT_EQ(got.has_value(), found) << name << "\n" << to_edge_list(g);
                if (got) EXPECT_EQ(oracle::canonical_code(g.induced(*got)), want);
            }
}

TEST(Recognize, Examples) {
    auto k4 = recognize(complete_graph(4));
    EXPECT_TRUE(k4.split && k4.threshold && k4.block && k4.net_free_block && k4.chordal_small && k4.c4_free &&
                k4.diamond_free && k4.w4_dart_gem_free);
    // K4 contains triangles
    EXPECT_FALSE(k4.triangle_free);

    auto c4 = recognize(cycle_graph(4));
    EXPECT_FALSE(c4.split);
    EXPECT_FALSE(c4.threshold);
    EXPECT_FALSE(c4.c4_free);
    EXPECT_TRUE(c4.triangle_free);

    auto net = recognize(make_pattern("net").graph);
    EXPECT_TRUE(net.block);
    EXPECT_FALSE(net.net_free_block);
}

TEST(Recognize, ClassRelations) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : oracle::graphs_of_order(n)) {
            auto f = recognize(g);
            if (f.threshold) EXPECT_TRUE(f.split);
            EXPECT_EQ(f.chordal_small, !find_hole(g).has_value());
            EXPECT_EQ(f.split, split_partition(g).has_value());
        }
}

TEST(SplitPartition, SidesAreCliqueAndIndependent) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : oracle::graphs_of_order(n))
            if (auto p = split_partition(g)) {
                EXPECT_TRUE(g.is_clique(p->first));
                EXPECT_TRUE(g.is_independent(p->second));
                EXPECT_EQ(p->first.size() + p->second.size(), static_cast<std::size_t>(n));
            }
}
