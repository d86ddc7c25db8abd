#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace starcolor;

namespace {

// Every k-list assignment up to color renaming: vertex v draws from colors 1..(max so far)+k.
bool choosable_by_lists(const Graph& g, int k, Mode mode) {
    const int n = g.order();
    auto sets = oracle::sets_for(g, mode);
    std::vector<std::vector<int>> lists(n);
    std::function<bool(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            oracle::Colorings c(g, sets, 0);
            c.set_lists(lists);
            return c.find().has_value();
        }
        const int top = used + k;
        std::vector<int> pick(k);
        std::function<bool(int, int)> choose = [&](int i, int from) {
            if (i == k) {
                lists[v] = pick;
                return rec(v + 1, std::max(used, pick.back()));
            }
            for (int c = from; c <= top; ++c) {
                pick[i] = c;
                if (!choose(i + 1, c + 1)) return false;
            }
            return true;
        };
        return choose(0, 1);
    };
    return rec(0, 0);
}

}  // namespace

TEST(Solve, Examples) {
    Graph k4 = complete_graph(4);
    auto four = solve_star_coloring(k4, 4);
    ASSERT_TRUE(four.colorable());
    EXPECT_FALSE(is_star_coloring(k4, *four.coloring));
    EXPECT_FALSE(solve_star_coloring(k4, 3).colorable());

    // G([2,2],[1]): K4 plus a vertex adjacent to one side
    EXPECT_FALSE(solve_star_coloring(threshold_graph({{2, 2}, {1}}).graph, 2).colorable());

    auto c4 = solve_biclique_coloring(cycle_graph(4), 2);
    ASSERT_TRUE(c4.colorable());
    EXPECT_FALSE(is_biclique_coloring(cycle_graph(4), *c4.coloring));

    Graph k3 = complete_graph(3);
    EXPECT_EQ(solve_biclique_coloring(k3, 2).colorable(), oracle::colorable(k3, 2, Mode::biclique));
}

TEST(Solve, RespectsLists) {
    Graph p3 = path_graph(3);
    ListAssignment l{0, {{5}, {5}, {5, 7}}};
    auto r = solve_star_coloring(p3, 0, l);
    ASSERT_TRUE(r.colorable());
    EXPECT_EQ(r.coloring->colors, (std::vector<int>{5, 5, 7}));
    EXPECT_TRUE(respects(*r.coloring, l));
    EXPECT_FALSE(solve_star_coloring(p3, 0, ListAssignment{0, {{5}, {5}, {5}}}).colorable());
}

TEST(Solve, MatchesBruteForceOnAllGraphsUpTo6) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::graphs_of_order(n))
            for (Mode mode : {Mode::star, Mode::biclique})
                for (int k = 1; k <= 3; ++k) {
                    auto r = solve_coloring(g, mode, k, std::nullopt);
                    ASSERT_EQ(r.colorable(), oracle::colorable(g, k, mode))
                        << to_string(mode) << " k=" << k << "\n"
                        << to_edge_list(g);
                    if (r.colorable()) EXPECT_FALSE(verify(g, *r.coloring, mode));
                }
}

TEST(Solve, ParallelStatusMatchesSequential) {
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_w4_dart_gem_free(8 + trial % 6, rng);
        SolveOptions par;
        par.jobs = 4;
        for (int k = 2; k <= 3; ++k) {
            auto a = solve_star_coloring(g, k);
            auto b = solve_star_coloring(g, k, std::nullopt, par);
            ASSERT_EQ(a.colorable(), b.colorable());
            if (b.colorable()) EXPECT_FALSE(is_star_coloring(g, *b.coloring));
        }
    }
}

TEST(Solve, Caps) {
    SolveOptions small;
    small.max_n = 3;
    EXPECT_THROW(solve_star_coloring(complete_graph(4), 4, std::nullopt, small), CapExceeded);
    EXPECT_THROW(solve_star_coloring(complete_graph(2), 65), CapExceeded);
    EXPECT_THROW(solve_star_coloring(complete_graph(2), 0), InputError);
}

TEST(Chromatic, CompleteGraphsAndSmallCases) {
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(chromatic(complete_graph(n), Mode::star).k, n);
        EXPECT_EQ(chromatic(complete_graph(n), Mode::biclique).k, n);
    }
    EXPECT_EQ(chromatic(GraphBuilder(3).build(), Mode::star).k, 1);
    EXPECT_EQ(chromatic(cycle_graph(4), Mode::star).k, 2);
    EXPECT_EQ(chromatic(threshold_graph({{2, 2}, {1}}).graph, Mode::star).k, 3);
}

TEST(Choosable, Examples) {
    EXPECT_TRUE(is_k_choosable(complete_graph(2), 2, Mode::star).colorable());
    auto k3 = is_k_choosable(complete_graph(3), 2, Mode::star);
    ASSERT_FALSE(k3.colorable());
    ASSERT_TRUE(k3.refuting_assignment);
    EXPECT_EQ(k3.refuting_assignment->lists, (std::vector<std::vector<int>>(3, {1, 2})));
    EXPECT_TRUE(is_k_choosable(threshold_graph({{2, 1, 2}, {2, 1}}).graph, 2, Mode::star).colorable());
}

TEST(Choosable, MatchesListEnumerationOnSmallGraphs) {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::graphs_of_order(n))
            for (Mode mode : {Mode::star, Mode::biclique})
                for (int k = 1; k <= (n <= 4 ? 3 : 2); ++k) {
                    auto r = is_k_choosable(g, k, mode);
                    ASSERT_EQ(r.colorable(), choosable_by_lists(g, k, mode))
                        << to_string(mode) << " k=" << k << "\n"
                        << to_edge_list(g);
                    if (!r.colorable()) {
                        ASSERT_TRUE(r.refuting_assignment);
                        EXPECT_FALSE(oracle::list_colorable(g, r.refuting_assignment->lists, mode));
                    }
                }
}

// The greedy shortcut never claims a graph the refuter can refute.
TEST(Choosable, GreedyShortcutIsSound) {
    int used = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::graphs_of_order(n))
            for (int k = 2; k <= 3; ++k) {
                auto sets = constraint_sets(g, Mode::star);
                if (!detail::greedy_choosable(n, sets, k)) continue;
                ++used;
                ASSERT_FALSE(detail::ListRefuter(n, sets, k, 0).run()) << "k=" << k << "\n" << to_edge_list(g);
            }
    EXPECT_GT(used, 100);
}

// chi <= ch, and uniform lists agree with plain k-colorability.
TEST(Choosable, ChromaticIsALowerBound) {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : oracle::graphs_of_order(n)) {
            int chi = chromatic(g, Mode::star).k;
            if (chi > 1 && chi <= 5) EXPECT_FALSE(is_k_choosable(g, chi - 1, Mode::star).colorable());
            for (int k = 1; k <= 3; ++k)
                EXPECT_EQ(solve_star_coloring(g, 0, uniform_lists(n, k)).colorable(),
                          solve_star_coloring(g, k).colorable());
        }
}

TEST(Choosable, Caps) {
    EXPECT_THROW(is_k_choosable(complete_graph(17), 2, Mode::star), CapExceeded);
    EXPECT_THROW(is_k_choosable(complete_graph(3), 5, Mode::star), CapExceeded);
    EXPECT_THROW(is_k_choosable(complete_graph(3), 0, Mode::star), InputError);
}
