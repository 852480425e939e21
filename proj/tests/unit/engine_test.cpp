#include <gtest/gtest.h>

#include "seqcol/engine.hpp"
#include "test_support.hpp"

namespace seqcol {
namespace {

auto ucg_seeds() -> ListAssignment
{
    ListAssignment lists(8, ColorSet::full(3));
    lists[0] = {1};
    lists[1] = {2};
    lists[2] = {3};
    lists[3] = {1};
    return lists;
}

/// Path 0-1-2-3 seeded at vertex 3 and scanned from vertex 0. The distance-2 rule
/// reaches vertices 1 and 2 in the first round and vertex 0 only in the second.
auto slow_path() -> OrderedListGraph
{
    ListAssignment lists(4, ColorSet::full(2));
    lists[3] = {1};
    return {path_graph(4), Ordering::identity(4), lists, 2};
}

TEST(Engine, MinimalUcgTrace)
{
    const auto result = solve({testing::minimal_ucg(), Ordering::identity(8), ucg_seeds(), 3}, rule_base_rt(3));
    ASSERT_TRUE(result.done);
    EXPECT_EQ(result.status, SolveStatus::colored);
    EXPECT_EQ(result.rounds, 2);
    ASSERT_EQ(result.trace.size(), 2U);

    const ListAssignment expected{{1}, {2}, {3}, {1}, {2}, {3}, {1}, {2}};
    EXPECT_EQ(result.lists, expected);
    EXPECT_EQ(result.coloring(3)->colors, (std::vector<Color>{1, 2, 3, 1, 2, 3, 1, 2}));

    auto after_round = [&](std::size_t round, VertexId v) {
        ColorSet last = ColorSet::full(3);
        for (std::size_t r = 0; r <= round; ++r)
            for (const auto& c : result.trace[r])
                if (c.vertex == v)
                    last = c.after;
        return last;
    };
    EXPECT_EQ(after_round(0, 4), (ColorSet{2, 3}));
    EXPECT_EQ(after_round(0, 5), (ColorSet{2, 3}));
    EXPECT_EQ(after_round(0, 6), ColorSet{1});
    EXPECT_EQ(after_round(0, 7), ColorSet{2});
    EXPECT_EQ(after_round(1, 4), ColorSet{2});
    EXPECT_EQ(after_round(1, 5), ColorSet{3});

    bool v7_by_triangle = false;
    for (const auto& c : result.trace[0])
        v7_by_triangle = v7_by_triangle || (c.vertex == 6 && c.rule == "tucker1(3)");
    EXPECT_TRUE(v7_by_triangle);
    bool v5_by_twins = false;
    for (const auto& c : result.trace[1])
        v5_by_twins = v5_by_twins || (c.vertex == 4 && c.rule == "tucker2(2)");
    EXPECT_TRUE(v5_by_twins);
}

TEST(Engine, LocalUpdateForcesVertexSeven)
{
    auto lists = ucg_seeds();
    lists[4] = {2, 3};
    lists[5] = {2, 3};
    const auto outcome = local_update({testing::minimal_ucg(), Ordering::identity(8), lists, 3}, 6, rule_base_rt(3));
    EXPECT_EQ(outcome.list, ColorSet{1});
    EXPECT_TRUE(outcome.done);
    EXPECT_TRUE(outcome.col);
}

TEST(Engine, LocalUpdateTouchesOnlyItsVertex)
{
    const SequentialColorer colorer(testing::minimal_ucg(), Ordering::identity(8), rule_base_rt(3));
    auto lists = ucg_seeds();
    const auto before = lists;
    std::vector<ListChange> changes;
    colorer.local_update(lists, 4, &changes);
    for (VertexId v = 0; v < 8; ++v)
        if (v != 4)
            EXPECT_EQ(lists[v], before[v]);
    for (const auto& c : changes)
        EXPECT_EQ(c.vertex, 4U);
}

TEST(Engine, FailureAbortsMidRound)
{
    ListAssignment lists{{1}, {1}, ColorSet::full(3)};
    const auto result = solve({complete_graph(3), Ordering::identity(3), lists, 3}, rule_base_rt(3));
    EXPECT_FALSE(result.done);
    EXPECT_EQ(result.status, SolveStatus::failed);
    EXPECT_TRUE(result.failed_mid_round);
    EXPECT_EQ(result.failed_vertex, 0U);
    EXPECT_EQ(result.rounds, 0);
    EXPECT_EQ(result.trace.size(), 1U);
    EXPECT_TRUE(result.lists[0].empty());
}

TEST(Engine, StableWhenNothingChanges)
{
    const auto result = solve({empty_graph(3), Ordering::identity(3), ListAssignment(3, ColorSet::full(3)), 3},
                              rule_base_rt(3));
    EXPECT_EQ(result.status, SolveStatus::stable);
    EXPECT_EQ(result.rounds, 1);
    EXPECT_FALSE(result.coloring(3).has_value());
}

TEST(Engine, ScanOrderDecidesRoundCount)
{
    const auto start = slow_path();
    const auto result = solve(start, rule_base_rt(2));
    ASSERT_TRUE(result.done);
    EXPECT_EQ(result.rounds, 2);
    EXPECT_LE(result.rounds, round_bound(start.lists));
    EXPECT_EQ(result.trace[0].size(), 2U);

    SolveOptions capped;
    capped.max_rounds = 1;
    const auto cut = solve(start, rule_base_rt(2), capped);
    EXPECT_EQ(cut.status, SolveStatus::round_cap);
    EXPECT_EQ(cut.rounds, 1);
    EXPECT_EQ(cut.lists[0], ColorSet::full(2));

    // Scanning from the seed finishes in a single round.
    auto reversed = start;
    reversed.ordering = Ordering({4, 3, 2, 1});
    EXPECT_EQ(solve(reversed, rule_base_rt(2)).rounds, 1);
}

TEST(Engine, IsSolvableUsesStrictRoundBound)
{
    const auto start = slow_path();
    const auto rb = rule_base_rt(2);
    EXPECT_TRUE(is_solvable(start, rb));
    EXPECT_TRUE(is_solvable(start, rb, 3));
    EXPECT_FALSE(is_solvable(start, rb, 2));
    EXPECT_FALSE(is_solvable(start, rb, 1));
}

TEST(Engine, TraceCanBeSkipped)
{
    SolveOptions options;
    options.record_trace = false;
    const auto result = solve(slow_path(), rule_base_rt(2), options);
    EXPECT_TRUE(result.done);
    EXPECT_TRUE(result.trace.empty());
}

TEST(Engine, InputValidation)
{
    auto bad = slow_path();
    bad.ordering = Ordering::identity(3);
    EXPECT_THROW(solve(bad, rule_base_rt(2)), std::invalid_argument);
    EXPECT_THROW(solve(slow_path(), rule_base_rt(3)), std::invalid_argument);
    auto wide = slow_path();
    wide.lists[0] = {3};
    EXPECT_THROW(wide.validate(), std::invalid_argument);
    const SequentialColorer colorer(path_graph(4), Ordering::identity(4), rule_base_rt(2));
    SolveOptions zero;
    zero.max_rounds = 0;
    EXPECT_THROW(colorer.solve(slow_path().lists, zero), std::invalid_argument);
}

TEST(Engine, ListsFromDefiningSet)
{
    const Graph g = path_graph(3);
    const Coloring gamma{{1, 2, 1}, 3};
    const std::vector<VertexId> a{1};
    const auto lists = lists_from_defining_set(g, gamma, a);
    EXPECT_EQ(lists, (ListAssignment{ColorSet::full(3), ColorSet{2}, ColorSet::full(3)}));
    EXPECT_EQ(round_bound(lists), 4);
    EXPECT_EQ(round_bound(ListAssignment(2, ColorSet{1})), 1);
    const std::vector<VertexId> outside{5};
    EXPECT_THROW(lists_from_defining_set(g, gamma, outside), std::invalid_argument);
}

TEST(Engine, ColoringClosureGrowsWithRounds)
{
    const OrderedColoredGraph g{path_graph(6), Ordering::identity(6), Coloring{{2, 1, 2, 1, 2, 1}, 2}};
    const std::vector<VertexId> seed{5};
    const auto one = coloring_closure(seed, g, rule_base_rt(2), 1);
    EXPECT_EQ(one.vertices, (std::vector<VertexId>{3, 4, 5}));
    EXPECT_EQ(one.subgraph.graph.order(), 3U);
    EXPECT_EQ(one.subgraph.graph.size(), 2U);
    EXPECT_EQ(one.subgraph.coloring.colors, (std::vector<Color>{1, 2, 1}));
    const auto two = coloring_closure(seed, g, rule_base_rt(2), 2);
    EXPECT_EQ(two.vertices, (std::vector<VertexId>{1, 2, 3, 4, 5}));
    const auto all = coloring_closure(seed, g, rule_base_rt(2), std::nullopt);
    EXPECT_EQ(all.vertices.size(), 6U);
    EXPECT_TRUE(all.run.done);
}

TEST(Engine, AuditSeesEveryStructuralFiring)
{
    const bool was_on = audit_enabled();
    set_audit(true, 12);
    const auto before = engine_stats();
    const auto result = solve({testing::minimal_ucg(), Ordering::identity(8), ucg_seeds(), 3}, rule_base_rt(3));
    const auto after = engine_stats();
    set_audit(was_on, 12);
    std::size_t firings = 0;
    for (const auto& round : result.trace)
        firings += round.size();
    EXPECT_EQ(after.audited_firings - before.audited_firings, firings);
    EXPECT_EQ(after.audit_violations, before.audit_violations);
}

TEST(Engine, AuditSkipsLargeGraphs)
{
    const bool was_on = audit_enabled();
    set_audit(true, 3);
    const auto before = engine_stats();
    solve({testing::minimal_ucg(), Ordering::identity(8), ucg_seeds(), 3}, rule_base_rt(3));
    const auto after = engine_stats();
    set_audit(was_on, 12);
    EXPECT_EQ(after.audited_firings, before.audited_firings);
}

TEST(Engine, GreedyDependsOnScanOrder)
{
    ListAssignment lists(3, ColorSet::full(3));
    lists[0] = {1};
    const auto forward = solve({complete_graph(3), Ordering({1, 2, 3}), lists, 3}, rule_base_rg(3));
    const auto swapped = solve({complete_graph(3), Ordering({1, 3, 2}), lists, 3}, rule_base_rg(3));
    ASSERT_TRUE(forward.done);
    ASSERT_TRUE(swapped.done);
    EXPECT_EQ(forward.coloring(3)->colors, (std::vector<Color>{1, 2, 3}));
    EXPECT_EQ(swapped.coloring(3)->colors, (std::vector<Color>{1, 3, 2}));
}

TEST(Engine, ColorerIsReusable)
{
    const SequentialColorer colorer(testing::minimal_ucg(), Ordering::identity(8), rule_base_rt(3));
    const auto a = colorer.solve(ucg_seeds());
    const auto b = colorer.solve(ucg_seeds());
    EXPECT_EQ(a.lists, b.lists);
    EXPECT_EQ(a.rounds, b.rounds);
    EXPECT_EQ(to_string(a.status), "colored");
    EXPECT_EQ(to_string(SolveStatus::round_cap), "round-cap");
}

}  // namespace
}  // namespace seqcol
