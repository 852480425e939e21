#include <gtest/gtest.h>

#include "seqcol/rules.hpp"
#include "test_support.hpp"

namespace seqcol {
namespace {

auto identity_embedding(const LocalRule& rule) -> std::vector<VertexId>
{
    return testing::all_vertices(rule.pattern.graph);
}

TEST(Rules, UpdateKindNamesRoundTrip)
{
    for (auto kind : {UpdateKind::subtract_union, UpdateKind::intersect_lists, UpdateKind::greedy_min,
                      UpdateKind::type1_forcing, UpdateKind::type2_forcing})
        EXPECT_EQ(parse_update_kind(to_string(kind)), kind);
    EXPECT_THROW(parse_update_kind("bogus"), std::invalid_argument);
}

TEST(Rules, TuckerShapes)
{
    const auto t1 = tucker1(3);
    EXPECT_EQ(t1.pattern.graph.order(), 3U);
    EXPECT_EQ(t1.pattern.graph.size(), 3U);
    EXPECT_EQ(t1.target, t1.pattern.vertex("x_3"));
    EXPECT_EQ(t1.union_threshold, 2);

    const auto t2 = tucker2(3);
    EXPECT_EQ(t2.pattern.graph.order(), 4U);
    EXPECT_EQ(t2.pattern.graph.size(), 5U);
    EXPECT_EQ(t2.target, t2.pattern.vertex("u"));
    EXPECT_EQ(t2.partner, t2.pattern.vertex("v"));
    EXPECT_EQ(t2.union_threshold, 3);
    EXPECT_THROW(tucker1(1), std::invalid_argument);
    EXPECT_THROW(tucker2(1), std::invalid_argument);
}

TEST(Rules, TuckerOneRemovesColorsOfSaturatedClique)
{
    const auto rule = tucker1(3);
    const Graph& host = rule.pattern.graph;
    const ListAssignment lists{ColorSet{1}, ColorSet{1, 2}, ColorSet{1, 2, 3}};
    const RuleContext ctx{host, lists, 3};
    EXPECT_EQ(rule.apply(ctx, identity_embedding(rule)), ColorSet{3});

    const ListAssignment wide{ColorSet{1, 3}, ColorSet{1, 2}, ColorSet{1, 2, 3}};
    EXPECT_EQ(rule.apply({host, wide, 3}, identity_embedding(rule)), std::nullopt);
}

TEST(Rules, TuckerTwoIntersectsTwinLists)
{
    const auto rule = tucker2(3);
    const Graph& host = rule.pattern.graph;
    ListAssignment lists(4);
    lists[rule.pattern.vertex("x_1")] = {1};
    lists[rule.pattern.vertex("x_2")] = {2};
    lists[rule.pattern.vertex("u")] = {1, 2, 3};
    lists[rule.pattern.vertex("v")] = {3};
    EXPECT_EQ(rule.apply({host, lists, 3}, identity_embedding(rule)), ColorSet{3});

    // Joining u and v breaks the side condition.
    Graph joined = host;
    joined.add_edge(rule.pattern.vertex("u"), rule.pattern.vertex("v"));
    EXPECT_EQ(rule.apply({joined, lists, 3}, identity_embedding(rule)), std::nullopt);

    lists[rule.pattern.vertex("x_2")] = {2, 4};
    EXPECT_EQ(rule.apply({host, lists, 4}, identity_embedding(rule)), std::nullopt);
}

TEST(Rules, ValidateRulePassesForTuckerRules)
{
    for (int t : {2, 3}) {
        for (const auto& rule : {tucker1(t), tucker2(t)}) {
            const auto report = validate_rule(rule, t);
            EXPECT_TRUE(report.passed()) << rule.name << ": " << (report.examples.empty() ? "" : report.examples[0]);
            EXPECT_GT(report.monotone_pairs, 0U);
        }
    }
    // (2^t - 1)^|pattern| assignments.
    EXPECT_EQ(validate_rule(tucker1(2), 2).assignments, 9U);
    EXPECT_EQ(validate_rule(tucker2(3), 3).assignments, 2401U);
}

TEST(Rules, ValidateRuleSkipsLargePatterns)
{
    EXPECT_TRUE(validate_rule(tucker1(4), 4, 3).skipped);
    EXPECT_FALSE(validate_rule(tucker1(4), 4, 3).passed());
}

TEST(Rules, GreedyAsLocalRuleIsNotSound)
{
    const auto rule = greedy_local_rule(marked_clique({"a", "b"}), "b");
    const auto report = validate_rule(rule, 2);
    EXPECT_FALSE(report.passed());
    EXPECT_GT(report.solution_violations, 0U);
}

TEST(Rules, TypeOneForcing)
{
    // Triangle a, b, v with a pendant vertex w on a.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    const ListAssignment lists{ColorSet{1, 2}, ColorSet{1, 2}, ColorSet{1, 2, 3}, ColorSet{1, 2, 3}};
    const std::vector<VertexId> edge{0, 1};
    const auto forced = type1_force(g, lists, 3, edge, 2);
    EXPECT_EQ(forced.status, ForceStatus::applied);
    EXPECT_EQ(forced.list, ColorSet{3});
    // w sees only one class of the edge.
    EXPECT_EQ(type1_force(g, lists, 3, edge, 3).status, ForceStatus::not_applicable);
    EXPECT_EQ(type1_force(g, lists, 3, edge, 2, 1).status, ForceStatus::undecided);
    EXPECT_THROW(type1_force(g, lists, 3, edge, 0), std::invalid_argument);
}

TEST(Rules, TypeOneForcingNeedsOnePartition)
{
    // A 3-path with full lists has colorings with two or three classes: no force.
    Graph p = path_graph(3);
    const VertexId w = p.add_vertex();
    for (VertexId u = 0; u < 3; ++u)
        p.add_edge(u, w);
    const std::vector<VertexId> path{0, 1, 2};
    const ListAssignment full(4, ColorSet::full(3));
    EXPECT_EQ(type1_force(p, full, 3, path, w).status, ForceStatus::not_applicable);

    // C4 has two 2-colorings but a single partition, so a vertex seeing all of it is forced.
    Graph c = cycle_graph(4);
    const VertexId x = c.add_vertex();
    for (VertexId u = 0; u < 4; ++u)
        c.add_edge(u, x);
    ListAssignment lists(5, ColorSet{1, 2});
    lists[x] = ColorSet::full(3);
    const std::vector<VertexId> cycle{0, 1, 2, 3};
    const auto forced = type1_force(c, lists, 3, cycle, x);
    EXPECT_EQ(forced.status, ForceStatus::applied);
    EXPECT_EQ(forced.list, ColorSet{3});
}

TEST(Rules, TypeTwoForcingOnFourCycle)
{
    const Graph g = cycle_graph(4);
    const std::vector<VertexId> sub{1, 3};
    const std::vector<VertexId> fixed{0, 2};
    const ListAssignment two{ColorSet{1, 2}, ColorSet{1, 2}, ColorSet{2}, ColorSet{1, 2}};
    const auto forced = type2_force(g, two, 2, sub, fixed);
    EXPECT_EQ(forced.status, ForceStatus::applied);
    EXPECT_EQ(forced.list, ColorSet{2});
    // With three colors the opposite corners can differ.
    const ListAssignment three(4, ColorSet::full(3));
    EXPECT_EQ(type2_force(g, three, 3, sub, fixed).status, ForceStatus::not_applicable);
}

TEST(Rules, OracleRulesSatisfyLocalRuleAxioms)
{
    const auto t1 = type1_rule("edge-forces-apex", marked_clique({"a", "b", "c"}), "c");
    EXPECT_TRUE(validate_rule(t1, 3).passed());
    const auto t2 = type2_rule("twin", amalgam(marked_clique({"u", "x", "y"}), marked_clique({"v", "x", "y"})), "u", "v");
    EXPECT_TRUE(validate_rule(t2, 3).passed());
}

TEST(Rules, NonstructuralGreedy)
{
    const Graph g = path_graph(3);
    const ListAssignment lists{ColorSet{1}, ColorSet{1, 2, 3}, ColorSet{2}};
    EXPECT_EQ(greedy().apply(g, lists, 1), ColorSet{3});
    const ListAssignment blocked{ColorSet{1}, ColorSet{1, 2}, ColorSet{2}};
    EXPECT_EQ(greedy().apply(g, blocked, 1), std::nullopt);
}

TEST(Rules, RuleBasePresets)
{
    const auto rt = rule_base_rt(3);
    EXPECT_TRUE(rt.is_structural());
    EXPECT_EQ(rt.bound, 2);
    EXPECT_EQ(rt.structural.size(), 4U);
    const auto rg = rule_base_rg(3);
    EXPECT_FALSE(rg.is_structural());
    EXPECT_EQ(rg.bound, 1);
    EXPECT_FALSE(preset_rule_base("RT+greedy", 3).is_structural());
    EXPECT_THROW(preset_rule_base("RX", 3), std::invalid_argument);
}

TEST(Rules, MakeRuleBaseInjectsEdgeRuleAndChecksLocality)
{
    const auto rb = make_rule_base({tucker2(3)}, std::nullopt, 3, 2);
    ASSERT_EQ(rb.structural.size(), 2U);
    EXPECT_EQ(rb.structural.front().name, "tucker1(2)");
    EXPECT_THROW(make_rule_base({tucker2(3)}, std::nullopt, 3, 1), std::invalid_argument);
    EXPECT_THROW(make_rule_base({}, std::nullopt, 0, 1), std::invalid_argument);
}

TEST(Rules, SaturateReachesFixpoint)
{
    const auto rb = rule_base_rt(3);
    const Graph host = complete_graph(3);
    ListAssignment lists{ColorSet{1}, ColorSet{2}, ColorSet::full(3)};
    std::vector<std::vector<std::vector<VertexId>>> embeddings;
    for (const auto& rule : rb.structural)
        embeddings.push_back(enumerate_embeddings(host, rule.pattern.graph, {{}, std::pair{rule.target, 2U}, nullptr}));
    int changes = 0;
    saturate(rb.structural, embeddings, host, lists, 3, 2, 12, [&](std::size_t, ColorSet, ColorSet) { ++changes; });
    EXPECT_EQ(lists[2], ColorSet{3});
    EXPECT_GE(changes, 1);
}

}  // namespace
}  // namespace seqcol
