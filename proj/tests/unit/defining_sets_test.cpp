#include <gtest/gtest.h>

#include <random>
#include <set>

#include "seqcol/defining_sets.hpp"
#include "seqcol/gadgets.hpp"
#include "test_support.hpp"

namespace seqcol {
namespace {

auto as_set(const std::vector<VertexId>& v) -> std::set<VertexId>
{
    return {v.begin(), v.end()};
}

auto search(SdsMode mode, const GadgetInstance& d, std::optional<int> k, unsigned threads = 1, bool prune = true)
    -> SdsSearchResult
{
    SearchOptions options;
    options.k = k;
    options.threads = threads;
    options.prune = prune;
    return sdn(mode, d.ordered(), rule_base_rt(3), options);
}

/// Smallest sds size by trying every subset, without the library's search.
auto naive_wsdn(const SequentialColorer& colorer, const Coloring& gamma, std::optional<int> k) -> int
{
    const std::size_t n = colorer.graph().order();
    int best = static_cast<int>(n);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) >= best)
            continue;
        std::vector<VertexId> a;
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1U)
                a.push_back(v);
        if (verify_sds(colorer, gamma, a, k))
            best = std::popcount(mask);
    }
    return best;
}

auto naive_ssdn(const SequentialColorer& colorer, const Coloring& gamma, std::optional<int> k) -> int
{
    const std::size_t n = colorer.graph().order();
    int best = static_cast<int>(n);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<VertexId> a;
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1U)
                a.push_back(v);
        if (auto w = verify_sds(colorer, gamma, a, k))
            best = std::min(best, w->index());
    }
    return best;
}

TEST(DefiningSets, VerifyOnTwoRoundGadget)
{
    const auto d = build_D(2);
    const auto uv = d.vertices({"u", "v"});
    const auto two = verify_sds(d.ordered(), uv, rule_base_rt(3), 2);
    ASSERT_TRUE(two.has_value());
    EXPECT_EQ(two->rounds, 2);
    EXPECT_EQ(two->index(), 3);
    EXPECT_FALSE(verify_sds(d.ordered(), uv, rule_base_rt(3), 1).has_value());
    EXPECT_TRUE(verify_sds(d.ordered(), uv, rule_base_rt(3), std::nullopt).has_value());
    const std::vector<VertexId> outside{99};
    EXPECT_THROW(verify_sds(d.ordered(), outside, rule_base_rt(3), 1), std::invalid_argument);
}

TEST(DefiningSets, TwoRoundGadgetNumbers)
{
    const auto d = build_D(2);
    const auto w2 = search(SdsMode::weak, d, 2);
    ASSERT_EQ(w2.status, SearchStatus::found);
    EXPECT_EQ(w2.number, 2);
    EXPECT_EQ(as_set(w2.witness->set), as_set(d.vertices({"u", "v"})));
    EXPECT_EQ(w2.witness->rounds, 2);

    const auto s2 = search(SdsMode::strong, d, 2);
    EXPECT_EQ(s2.number, 3);
    EXPECT_EQ(as_set(s2.witness->set), as_set(d.vertices({"u", "v", "x_1"})));
    EXPECT_EQ(s2.witness->rounds, 1);

    EXPECT_EQ(search(SdsMode::weak, d, 1).number, 3);
    EXPECT_EQ(search(SdsMode::strong, d, 1).number, 3);
}

TEST(DefiningSets, SearchAgreesWithSubsetEnumeration)
{
    std::mt19937 rng(41);
    const auto rb = rule_base_rt(3);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = testing::random_graph(rng, 6, 0.45);
        const auto colors = testing::random_proper_coloring(rng, g, 3);
        if (colors.empty())
            continue;
        const Coloring gamma{colors, 3};
        const SequentialColorer colorer(g, testing::random_ordering(rng, 6), rb);
        for (std::optional<int> k : {std::optional<int>{1}, std::optional<int>{2}, std::optional<int>{}}) {
            SearchOptions options;
            options.k = k;
            EXPECT_EQ(wsdn(colorer, gamma, options).number, naive_wsdn(colorer, gamma, k));
            EXPECT_EQ(ssdn(colorer, gamma, options).number, naive_ssdn(colorer, gamma, k));
        }
    }
}

TEST(DefiningSets, PruningAndThreadsDoNotChangeResults)
{
    const auto g2 = build_G_xi(2, 1);
    for (auto mode : {SdsMode::weak, SdsMode::strong})
        for (int k : {1, 2}) {
            const auto base = search(mode, g2, k, 1, false);
            const auto pruned = search(mode, g2, k, 1, true);
            const auto threaded = search(mode, g2, k, 4, true);
            EXPECT_EQ(base.number, pruned.number);
            EXPECT_EQ(base.witness, pruned.witness);
            EXPECT_EQ(pruned.witness, threaded.witness);
            EXPECT_EQ(pruned.nodes_explored, threaded.nodes_explored);
            EXPECT_LE(pruned.nodes_explored, base.nodes_explored);
        }
}

TEST(DefiningSets, MustContainLiesInEveryWitness)
{
    const auto g2 = build_G_xi(2, 1);
    const SequentialColorer colorer(g2.shape.graph, g2.ordering, rule_base_rt(3));
    const auto forced = must_contain(colorer, g2.coloring, 1);
    // v is forced exactly when seeding everything else leaves it open.
    for (VertexId v = 0; v < g2.shape.graph.order(); ++v) {
        std::vector<VertexId> others;
        for (VertexId w = 0; w < g2.shape.graph.order(); ++w)
            if (w != v)
                others.push_back(w);
        EXPECT_EQ(as_set(forced).contains(v), !verify_sds(colorer, g2.coloring, others, 1).has_value());
    }
    EXPECT_FALSE(forced.empty());
    SearchOptions options;
    options.k = 1;
    const auto witness = wsdn(colorer, g2.coloring, options).witness;
    ASSERT_TRUE(witness.has_value());
    for (VertexId v : forced)
        EXPECT_TRUE(as_set(witness->set).contains(v));

    const SequentialColorer greedy_colorer(g2.shape.graph, g2.ordering, rule_base_rg(3));
    EXPECT_TRUE(must_contain(greedy_colorer, g2.coloring, 1).empty());
}

TEST(DefiningSets, WitnessListedByRank)
{
    const auto d = build_D(3);
    const auto w = search(SdsMode::weak, d, std::nullopt);
    ASSERT_TRUE(w.witness.has_value());
    for (std::size_t i = 1; i < w.witness->set.size(); ++i)
        EXPECT_LT(d.ordering.rank(w.witness->set[i - 1]), d.ordering.rank(w.witness->set[i]));
}

TEST(DefiningSets, BudgetBreachReportsUpperBound)
{
    const auto d = build_D(2);
    SearchOptions options;
    options.k = 2;
    options.budget = 3;
    options.prune = false;
    const auto weak = sdn(SdsMode::weak, d.ordered(), rule_base_rt(3), options);
    EXPECT_EQ(weak.status, SearchStatus::exceeded_budget);
    EXPECT_EQ(weak.nodes_explored, 3U);
    ASSERT_TRUE(weak.number.has_value());
    EXPECT_GE(*weak.number, 2);
    const auto strong = sdn(SdsMode::strong, d.ordered(), rule_base_rt(3), options);
    EXPECT_EQ(strong.status, SearchStatus::exceeded_budget);
    ASSERT_TRUE(strong.witness.has_value());
    EXPECT_EQ(strong.number, strong.witness->index());
}

TEST(DefiningSets, MaxSizeCanRuleOutEverything)
{
    const auto d = build_D(2);
    SearchOptions options;
    options.k = 1;
    options.max_size = 2;
    const auto result = sdn(SdsMode::weak, d.ordered(), rule_base_rt(3), options);
    EXPECT_EQ(result.status, SearchStatus::no_sds);
    EXPECT_FALSE(result.number.has_value());
    EXPECT_EQ(to_string(result.status), "no-sds");
}

TEST(DefiningSets, EdgelessGraphNeedsEveryVertex)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const Graph g = empty_graph(n);
        const Coloring gamma{std::vector<Color>(n, 2), 3};
        const OrderedColoredGraph ocg{g, Ordering::identity(n), gamma};
        SearchOptions options;
        options.k = 1;
        EXPECT_EQ(sdn(SdsMode::strong, ocg, rule_base_rt(3), options).number, static_cast<int>(n));
    }
}

TEST(DefiningSets, RejectsBadInput)
{
    const auto d = build_D(2);
    const SequentialColorer colorer(d.shape.graph, d.ordering, rule_base_rt(3));
    SearchOptions options;
    options.k = 0;
    EXPECT_THROW(wsdn(colorer, d.coloring, options), std::invalid_argument);
    EXPECT_THROW(wsdn(colorer, Coloring{{1, 2}, 3}, {}), std::invalid_argument);
}

TEST(DefiningSets, ColoringSearchOnPath)
{
    const OrderedGraph p3{path_graph(3), Ordering::identity(3)};
    const auto rb = rule_base_rt(3);
    const auto one = exists_coloring_with_sdn_le(SdsMode::weak, p3, rb, 1);
    EXPECT_EQ(one.status, SearchStatus::no_sds);
    EXPECT_GT(one.colorings_tried, 0U);
    const auto two = exists_coloring_with_sdn_le(SdsMode::weak, p3, rb, 2);
    ASSERT_EQ(two.status, SearchStatus::found);
    ASSERT_TRUE(two.coloring.has_value());
    EXPECT_TRUE(two.coloring->is_proper(p3.graph));
    EXPECT_EQ(two.witness->set.size(), 2U);
    EXPECT_EQ(exists_coloring_with_sdn_le(SdsMode::strong, p3, rb, 2).status, SearchStatus::found);
}

}  // namespace
}  // namespace seqcol
