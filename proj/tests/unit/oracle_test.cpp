#include <gtest/gtest.h>

#include <random>

#include "seqcol/oracle.hpp"
#include "test_support.hpp"

namespace seqcol::oracle {
namespace {

auto full_problem(const Graph& g, int t) -> ListColoringProblem
{
    return {g, ListAssignment(g.order(), ColorSet::full(t)), t};
}

TEST(Oracle, EnumerationMatchesOdometerOnRandomLists)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = testing::random_graph(rng, 6, 0.4);
        const ListColoringProblem p{g, testing::random_lists(rng, 6, 3), 3};
        auto got = enumerate_solutions(p).solutions;
        std::sort(got.begin(), got.end());
        auto expected = testing::naive_colorings(g, p.lists, 3);
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(got, expected);
        EXPECT_EQ(count_solutions(p), expected.size());
    }
}

TEST(Oracle, CountInvariantUnderVertexReordering)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = testing::random_graph(rng, 7, 0.35);
        const auto lists = testing::random_lists(rng, 7, 3);
        std::vector<VertexId> perm = testing::all_vertices(g);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = induced_subgraph(g, perm);
        ListAssignment permuted;
        for (VertexId v : perm)
            permuted.push_back(lists[v]);
        EXPECT_EQ(count_solutions({g, lists, 3}), count_solutions({h, permuted, 3}));
    }
}

TEST(Oracle, CountCapAndVertexCap)
{
    const auto p = full_problem(empty_graph(4), 3);
    const auto some = enumerate_solutions(p, 5);
    EXPECT_EQ(some.solutions.size(), 5U);
    EXPECT_EQ(some.status, EnumerationStatus::count_overflow);
    EXPECT_EQ(enumerate_solutions(p).status, EnumerationStatus::complete);
    EXPECT_THROW(count_solutions(full_problem(empty_graph(5), 2), 4), CapExceeded);
}

TEST(Oracle, ValidateRejectsMismatchedLists)
{
    ListColoringProblem p{complete_graph(2), {ColorSet{1}}, 2};
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.lists = {ColorSet{1}, ColorSet{3}};
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Oracle, MinimalUcgIsUniquelyThreeColorable)
{
    const Graph g = testing::minimal_ucg();
    EXPECT_EQ(count_solutions(full_problem(g, 3)), 6U);
    EXPECT_TRUE(is_ucg(g, 3));
    EXPECT_EQ(testing::naive_colorings(g, 3).size(), 6U);
    EXPECT_TRUE(testing::naive_is_ucg(g, 3));
}

TEST(Oracle, UcgAgreesWithNaiveCheck)
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = testing::random_graph(rng, 6, 0.55);
        for (int t : {2, 3})
            EXPECT_EQ(is_ucg(g, t), testing::naive_is_ucg(g, t));
    }
}

TEST(Oracle, ChromaticAndCliqueExamples)
{
    const auto kn = chromatic_and_clique(complete_graph(5));
    EXPECT_EQ(kn.chromatic, 5);
    EXPECT_EQ(kn.clique, 5);
    const auto c5 = chromatic_and_clique(cycle_graph(5));
    EXPECT_EQ(c5.chromatic, 3);
    EXPECT_EQ(c5.clique, 2);
    const auto ucg = chromatic_and_clique(testing::minimal_ucg());
    EXPECT_EQ(ucg.chromatic, 3);
    EXPECT_EQ(ucg.clique, 3);
}

TEST(Oracle, ChromaticAndCliqueMatchNaive)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testing::random_graph(rng, 7, 0.5);
        const auto got = chromatic_and_clique(g);
        EXPECT_EQ(got.chromatic, testing::naive_chromatic(g));
        EXPECT_EQ(got.clique, testing::naive_clique(g));
        EXPECT_EQ(clique_number(g), got.clique);
    }
}

TEST(Oracle, CanonicalPartitionRenamesByFirstAppearance)
{
    EXPECT_EQ(canonical_partition({3, 1, 3, 2}), (std::vector<int>{0, 1, 0, 2}));
    EXPECT_EQ(canonical_partition({2, 2, 1}), canonical_partition({1, 1, 3}));
}

TEST(Oracle, UniqueUpToPermutation)
{
    EXPECT_TRUE(unique_up_to_permutation(full_problem(complete_graph(3), 3)));
    EXPECT_FALSE(unique_up_to_permutation(full_problem(path_graph(3), 3)));
    EXPECT_FALSE(unique_up_to_permutation({complete_graph(2), {ColorSet{1}, ColorSet{1}}, 2}));
}

TEST(Oracle, ListEmbeddingPreservesSolutionCount)
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = testing::random_graph(rng, 5, 0.4);
        const ListColoringProblem p{g, testing::random_lists(rng, 5, 3), 3};
        const auto e = embed_list_problem(p);
        ASSERT_EQ(e.anchors.size(), 3U);
        // Each list coloring extends uniquely once the anchors are pinned to their colors.
        ListAssignment lists(e.graph.order(), ColorSet::full(3));
        for (int i = 0; i < 3; ++i)
            lists[e.anchors[static_cast<std::size_t>(i)]] = ColorSet::single(i + 1);
        EXPECT_EQ(count_solutions({e.graph, lists, 3}), count_solutions(p));
    }
}

TEST(Oracle, FixedClassDetection)
{
    const Graph g = testing::minimal_ucg();
    // v1, v4, v7 share a color in the unique 3-coloring.
    const std::vector<VertexId> cls{0, 3, 6};
    EXPECT_TRUE(is_fixed_class(g, cls, 3));
    const std::vector<VertexId> wrong{0, 3};
    EXPECT_FALSE(is_fixed_class(g, wrong, 3));
    const std::vector<VertexId> path_end{0};
    EXPECT_FALSE(is_fixed_class(path_graph(3), path_end, 2));
}

TEST(Oracle, TransverseRoundTripOnMinimalUcg)
{
    const Graph h = testing::minimal_ucg();
    const std::vector<VertexId> cls{0, 3, 6};
    std::vector<VertexId> rest{1, 2, 4, 5, 7};
    const Graph g = induced_subgraph(h, rest);
    TransverseSystem system;
    for (VertexId v : cls) {
        TransverseEntry entry{static_cast<int>(system.size()) + 1, {}};
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (h.has_edge(v, rest[i]))
                entry.members.push_back(static_cast<VertexId>(i));
        system.push_back(entry);
    }
    EXPECT_TRUE(check_transverse(g, system, 3));
    const auto built = build_from_transverse(g, system, 3);
    EXPECT_EQ(built.graph.order(), 8U);
    EXPECT_TRUE(is_fixed_class(built.graph, built.fixed_class, 3));
    EXPECT_FALSE(clique_condition_holds(g, system, 3));
}

TEST(Oracle, TransverseRejectsWeakSystem)
{
    // A single vertex joined to one side of an edge does not force anything.
    const Graph g = complete_graph(2);
    const TransverseSystem system{{1, {0}}};
    EXPECT_FALSE(check_transverse(g, system, 3));
    EXPECT_THROW(build_from_transverse(g, system, 3), std::runtime_error);
}

}  // namespace
}  // namespace seqcol::oracle
