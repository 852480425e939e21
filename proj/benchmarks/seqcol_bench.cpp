#include <benchmark/benchmark.h>

#include "seqcol/defining_sets.hpp"
#include "seqcol/gadgets.hpp"
#include "seqcol/oracle.hpp"

namespace {

using namespace seqcol;

void BM_SolveDk(benchmark::State& state)
{
    const auto d = build_D(static_cast<int>(state.range(0)));
    const SequentialColorer colorer(d.shape.graph, d.ordering, rule_base_rt(3));
    const auto lists = lists_from_defining_set(d.shape.graph, d.coloring, d.vertices({"u", "v"}));
    SolveOptions options;
    options.record_trace = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(colorer.solve(lists, options));
    state.counters["vertices"] = static_cast<double>(d.shape.graph.order());
}
BENCHMARK(BM_SolveDk)->DenseRange(2, 10, 4);

void BM_BuildColorer(benchmark::State& state)
{
    const auto f = build_F(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(SequentialColorer(f.shape.graph, f.ordering, rule_base_rt(3)));
}
BENCHMARK(BM_BuildColorer)->Arg(2)->Arg(6);

void BM_SolveVertexCoverInstance(benchmark::State& state)
{
    const OrderedGraph p3{path_graph(3), Ordering::identity(3)};
    const std::vector<VertexId> cover{1};
    const auto out = reduce_vertexcover_sds(p3, 1, 2, cover);
    const auto& g = out.instance;
    const SequentialColorer colorer(g.shape.graph, g.ordering, rule_base_rt(3));
    const auto lists = lists_from_defining_set(g.shape.graph, g.coloring, *out.certificate);
    SolveOptions options;
    options.record_trace = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(colorer.solve(lists, options));
    state.counters["vertices"] = static_cast<double>(g.shape.graph.order());
}
BENCHMARK(BM_SolveVertexCoverInstance);

void BM_StrongSearchGxi(benchmark::State& state)
{
    const auto g = build_G_xi(2, 1);
    const SequentialColorer colorer(g.shape.graph, g.ordering, rule_base_rt(3));
    SearchOptions options;
    options.k = static_cast<int>(state.range(0));
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(ssdn(colorer, g.coloring, options));
}
BENCHMARK(BM_StrongSearchGxi)->Args({1, 1})->Args({2, 1})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_WeakSearchUnpruned(benchmark::State& state)
{
    const auto g = build_G_xi(2, 1);
    const SequentialColorer colorer(g.shape.graph, g.ordering, rule_base_rt(3));
    SearchOptions options;
    options.k = 1;
    options.prune = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(wsdn(colorer, g.coloring, options));
}
BENCHMARK(BM_WeakSearchUnpruned)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleCount(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const oracle::ListColoringProblem p{cycle_graph(n), ListAssignment(n, ColorSet::full(3)), 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::count_solutions(p));
}
BENCHMARK(BM_OracleCount)->DenseRange(6, 14, 4);

void BM_Embeddings(benchmark::State& state)
{
    const auto f = build_F(4);
    const auto pattern = tucker2(3).pattern.graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_embeddings(f.shape.graph, pattern));
}
BENCHMARK(BM_Embeddings);

}  // namespace

BENCHMARK_MAIN();
