#include "seqcol/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "seqcol/oracle.hpp"

namespace seqcol {

namespace {

    std::atomic<std::uint64_t> bound_checked{0};
    std::atomic<std::uint64_t> bound_violations{0};
    std::atomic<std::uint64_t> audited_firings{0};
    std::atomic<std::uint64_t> audit_violations{0};

    auto audit_from_env() -> bool
    {
        const char* raw = std::getenv("SEQCOL_AUDIT");
        return raw != nullptr && std::string_view(raw) == "1";
    }

    std::atomic<bool> audit_on{audit_from_env()};
    std::atomic<std::size_t> audit_limit{12};

    void audit_firing(const Graph& g, const ListAssignment& after, VertexId v, ColorSet before, int palette)
    {
        if (!audit_on.load(std::memory_order_relaxed) || g.order() > audit_limit.load(std::memory_order_relaxed))
            return;
        ListAssignment prior = after;
        prior[v] = before;
        const auto count_before = oracle::count_solutions({g, prior, palette}, g.order());
        const auto count_after = oracle::count_solutions({g, after, palette}, g.order());
        ++audited_firings;
        // The update only shrinks lists, so equal counts mean equal solution sets.
        if (count_before != count_after)
            ++audit_violations;
    }

}  // namespace

auto engine_stats() -> EngineStats
{
    return {bound_checked.load(), bound_violations.load(), audited_firings.load(), audit_violations.load()};
}

void reset_engine_stats()
{
    bound_checked = 0;
    bound_violations = 0;
    audited_firings = 0;
    audit_violations = 0;
}

void set_audit(bool enabled, std::size_t max_vertices)
{
    audit_on = enabled;
    audit_limit = max_vertices;
}

auto audit_enabled() -> bool
{
    return audit_on.load();
}

void OrderedListGraph::validate() const
{
    if (ordering.size() != graph.order())
        throw std::invalid_argument("ordered list graph: ordering size does not match the graph");
    if (lists.size() != graph.order())
        throw std::invalid_argument("ordered list graph: one list per vertex required");
    if (palette < 1 || palette > max_palette)
        throw std::invalid_argument("ordered list graph: palette out of range");
    for (auto l : lists)
        if (!l.within_palette(palette))
            throw std::invalid_argument("ordered list graph: list " + l.to_string() + " exceeds the palette");
}

auto to_string(SolveStatus status) -> std::string_view
{
    switch (status) {
    case SolveStatus::colored:
        return "colored";
    case SolveStatus::failed:
        return "failed";
    case SolveStatus::stable:
        return "stable";
    case SolveStatus::round_cap:
        return "round-cap";
    case SolveStatus::improper:
        return "improper";
    }
    return "?";
}

auto SolveResult::coloring(int palette) const -> std::optional<Coloring>
{
    if (!done)
        return std::nullopt;
    Coloring out{{}, palette};
    for (auto l : lists)
        out.colors.push_back(l.min());
    return out;
}

SequentialColorer::SequentialColorer(Graph graph, Ordering ordering, RuleBase rules) :
    graph_(std::move(graph)), ordering_(std::move(ordering)), rules_(std::move(rules))
{
    if (ordering_.size() != graph_.order())
        throw std::invalid_argument("sequential colorer: ordering size does not match the graph");
    sequence_ = ordering_.sequence();
    embeddings_.resize(graph_.order());
    for (VertexId v = 0; v < graph_.order(); ++v) {
        auto near = ball(graph_, v, static_cast<std::size_t>(rules_.bound));
        std::sort(near.begin(), near.end());
        for (const auto& rule : rules_.structural)
            embeddings_[v].push_back(enumerate_embeddings(
                graph_, rule.pattern.graph, EmbeddingQuery{near, std::pair{rule.target, v}, &ordering_}));
    }
}

auto SequentialColorer::local_update(ListAssignment& lists, VertexId v, std::vector<ListChange>* changes) const
    -> LocalUpdateOutcome
{
    saturate(rules_.structural, embeddings_[v], graph_, lists, rules_.palette, v, 12,
             [&](std::size_t r, ColorSet before, ColorSet after) {
                 audit_firing(graph_, lists, v, before, rules_.palette);
                 if (changes)
                     changes->push_back({v, before, after, rules_.structural[r].name});
             });

    if (rules_.nonstructural && !lists[v].is_singleton() && !lists[v].empty()) {
        auto next = rules_.nonstructural->apply(graph_, lists, v);
        if (next && *next != lists[v]) {
            if (!next->subset_of(lists[v]))
                throw std::logic_error("nonstructural rule grew a list");
            if (changes)
                changes->push_back({v, lists[v], *next, rules_.nonstructural->name});
            lists[v] = *next;
        }
    }
    return {lists[v], !lists[v].empty(), lists[v].is_singleton()};
}

auto SequentialColorer::solve(ListAssignment lists, const SolveOptions& options) const -> SolveResult
{
    if (lists.size() != graph_.order())
        throw std::invalid_argument("solve: one list per vertex required");
    if (options.max_rounds && *options.max_rounds < 1)
        throw std::invalid_argument("solve: round cap must be at least 1");

    const auto initial_size = static_cast<long long>(total_size(lists));
    SolveResult result;
    std::vector<ListChange> changes;

    while (true) {
        changes.clear();
        bool colored = true;
        for (VertexId v : sequence_) {
            auto outcome = local_update(lists, v, &changes);
            if (!outcome.done) {
                result.status = SolveStatus::failed;
                result.failed_mid_round = true;
                result.failed_vertex = v;
                if (options.record_trace)
                    result.trace.push_back(changes);
                result.lists = std::move(lists);
                return result;
            }
            colored = colored && outcome.col;
        }
        ++result.rounds;
        const bool idle = changes.empty();
        if (options.record_trace)
            result.trace.push_back(changes);

        if (colored) {
            result.lists = lists;
            auto coloring = Coloring{{}, rules_.palette};
            for (auto l : lists)
                coloring.colors.push_back(l.min());
            if (!coloring.is_proper(graph_)) {
                result.status = SolveStatus::improper;
                return result;
            }
            result.done = true;
            result.status = SolveStatus::colored;
            const long long bound = std::max(1LL, initial_size - static_cast<long long>(graph_.order()));
            ++bound_checked;
            if (result.rounds > bound)
                ++bound_violations;
            return result;
        }
        if (idle) {
            result.status = SolveStatus::stable;
            break;
        }
        if (options.max_rounds && result.rounds >= *options.max_rounds) {
            result.status = SolveStatus::round_cap;
            break;
        }
    }
    result.lists = std::move(lists);
    return result;
}

auto solve(const OrderedListGraph& start, const RuleBase& rb, const SolveOptions& options) -> SolveResult
{
    start.validate();
    if (start.palette != rb.palette)
        throw std::invalid_argument("solve: palette of the instance and the rule base differ");
    return SequentialColorer(start.graph, start.ordering, rb).solve(start.lists, options);
}

auto local_update(const OrderedListGraph& state, VertexId v, const RuleBase& rb) -> LocalUpdateOutcome
{
    state.validate();
    if (!state.graph.contains(v))
        throw std::invalid_argument("local_update: vertex outside the graph");
    ListAssignment lists = state.lists;
    return SequentialColorer(state.graph, state.ordering, rb).local_update(lists, v);
}

auto is_solvable(const OrderedListGraph& start, const RuleBase& rb, std::optional<int> r) -> bool
{
    if (r && *r <= 1)
        return false;
    SolveOptions options;
    options.record_trace = false;
    if (r)
        options.max_rounds = *r - 1;
    auto result = solve(start, rb, options);
    return result.done && (!r || result.rounds < *r);
}

auto lists_from_defining_set(const Graph& g, const Coloring& gamma, std::span<const VertexId> a) -> ListAssignment
{
    if (gamma.colors.size() != g.order())
        throw std::invalid_argument("defining set lists: coloring does not cover the graph");
    ListAssignment lists(g.order(), ColorSet::full(gamma.palette));
    for (VertexId v : a) {
        if (!g.contains(v))
            throw std::invalid_argument("defining set lists: vertex outside the graph");
        lists[v] = ColorSet::single(gamma.colors[v]);
    }
    return lists;
}

auto round_bound(const ListAssignment& lists) -> int
{
    const auto excess = static_cast<long long>(total_size(lists)) - static_cast<long long>(lists.size());
    return static_cast<int>(std::max(1LL, excess));
}

auto coloring_closure(const SequentialColorer& colorer, const Coloring& gamma, std::span<const VertexId> a,
                      std::optional<int> k) -> ClosureResult
{
    const Graph& g = colorer.graph();
    auto lists = lists_from_defining_set(g, gamma, a);
    SolveOptions options;
    options.max_rounds = k ? *k : round_bound(lists);
    ClosureResult out;
    out.run = colorer.solve(std::move(lists), options);
    for (VertexId v = 0; v < g.order(); ++v)
        if (out.run.lists[v].is_singleton())
            out.vertices.push_back(v);
    out.subgraph.graph = induced_subgraph(g, out.vertices);
    out.subgraph.ordering = colorer.ordering().restrict_to(out.vertices);
    out.subgraph.coloring.palette = gamma.palette;
    for (VertexId v : out.vertices)
        out.subgraph.coloring.colors.push_back(gamma.colors[v]);
    return out;
}

auto coloring_closure(std::span<const VertexId> a, const OrderedColoredGraph& g, const RuleBase& rb,
                      std::optional<int> k) -> ClosureResult
{
    return coloring_closure(SequentialColorer(g.graph, g.ordering, rb), g.coloring, a, k);
}

}  // namespace seqcol
