#include "seqcol/defining_sets.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "seqcol/oracle.hpp"

namespace seqcol {

auto to_string(SdsMode mode) -> std::string_view
{
    return mode == SdsMode::weak ? "weak" : "strong";
}

auto to_string(SearchStatus status) -> std::string_view
{
    switch (status) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::no_sds:
        return "no-sds";
    case SearchStatus::exceeded_budget:
        return "exceeded-budget";
    }
    return "?";
}

namespace {

    auto run_capped(const SequentialColorer& colorer, const Coloring& gamma, std::span<const VertexId> a,
                    std::optional<int> cap) -> std::optional<SdsWitness>
    {
        SolveOptions options;
        options.record_trace = false;
        options.max_rounds = cap;
        auto result = colorer.solve(lists_from_defining_set(colorer.graph(), gamma, a), options);
        if (!result.done || (cap && result.rounds > *cap))
            return std::nullopt;
        for (VertexId v = 0; v < gamma.colors.size(); ++v)
            if (result.lists[v] != ColorSet::single(gamma.colors[v]))
                return std::nullopt;
        std::vector<VertexId> set(a.begin(), a.end());
        const auto& ordering = colorer.ordering();
        std::sort(set.begin(), set.end(),
                  [&](VertexId x, VertexId y) { return ordering.rank(x) < ordering.rank(y); });
        return SdsWitness{std::move(set), result.rounds};
    }

    void check_gamma(const SequentialColorer& colorer, const Coloring& gamma)
    {
        if (gamma.colors.size() != colorer.graph().order() || gamma.palette != colorer.palette())
            throw std::invalid_argument("sds: coloring does not match the instance");
        if (!gamma.in_range() || !gamma.is_proper(colorer.graph()))
            throw std::invalid_argument("sds: the target coloring must be proper");
    }

    /// Size-s subsets of the non-forced vertices, in rank-lexicographic order, each
    /// joined with the forced vertices.
    class Candidates {
    public:
        Candidates(const SequentialColorer& colorer, std::vector<VertexId> forced) : forced_(std::move(forced))
        {
            for (VertexId v : colorer.ordering().sequence())
                if (std::find(forced_.begin(), forced_.end(), v) == forced_.end())
                    free_.push_back(v);
        }

        [[nodiscard]] auto forced() const -> std::size_t { return forced_.size(); }
        [[nodiscard]] auto available() const -> std::size_t { return free_.size(); }

        void start(std::size_t free_size)
        {
            index_.resize(free_size);
            for (std::size_t i = 0; i < free_size; ++i)
                index_[i] = i;
            live_ = free_size <= free_.size();
        }

        /// Fills `out` with up to `limit` candidate sets; returns false when exhausted.
        auto next_batch(std::vector<std::vector<VertexId>>& out, std::size_t limit) -> bool
        {
            out.clear();
            while (live_ && out.size() < limit) {
                std::vector<VertexId> set = forced_;
                for (std::size_t i : index_)
                    set.push_back(free_[i]);
                out.push_back(std::move(set));
                advance();
            }
            return !out.empty();
        }

    private:
        void advance()
        {
            const std::size_t s = index_.size();
            const std::size_t n = free_.size();
            std::size_t i = s;
            while (i > 0 && index_[i - 1] == n - s + i - 1)
                --i;
            if (i == 0) {
                live_ = false;
                return;
            }
            ++index_[i - 1];
            for (std::size_t j = i; j < s; ++j)
                index_[j] = index_[j - 1] + 1;
        }

        std::vector<VertexId> forced_;
        std::vector<VertexId> free_;
        std::vector<std::size_t> index_;
        bool live_ = false;
    };

    template <typename Eval>
    void evaluate_batch(const std::vector<std::vector<VertexId>>& batch,
                        std::vector<std::optional<SdsWitness>>& results, unsigned threads, Eval&& eval)
    {
        results.assign(batch.size(), std::nullopt);
        if (threads <= 1 || batch.size() < 2) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                results[i] = eval(batch[i]);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < batch.size(); i = next++)
                    results[i] = eval(batch[i]);
            });
        for (auto& th : pool)
            th.join();
    }

    constexpr std::size_t batch_size = 256;

    auto full_witness(const SequentialColorer& colorer, const Coloring& gamma, std::optional<int> k)
        -> std::optional<SdsWitness>
    {
        auto all = colorer.ordering().sequence();
        return run_capped(colorer, gamma, all, k);
    }

    auto prepare(const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options)
        -> Candidates
    {
        check_gamma(colorer, gamma);
        if (options.k && *options.k < 1)
            throw std::invalid_argument("sds: k must be at least 1");
        std::vector<VertexId> forced;
        if (options.prune)
            forced = must_contain(colorer, gamma, options.k);
        return Candidates(colorer, std::move(forced));
    }

    auto size_limit(const Candidates& c, const SearchOptions& options) -> std::size_t
    {
        std::size_t limit = c.forced() + c.available();
        if (options.max_size)
            limit = std::min(limit, *options.max_size);
        return limit;
    }

    auto budget_breach(SdsMode mode, const SequentialColorer& colorer, const Coloring& gamma,
                       const SearchOptions& options, std::optional<SdsWitness> best, std::uint64_t nodes)
        -> SdsSearchResult
    {
        if (!best)
            best = full_witness(colorer, gamma, options.k);
        SdsSearchResult out;
        out.status = SearchStatus::exceeded_budget;
        out.nodes_explored = nodes;
        if (best) {
            out.number = mode == SdsMode::weak ? static_cast<int>(best->set.size()) : best->index();
            out.witness = best;
        }
        return out;
    }

}  // namespace

auto verify_sds(const SequentialColorer& colorer, const Coloring& gamma, std::span<const VertexId> a,
                std::optional<int> k) -> std::optional<SdsWitness>
{
    check_gamma(colorer, gamma);
    for (VertexId v : a)
        if (!colorer.graph().contains(v))
            throw std::invalid_argument("verify_sds: vertex outside the graph");
    return run_capped(colorer, gamma, a, k);
}

auto verify_sds(const OrderedColoredGraph& g, std::span<const VertexId> a, const RuleBase& rb, std::optional<int> k)
    -> std::optional<SdsWitness>
{
    return verify_sds(SequentialColorer(g.graph, g.ordering, rb), g.coloring, a, k);
}

auto must_contain(const SequentialColorer& colorer, const Coloring& gamma, std::optional<int> k)
    -> std::vector<VertexId>
{
    std::vector<VertexId> forced;
    if (!colorer.rule_base().is_structural())
        return forced;
    const Graph& g = colorer.graph();
    for (VertexId v : colorer.ordering().sequence()) {
        std::vector<VertexId> others;
        for (VertexId w = 0; w < g.order(); ++w)
            if (w != v)
                others.push_back(w);
        SolveOptions options;
        options.record_trace = false;
        options.max_rounds = k;
        auto result = colorer.solve(lists_from_defining_set(g, gamma, others), options);
        if (result.status == SolveStatus::failed)
            continue;
        if (!result.lists[v].is_singleton())
            forced.push_back(v);
    }
    return forced;
}

auto wsdn(const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options) -> SdsSearchResult
{
    auto candidates = prepare(colorer, gamma, options);
    const std::size_t limit = size_limit(candidates, options);
    SdsSearchResult out;
    std::vector<std::vector<VertexId>> batch;
    std::vector<std::optional<SdsWitness>> results;

    for (std::size_t s = candidates.forced(); s <= limit; ++s) {
        candidates.start(s - candidates.forced());
        while (candidates.next_batch(batch, batch_size)) {
            evaluate_batch(batch, results, options.threads,
                           [&](const std::vector<VertexId>& a) { return run_capped(colorer, gamma, a, options.k); });
            for (std::size_t i = 0; i < batch.size(); ++i) {
                if (options.budget && out.nodes_explored >= *options.budget)
                    return budget_breach(SdsMode::weak, colorer, gamma, options, std::nullopt, out.nodes_explored);
                ++out.nodes_explored;
                if (results[i]) {
                    out.status = SearchStatus::found;
                    out.number = static_cast<int>(s);
                    out.witness = results[i];
                    return out;
                }
            }
        }
    }
    out.status = SearchStatus::no_sds;
    return out;
}

auto ssdn(const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options) -> SdsSearchResult
{
    auto candidates = prepare(colorer, gamma, options);
    const std::size_t limit = size_limit(candidates, options);
    SdsSearchResult out;
    std::optional<SdsWitness> best;
    std::vector<std::vector<VertexId>> batch;
    std::vector<std::optional<SdsWitness>> results;

    auto better = [](const SdsWitness& a, const SdsWitness& b) {
        if (a.index() != b.index())
            return a.index() < b.index();
        return a.rounds < b.rounds;
    };

    for (std::size_t s = candidates.forced(); s <= limit; ++s) {
        if (best && static_cast<int>(s) > best->index())
            break;
        // A size-s set beats or ties the incumbent only with rounds <= best - s + 1.
        std::optional<int> cap = options.k;
        if (best) {
            const int room = best->index() - static_cast<int>(s) + 1;
            cap = cap ? std::min(*cap, room) : room;
        }
        candidates.start(s - candidates.forced());
        bool size_done = false;
        while (!size_done && candidates.next_batch(batch, batch_size)) {
            evaluate_batch(batch, results, options.threads,
                           [&](const std::vector<VertexId>& a) { return run_capped(colorer, gamma, a, cap); });
            for (std::size_t i = 0; i < batch.size(); ++i) {
                if (options.budget && out.nodes_explored >= *options.budget)
                    return budget_breach(SdsMode::strong, colorer, gamma, options, best, out.nodes_explored);
                ++out.nodes_explored;
                if (results[i] && (!best || better(*results[i], *best))) {
                    best = results[i];
                    if (best->rounds == 1) {
                        size_done = true;
                        break;
                    }
                }
            }
        }
    }
    if (!best)
        return out;
    out.status = SearchStatus::found;
    out.number = best->index();
    out.witness = best;
    return out;
}

auto sdn(SdsMode mode, const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options)
    -> SdsSearchResult
{
    return mode == SdsMode::weak ? wsdn(colorer, gamma, options) : ssdn(colorer, gamma, options);
}

auto sdn(SdsMode mode, const OrderedColoredGraph& g, const RuleBase& rb, const SearchOptions& options)
    -> SdsSearchResult
{
    return sdn(mode, SequentialColorer(g.graph, g.ordering, rb), g.coloring, options);
}

auto exists_coloring_with_sdn_le(SdsMode mode, const OrderedGraph& g, const RuleBase& rb, int xi,
                                 const SearchOptions& options, std::size_t vertex_cap) -> ColoringSearchResult
{
    SequentialColorer colorer(g.graph, g.ordering, rb);
    const bool canonical_only = rb.is_structural();
    ColoringSearchResult out;
    SearchOptions capped = options;
    const auto cap_size = static_cast<std::size_t>(std::max(xi, 0));
    capped.max_size = capped.max_size ? std::min(*capped.max_size, cap_size) : cap_size;

    oracle::ListColoringProblem problem{g.graph, ListAssignment(g.graph.order(), ColorSet::full(rb.palette)),
                                        rb.palette};
    bool breached = false;
    oracle::for_each_solution(
        problem,
        [&](const std::vector<Color>& colors) {
            if (canonical_only) {
                // Colors must appear first in increasing order.
                Color next = 1;
                for (Color c : colors) {
                    if (c > next)
                        return true;
                    if (c == next)
                        ++next;
                }
            }
            ++out.colorings_tried;
            Coloring gamma{colors, rb.palette};
            auto result = sdn(mode, colorer, gamma, capped);
            if (result.status == SearchStatus::exceeded_budget)
                breached = true;
            if (result.status == SearchStatus::found && result.number && *result.number <= xi) {
                out.status = SearchStatus::found;
                out.coloring = gamma;
                out.witness = result.witness;
                return false;
            }
            return true;
        },
        vertex_cap);
    if (out.status != SearchStatus::found && breached)
        out.status = SearchStatus::exceeded_budget;
    return out;
}

}  // namespace seqcol
