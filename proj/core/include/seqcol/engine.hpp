#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcol/color_set.hpp"
#include "seqcol/graph.hpp"
#include "seqcol/rules.hpp"

namespace seqcol {

struct OrderedListGraph {
    Graph graph;
    Ordering ordering;
    ListAssignment lists;
    int palette = 0;

    /// Throws std::invalid_argument on size mismatches or lists outside the palette.
    void validate() const;
};

enum class SolveStatus {
    colored,    // all lists singletons and proper
    failed,     // some list became empty (mid-round)
    stable,     // a full round changed nothing
    round_cap,  // the caller's round budget ran out
    improper,   // all singletons but an edge is monochromatic
};

auto to_string(SolveStatus status) -> std::string_view;

struct ListChange {
    VertexId vertex = 0;
    ColorSet before;
    ColorSet after;
    std::string rule;
};

struct SolveResult {
    bool done = false;
    SolveStatus status = SolveStatus::stable;
    int rounds = 0;  // completed full scans
    bool failed_mid_round = false;
    std::optional<VertexId> failed_vertex;
    ListAssignment lists;
    /// One entry per scan, including an aborted one.
    std::vector<std::vector<ListChange>> trace;

    /// The colors of the final singleton lists; nullopt unless done.
    [[nodiscard]] auto coloring(int palette) const -> std::optional<Coloring>;
};

struct SolveOptions {
    std::optional<int> max_rounds;
    bool record_trace = true;
};

struct LocalUpdateOutcome {
    ColorSet list;
    bool done = true;  // false iff the list is empty
    bool col = false;  // true iff the list is a singleton
};

/// OLG-R-Col for a fixed graph, ordering and rule base. Rule embeddings inside
/// each d-ball are computed once at construction, so repeated solves from
/// different lists are cheap. Instances are immutable and safe to share.
class SequentialColorer {
public:
    SequentialColorer(Graph graph, Ordering ordering, RuleBase rules);

    [[nodiscard]] auto solve(ListAssignment lists, const SolveOptions& options = {}) const -> SolveResult;

    /// Updates lists[v] only. Changes are appended to `changes` when given.
    auto local_update(ListAssignment& lists, VertexId v, std::vector<ListChange>* changes = nullptr) const
        -> LocalUpdateOutcome;

    [[nodiscard]] auto graph() const -> const Graph& { return graph_; }
    [[nodiscard]] auto ordering() const -> const Ordering& { return ordering_; }
    [[nodiscard]] auto rule_base() const -> const RuleBase& { return rules_; }
    [[nodiscard]] auto palette() const -> int { return rules_.palette; }

private:
    Graph graph_;
    Ordering ordering_;
    RuleBase rules_;
    std::vector<VertexId> sequence_;
    // embeddings_[v][r] = embeddings of rule r with its target on v.
    std::vector<std::vector<std::vector<std::vector<VertexId>>>> embeddings_;
};

auto solve(const OrderedListGraph& start, const RuleBase& rb, const SolveOptions& options = {}) -> SolveResult;
auto local_update(const OrderedListGraph& state, VertexId v, const RuleBase& rb) -> LocalUpdateOutcome;

/// True iff the run ends colored with rounds < r (r = nullopt means no bound).
auto is_solvable(const OrderedListGraph& start, const RuleBase& rb, std::optional<int> r = std::nullopt) -> bool;

/// L_v = {γ(v)} on A, the full palette elsewhere. Throws std::invalid_argument if A is not within V.
auto lists_from_defining_set(const Graph& g, const Coloring& gamma, std::span<const VertexId> a) -> ListAssignment;

/// max(1, ‖L‖ - |V|): the round budget that suffices for any run from `lists`.
auto round_bound(const ListAssignment& lists) -> int;

struct ClosureResult {
    std::vector<VertexId> vertices;  // decided at stop, increasing id
    OrderedColoredGraph subgraph;
    SolveResult run;
};

/// CC^k(A): runs at most k rounds from L^{A,γ} and keeps the decided vertices.
/// k = nullopt runs to the round bound.
auto coloring_closure(const SequentialColorer& colorer, const Coloring& gamma, std::span<const VertexId> a,
                      std::optional<int> k) -> ClosureResult;
auto coloring_closure(std::span<const VertexId> a, const OrderedColoredGraph& g, const RuleBase& rb,
                      std::optional<int> k) -> ClosureResult;

/// Process-wide counters for the round bound and the solution-preservation audit.
struct EngineStats {
    std::uint64_t bound_checked = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t audited_firings = 0;
    std::uint64_t audit_violations = 0;
};

auto engine_stats() -> EngineStats;
void reset_engine_stats();

/// When on, every structural firing on a graph with at most `max_vertices`
/// vertices is checked to keep the solution set of the whole instance.
/// Also switched on by SEQCOL_AUDIT=1.
void set_audit(bool enabled, std::size_t max_vertices = 12);
auto audit_enabled() -> bool;

}  // namespace seqcol
