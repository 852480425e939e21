#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqcol/color_set.hpp"
#include "seqcol/graph.hpp"
#include "seqcol/oracle.hpp"

namespace seqcol {

/// How a local rule rewrites the list of its target vertex.
enum class UpdateKind {
    subtract_union,   // |U| == threshold over non-target lists  =>  L_target -= U
    intersect_lists,  // |U| == threshold over all lists         =>  L_target &= L_partner
    greedy_min,       // L_target <- {min(L_target - decided neighbour colors)}
    type1_forcing,    // oracle-certified type-1 forcing by the non-target vertices
    type2_forcing,    // oracle-certified fixed class {target, partner} over the rest
};

auto to_string(UpdateKind kind) -> std::string_view;
auto parse_update_kind(std::string_view text) -> UpdateKind;

/// What a rule sees when it fires: the host, its current lists and the palette.
struct RuleContext {
    const Graph& host;
    const ListAssignment& lists;
    int palette = 0;
    std::size_t oracle_cap = 12;
};

/// A pattern-based list update. Only the image of `target` is ever rewritten.
struct LocalRule {
    std::string name;
    MarkedGraph pattern;
    VertexId target = 0;
    std::optional<VertexId> partner;
    UpdateKind kind = UpdateKind::subtract_union;
    int union_threshold = 0;
    /// Pattern vertex pairs whose host images must be non-adjacent.
    std::vector<Edge> nonadjacent;

    /// New list for the target under `embedding` (indexed by pattern vertex), or
    /// nullopt when the rule does not apply there.
    [[nodiscard]] auto apply(const RuleContext& ctx, std::span<const VertexId> embedding) const
        -> std::optional<ColorSet>;

    /// Throws std::invalid_argument on an inconsistent definition.
    void validate() const;
};

/// Tucker's first rule on K_t[x_1..x_t] with target x_t.
auto tucker1(int t) -> LocalRule;
/// Tucker's second rule on K_t[u,x_1..x_{t-1}] + K_t[v,x_1..x_{t-1}] with target u, partner v.
auto tucker2(int t) -> LocalRule;
/// Greedy update expressed over an explicit pattern; only for soundness experiments.
auto greedy_local_rule(const MarkedGraph& pattern, const std::string& target) -> LocalRule;
/// Oracle-backed type-1 forcing of `target` by the remaining pattern vertices.
auto type1_rule(std::string name, const MarkedGraph& pattern, const std::string& target) -> LocalRule;
/// Oracle-backed type-2 forcing on {target, partner} by the remaining pattern vertices.
auto type2_rule(std::string name, const MarkedGraph& pattern, const std::string& target, const std::string& partner,
                bool require_nonadjacent = true) -> LocalRule;

/// List procedure applied after the structural rules; may break solution preservation.
struct NonstructuralRule {
    std::string name = "greedy";

    /// Greedy: drop colors held by decided neighbours and keep the smallest remaining one.
    /// nullopt when nothing remains (the engine reports the failure).
    [[nodiscard]] auto apply(const Graph& host, const ListAssignment& lists, VertexId v) const
        -> std::optional<ColorSet>;
};

auto greedy() -> NonstructuralRule;

struct RuleBase {
    std::vector<LocalRule> structural;
    std::optional<NonstructuralRule> nonstructural;
    int palette = 0;
    int bound = 0;

    [[nodiscard]] auto is_structural() const -> bool { return !nonstructural.has_value(); }
};

/// Validates d-boundedness and injects tucker1(2) when no rule behaves like it.
auto make_rule_base(std::vector<LocalRule> structural, std::optional<NonstructuralRule> nonstructural, int palette,
                    int bound) -> RuleBase;

/// {tucker1(2..t), tucker2(2..t)}, d = 2.
auto rule_base_rt(int palette) -> RuleBase;
/// {tucker1(2)} plus greedy, d = 1.
auto rule_base_rg(int palette) -> RuleBase;
/// The Tucker rules plus greedy, d = 2.
auto rule_base_rt_greedy(int palette) -> RuleBase;
/// "RT", "RG" or "RT+greedy"; throws std::invalid_argument otherwise.
auto preset_rule_base(std::string_view name, int palette) -> RuleBase;

enum class ForceStatus { applied, not_applicable, undecided };

struct ForceOutcome {
    ForceStatus status = ForceStatus::not_applicable;
    ColorSet list;  // meaningful when applied
};

/// Type-1 forcing on `v` by the vertex set `sub`: when the list problem on G[[sub]] is
/// uniquely solvable up to permutation with |A| classes and N(v) meets every class,
/// the result is L_v - A. Undecided when |sub| exceeds `cap`.
auto type1_force(const Graph& g, const ListAssignment& lists, int palette, std::span<const VertexId> sub,
                 VertexId v, std::size_t cap = 12) -> ForceOutcome;
auto type1_force(const oracle::ListColoringProblem& p, std::span<const VertexId> sub, VertexId v,
                 std::size_t cap = 12) -> ForceOutcome;

/// Type-2 forcing: when `fixed` is one color class in every list coloring of
/// G[[sub + fixed]], each of its lists becomes the intersection (returned in `list`).
auto type2_force(const Graph& g, const ListAssignment& lists, int palette, std::span<const VertexId> sub,
                 std::span<const VertexId> fixed, std::size_t cap = 12) -> ForceOutcome;
auto type2_force(const oracle::ListColoringProblem& p, std::span<const VertexId> sub,
                 std::span<const VertexId> fixed, std::size_t cap = 12) -> ForceOutcome;

/// Runs `rules` at vertex v over the given embeddings (one vector per rule) until
/// v's list stops changing. `on_change` sees (rule index, before, after).
template <typename OnChange>
auto saturate(const std::vector<LocalRule>& rules, const std::vector<std::vector<std::vector<VertexId>>>& embeddings,
              const Graph& host, ListAssignment& lists, int palette, VertexId v, std::size_t oracle_cap,
              OnChange&& on_change) -> void;

struct RuleValidationReport {
    bool skipped = false;  // pattern larger than the sample bound
    std::size_t assignments = 0;
    std::size_t monotone_pairs = 0;
    std::size_t shrink_violations = 0;
    std::size_t solution_violations = 0;
    std::size_t monotonicity_violations = 0;
    std::vector<std::string> examples;  // first few violations, human readable

    [[nodiscard]] auto passed() const -> bool
    {
        return !skipped && shrink_violations == 0 && solution_violations == 0 && monotonicity_violations == 0;
    }
};

/// Exhaustively checks shrink-only, solution preservation and monotonicity of `rule`
/// on its own pattern over every assignment of nonempty lists from {1..palette}.
/// Monotonicity is checked over pairs L1 <= L2 where (pattern, L1) is solvable.
auto validate_rule(const LocalRule& rule, int palette, std::size_t sample_bound = 6) -> RuleValidationReport;

// ---------------------------------------------------------------------------

template <typename OnChange>
auto saturate(const std::vector<LocalRule>& rules, const std::vector<std::vector<std::vector<VertexId>>>& embeddings,
              const Graph& host, ListAssignment& lists, int palette, VertexId v, std::size_t oracle_cap,
              OnChange&& on_change) -> void
{
    RuleContext ctx{host, lists, palette, oracle_cap};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            for (const auto& embedding : embeddings[r]) {
                auto next = rules[r].apply(ctx, embedding);
                if (!next || *next == lists[v])
                    continue;
                if (!next->subset_of(lists[v]))
                    throw std::logic_error("rule " + rules[r].name + " grew the list of vertex " + std::to_string(v));
                const ColorSet before = lists[v];
                lists[v] = *next;
                on_change(r, before, *next);
                changed = true;
                if (lists[v].empty())
                    return;
            }
        }
    }
}

}  // namespace seqcol
