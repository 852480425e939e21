#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqcol/engine.hpp"

namespace seqcol {

struct SdsWitness {
    std::vector<VertexId> set;  // listed by increasing rank
    int rounds = 0;

    [[nodiscard]] auto index() const -> int { return static_cast<int>(set.size()) + rounds - 1; }
    friend auto operator==(const SdsWitness&, const SdsWitness&) -> bool = default;
};

enum class SdsMode { weak, strong };
enum class SearchStatus { found, no_sds, exceeded_budget };

auto to_string(SdsMode mode) -> std::string_view;
auto to_string(SearchStatus status) -> std::string_view;

struct SearchOptions {
    std::optional<int> k;  // round bound; nullopt = unbounded
    std::optional<std::uint64_t> budget;  // maximum number of candidate sets examined
    unsigned threads = 1;
    bool prune = true;  // must-contain pruning, structural rule bases only
    std::optional<std::size_t> max_size;
};

struct SdsSearchResult {
    SearchStatus status = SearchStatus::no_sds;
    /// The defining number when found; the best upper bound on budget breach.
    std::optional<int> number;
    std::optional<SdsWitness> witness;
    /// Candidates examined in the canonical serial order (independent of threads).
    std::uint64_t nodes_explored = 0;
};

/// A witness iff the run from L^{A,γ} ends colored with γ after at most k rounds.
auto verify_sds(const SequentialColorer& colorer, const Coloring& gamma, std::span<const VertexId> a,
                std::optional<int> k) -> std::optional<SdsWitness>;
auto verify_sds(const OrderedColoredGraph& g, std::span<const VertexId> a, const RuleBase& rb, std::optional<int> k)
    -> std::optional<SdsWitness>;

/// Vertices that lie in every sds: seeding everything else still leaves them undecided.
/// Empty for nonstructural rule bases.
auto must_contain(const SequentialColorer& colorer, const Coloring& gamma, std::optional<int> k)
    -> std::vector<VertexId>;

/// Minimum size, first witness in (size, rank-lexicographic) order.
auto wsdn(const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options = {})
    -> SdsSearchResult;
/// Minimum index; ties go to fewer rounds, then smaller size, then rank-lexicographic order.
auto ssdn(const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options = {})
    -> SdsSearchResult;
auto sdn(SdsMode mode, const SequentialColorer& colorer, const Coloring& gamma, const SearchOptions& options = {})
    -> SdsSearchResult;
auto sdn(SdsMode mode, const OrderedColoredGraph& g, const RuleBase& rb, const SearchOptions& options = {})
    -> SdsSearchResult;

struct ColoringSearchResult {
    SearchStatus status = SearchStatus::no_sds;  // found = yes, no_sds = no
    std::optional<Coloring> coloring;
    std::optional<SdsWitness> witness;
    std::uint64_t colorings_tried = 0;
};

/// COLWDS / COLSDS by brute force: is there a proper coloring whose Wsdn^k (Ssdn^k) is at most xi?
/// For structural rule bases only colorings in canonical color order are tried.
/// `options.budget` bounds the number of candidate sets per coloring.
auto exists_coloring_with_sdn_le(SdsMode mode, const OrderedGraph& g, const RuleBase& rb, int xi,
                                 const SearchOptions& options = {}, std::size_t vertex_cap = 16)
    -> ColoringSearchResult;

}  // namespace seqcol
