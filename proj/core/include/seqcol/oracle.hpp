#pragma once

// Brute-force ground truth for small instances. Everything here is exponential
// and guarded by a vertex cap; breaching the cap throws CapExceeded.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seqcol/color_set.hpp"
#include "seqcol/graph.hpp"

namespace seqcol::oracle {

inline constexpr std::size_t default_vertex_cap = 14;

/// Vertex cap taken from SEQCOL_ORACLE_CAP when set, else default_vertex_cap.
auto vertex_cap_from_env() -> std::size_t;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ListColoringProblem {
    Graph graph;
    ListAssignment lists;
    int palette = 0;

    /// Throws std::invalid_argument when lists do not match the graph or palette.
    void validate() const;
};

enum class EnumerationStatus { complete, count_overflow };

struct Enumeration {
    std::vector<std::vector<Color>> solutions;
    EnumerationStatus status = EnumerationStatus::complete;
};

/// Calls `visit` on every list coloring (backtracking in vertex-id order) until it returns false.
/// Returns false if stopped early.
auto for_each_solution(const ListColoringProblem& p, const std::function<bool(const std::vector<Color>&)>& visit,
                       std::size_t vertex_cap = default_vertex_cap) -> bool;

/// All solutions, at most `count_cap` of them; status flags truncation.
auto enumerate_solutions(const ListColoringProblem& p, std::size_t count_cap = SIZE_MAX,
                         std::size_t vertex_cap = default_vertex_cap) -> Enumeration;

auto count_solutions(const ListColoringProblem& p, std::size_t vertex_cap = default_vertex_cap) -> std::uint64_t;

/// Canonical color-class partition: colors renamed by first appearance in vertex order.
auto canonical_partition(const std::vector<Color>& coloring) -> std::vector<int>;

/// Solutions exist and all of them induce one partition into color classes.
auto unique_up_to_permutation(const ListColoringProblem& p, std::size_t vertex_cap = default_vertex_cap) -> bool;

/// Uniquely t-colorable: all proper t-colorings share their color classes.
auto is_ucg(const Graph& g, int t, std::size_t vertex_cap = default_vertex_cap) -> bool;

struct ChromaticAndClique {
    int chromatic = 0;
    int clique = 0;
};
auto chromatic_and_clique(const Graph& g, std::size_t vertex_cap = default_vertex_cap) -> ChromaticAndClique;
auto clique_number(const Graph& g) -> int;

/// G plus an anchored K_t, with u joined to anchor i for every color i outside L_u.
struct ListEmbedding {
    Graph graph;
    std::vector<VertexId> anchors;  // anchors[i-1] carries color i
};
auto embed_list_problem(const ListColoringProblem& p) -> ListEmbedding;

struct TransverseEntry {
    int index = 0;
    std::vector<VertexId> members;
};
using TransverseSystem = std::vector<TransverseEntry>;

/// Checks the transverse-system conditions of F for the (t-1)-chromatic graph g.
auto check_transverse(const Graph& g, const TransverseSystem& system, int t,
                      std::size_t vertex_cap = default_vertex_cap) -> bool;

struct TransverseExtension {
    Graph graph;                     // g plus one new vertex per entry
    std::vector<VertexId> fixed_class;  // the new vertices, in entry order
};

/// Adds v_i joined to W_i for each entry and verifies that the result is t-chromatic
/// with the new vertices forming a fixed color class. Throws std::runtime_error otherwise.
auto build_from_transverse(const Graph& g, const TransverseSystem& system, int t,
                           std::size_t vertex_cap = default_vertex_cap) -> TransverseExtension;

/// In every t-coloring of g, `members` is exactly one color class (and g has a t-coloring).
auto is_fixed_class(const Graph& g, std::span<const VertexId> members, int t,
                    std::size_t vertex_cap = default_vertex_cap) -> bool;

/// The transverse condition (b): cl(G[[W]]) <= t-2 for every entry and cl(G) <= t-1.
auto clique_condition_holds(const Graph& g, const TransverseSystem& system, int t) -> bool;

}  // namespace seqcol::oracle
