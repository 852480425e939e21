#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace seqcol {

using VertexId = std::uint32_t;
using Color = int;
using Edge = std::pair<VertexId, VertexId>;

/// Finite simple undirected graph on the dense vertex range [0, order()).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    auto add_vertex() -> VertexId;

    /// Inserts uv. Returns false when the edge is already present.
    /// Throws std::invalid_argument for loops or unknown endpoints.
    auto add_edge(VertexId u, VertexId v) -> bool;

    [[nodiscard]] auto has_edge(VertexId u, VertexId v) const -> bool;
    [[nodiscard]] auto neighbors(VertexId v) const -> std::span<const VertexId>;
    [[nodiscard]] auto degree(VertexId v) const -> std::size_t { return adjacency_.at(v).size(); }
    [[nodiscard]] auto order() const -> std::size_t { return adjacency_.size(); }
    [[nodiscard]] auto size() const -> std::size_t { return edge_count_; }
    [[nodiscard]] auto contains(VertexId v) const -> bool { return v < adjacency_.size(); }

    /// Edges with u < v, sorted.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    friend auto operator==(const Graph&, const Graph&) -> bool = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

auto complete_graph(std::size_t n) -> Graph;
auto empty_graph(std::size_t n) -> Graph;
auto cycle_graph(std::size_t n) -> Graph;
auto path_graph(std::size_t n) -> Graph;

/// Induced subgraph on `subset`; vertex i of the result is subset[i].
/// Throws std::invalid_argument if `subset` is not a set of vertices of g.
auto induced_subgraph(const Graph& g, std::span<const VertexId> subset) -> Graph;

/// Vertices at distance at most `radius` from v, in BFS discovery order.
auto ball(const Graph& g, VertexId v, std::size_t radius) -> std::vector<VertexId>;

/// Eccentricity-based diameter; nullopt when g is disconnected.
auto diameter(const Graph& g) -> std::optional<std::size_t>;

/// A graph whose vertices carry unique string labels (not every vertex needs one).
struct MarkedGraph {
    Graph graph;
    std::map<std::string, VertexId> marks;

    /// Throws std::invalid_argument unless marks is injective into V(graph).
    void validate() const;
    [[nodiscard]] auto vertex(const std::string& label) const -> VertexId;
    [[nodiscard]] auto has_label(const std::string& label) const -> bool { return marks.contains(label); }
    /// Label per vertex ("" for unmarked vertices).
    [[nodiscard]] auto labels() const -> std::vector<std::string>;
};

/// K_n marked by `labels`, vertex i carrying labels[i].
auto marked_clique(const std::vector<std::string>& labels) -> MarkedGraph;
/// Single edge marked [a, b].
auto marked_edge(const std::string& a, const std::string& b) -> MarkedGraph;

/// Disjoint union followed by identification of equally-labeled vertices.
/// Vertices of `left` keep their ids; unshared vertices of `right` are appended in id order.
auto amalgam(const MarkedGraph& left, const MarkedGraph& right) -> MarkedGraph;

/// Left fold of amalgam over `parts`; the empty sum is the empty graph.
auto amalgam_all(std::span<const MarkedGraph> parts) -> MarkedGraph;

/// Renames labels via `renaming`; labels missing from the map are left alone.
auto relabel(const MarkedGraph& g, const std::map<std::string, std::string>& renaming) -> MarkedGraph;

/// Bijective rank assignment V -> {1..n}.
class Ordering {
public:
    Ordering() = default;
    /// Throws std::invalid_argument unless ranks is a permutation of 1..n.
    explicit Ordering(std::vector<std::uint32_t> ranks);

    static auto identity(std::size_t n) -> Ordering;
    /// Ranks induced by sorting vertices on `keys` (ties by vertex id).
    static auto from_keys(std::span<const long long> keys) -> Ordering;

    [[nodiscard]] auto rank(VertexId v) const -> std::uint32_t { return ranks_.at(v); }
    [[nodiscard]] auto size() const -> std::size_t { return ranks_.size(); }
    [[nodiscard]] auto ranks() const -> const std::vector<std::uint32_t>& { return ranks_; }
    /// Vertices listed by increasing rank.
    [[nodiscard]] auto sequence() const -> std::vector<VertexId>;
    /// Restriction to `subset`, ranks compacted preserving relative order.
    [[nodiscard]] auto restrict_to(std::span<const VertexId> subset) const -> Ordering;

    friend auto operator==(const Ordering&, const Ordering&) -> bool = default;

private:
    std::vector<std::uint32_t> ranks_;
};

/// Total map V -> {1..palette}.
struct Coloring {
    std::vector<Color> colors;
    int palette = 0;

    [[nodiscard]] auto is_proper(const Graph& g) const -> bool;
    [[nodiscard]] auto in_range() const -> bool;
    /// Edges whose endpoints share a color.
    [[nodiscard]] auto conflicts(const Graph& g) const -> std::vector<Edge>;

    friend auto operator==(const Coloring&, const Coloring&) -> bool = default;
};

struct OrderedGraph {
    Graph graph;
    Ordering ordering;
};

struct OrderedColoredGraph {
    Graph graph;
    Ordering ordering;
    Coloring coloring;
};

/// Options for enumerate_embeddings.
struct EmbeddingQuery {
    /// Host vertices the image must lie in; empty span means all of V(host).
    std::span<const VertexId> restricted_to;
    /// Forces pattern vertex `first` onto host vertex `second`.
    std::optional<std::pair<VertexId, VertexId>> pin;
    /// Host ranks used for canonical ordering; identity when null.
    const Ordering* ordering = nullptr;
};

/// Every injective edge-preserving map V(pattern) -> V(host) (non-induced), as
/// vectors indexed by pattern vertex, sorted lexicographically by the host ranks
/// of the images taken in pattern-vertex order.
auto enumerate_embeddings(const Graph& host, const Graph& pattern, const EmbeddingQuery& query = {})
    -> std::vector<std::vector<VertexId>>;

}  // namespace seqcol
