#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqcol/defining_sets.hpp"
#include "seqcol/graph.hpp"

namespace seqcol {

/// An ordered colored graph in which every vertex carries a label.
struct GadgetInstance {
    MarkedGraph shape;
    Ordering ordering;
    Coloring coloring;
    std::vector<std::string> interface;
    std::map<std::string, int> parameters;

    [[nodiscard]] auto vertex(const std::string& label) const -> VertexId { return shape.vertex(label); }
    [[nodiscard]] auto vertices(const std::vector<std::string>& labels) const -> std::vector<VertexId>;
    [[nodiscard]] auto ordered() const -> OrderedColoredGraph { return {shape.graph, ordering, coloring}; }
};

/// D_k with ordering ϱ and the coloring γ (u=3, v=1, x_i=2). Interface u, v (and z for k = 1).
auto build_D(int k) -> GadgetInstance;
/// ξ copies of D_{k+1} sharing u and v; interior ranks compacted copy by copy.
auto build_G_xi(int xi, int k) -> GadgetInstance;
/// F_k with ordering μ and coloring ψ. Interface u, v, x, y.
auto build_F(int k) -> GadgetInstance;
/// H_n with ordering ω and coloring η. Interface x, y, v.
auto build_H(int n) -> GadgetInstance;

struct ReductionOutput {
    GadgetInstance instance;
    int bound = 0;
    std::optional<std::vector<VertexId>> certificate;
    /// Whether a literal rank formula had to be compacted to a bijection.
    bool ranks_compacted = false;
};

enum class ReductionMode { weak, strong };

/// Edges of g sorted by the ranks of their endpoints (smaller rank first).
auto edge_order(const Graph& g, const Ordering& ordering) -> std::vector<Edge>;

/// Each edge replaced by n (weak) or n+k (strong) copies of D_k. With a proper
/// 3-coloring of g the coloring extends to every copy and A = V(g) is the certificate;
/// otherwise the instance is colored by 1 on base vertices and γ on the copies.
auto reduce_3col(const OrderedGraph& g, int k, ReductionMode mode,
                 const std::optional<Coloring>& base_coloring = std::nullopt) -> ReductionOutput;

/// n+k+2 copies of F_k per edge with new vertices u, v; bound t+k+1, certificate cover + {u,v}.
auto reduce_vertexcover_sds(const OrderedGraph& g, int t, int k,
                            const std::optional<std::vector<VertexId>>& cover = std::nullopt) -> ReductionOutput;

/// One H_n copy per edge (n = |V(g)|) with a new vertex v; bound t+1, certificate cover + {v}.
auto reduce_vertexcover_rulebase(const OrderedGraph& g, int t,
                                 const std::optional<std::vector<VertexId>>& cover = std::nullopt)
    -> ReductionOutput;

/// Label of base vertex w in a reduction instance.
auto base_label(VertexId w) -> std::string;

auto is_vertex_cover(const Graph& g, std::span<const VertexId> cover) -> bool;

}  // namespace seqcol
