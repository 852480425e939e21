#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcol/color_set.hpp"
#include "seqcol/gadgets.hpp"
#include "seqcol/graph.hpp"
#include "seqcol/oracle.hpp"

namespace seqcol {

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The JSON graph document. Vertex i of `graph` is the i-th entry of "vertices";
/// `ids` keeps the external spelling of each id.
struct InstanceDocument {
    Graph graph;
    std::vector<std::string> ids;
    std::optional<Ordering> ordering;
    std::optional<ListAssignment> lists;
    std::optional<Coloring> coloring;
    std::map<std::string, VertexId> marks;
    std::optional<int> palette;
    std::optional<std::string> rulebase;
    std::optional<int> k;
    std::optional<int> xi;
    std::optional<oracle::TransverseSystem> transverse;
    std::vector<std::string> warnings;

    /// A mark label or an external id; throws InputError when neither matches.
    [[nodiscard]] auto resolve(const std::string& token) const -> VertexId;
    /// Marks first, else the external id.
    [[nodiscard]] auto name(VertexId v) const -> std::string;
    [[nodiscard]] auto effective_palette() const -> int;
    /// The stored ordering, or insertion order.
    [[nodiscard]] auto effective_ordering() const -> Ordering;
};

auto parse_instance(const std::string& text) -> InstanceDocument;
auto load_instance(const std::filesystem::path& path) -> InstanceDocument;

/// Stable JSON: fixed key order, vertices in index order, two-space indent.
auto to_json(const InstanceDocument& doc) -> std::string;

auto document_from_gadget(const GadgetInstance& gadget) -> InstanceDocument;

struct DotStyle {
    const Ordering* ordering = nullptr;
    const Coloring* coloring = nullptr;
    const ListAssignment* lists = nullptr;
    std::vector<std::string> names;  // per vertex; ids when empty
};

/// Undirected DOT; colors become fillcolor, ranks and lists go into labels.
auto to_dot(const Graph& g, const DotStyle& style = {}) -> std::string;

}  // namespace seqcol
