#include "seqcol/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace seqcol {

using Json = nlohmann::ordered_json;

auto InstanceDocument::resolve(const std::string& token) const -> VertexId
{
    if (auto it = marks.find(token); it != marks.end())
        return it->second;
    for (VertexId v = 0; v < ids.size(); ++v)
        if (ids[v] == token)
            return v;
    throw InputError("unknown vertex '" + token + "'");
}

auto InstanceDocument::name(VertexId v) const -> std::string
{
    for (const auto& [label, w] : marks)
        if (w == v)
            return label;
    return ids.at(v);
}

auto InstanceDocument::effective_palette() const -> int
{
    if (palette)
        return *palette;
    if (coloring)
        return coloring->palette;
    return 3;
}

auto InstanceDocument::effective_ordering() const -> Ordering
{
    return ordering ? *ordering : Ordering::identity(graph.order());
}

namespace {

    auto id_text(const Json& value) -> std::string
    {
        if (value.is_string())
            return value.get<std::string>();
        if (value.is_number_integer())
            return std::to_string(value.get<long long>());
        throw InputError("vertex ids must be integers or strings");
    }

    auto int_field(const Json& value, const char* what) -> int
    {
        if (!value.is_number_integer())
            throw InputError(std::string(what) + " must be an integer");
        return value.get<int>();
    }

    auto color_field(const Json& value, int palette) -> Color
    {
        const int c = int_field(value, "color");
        if (c < 1 || c > palette)
            throw InputError("color " + std::to_string(c) + " outside the palette 1.." + std::to_string(palette));
        return c;
    }

    auto by_id(const InstanceDocument& doc, const std::string& id) -> VertexId
    {
        auto it = std::find(doc.ids.begin(), doc.ids.end(), id);
        if (it == doc.ids.end())
            throw InputError("unknown vertex id '" + id + "'");
        return static_cast<VertexId>(it - doc.ids.begin());
    }

    template <typename F>
    void for_each_vertex_entry(const InstanceDocument& doc, const Json& object, const char* what, F&& f)
    {
        if (!object.is_object())
            throw InputError(std::string(what) + " must be an object keyed by vertex id");
        for (const auto& [key, value] : object.items())
            f(by_id(doc, key), value);
    }

    auto is_id(const Json& value) -> bool
    {
        return value.is_string() || value.is_number_integer();
    }

}  // namespace

auto parse_instance(const std::string& text) -> InstanceDocument
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw InputError("instance document must be a JSON object");
    static const std::set<std::string> known{"vertices", "edges",    "ordering", "lists", "coloring",  "marks",
                                             "palette",  "rulebase", "k",        "xi",    "transverse"};
    InstanceDocument doc;
    for (const auto& [key, value] : root.items())
        if (!known.contains(key))
            doc.warnings.push_back("ignoring unknown field '" + key + "'");

    if (!root.contains("vertices") || !root["vertices"].is_array())
        throw InputError("field 'vertices' (array) is required");
    for (const auto& v : root["vertices"]) {
        auto id = id_text(v);
        if (std::find(doc.ids.begin(), doc.ids.end(), id) != doc.ids.end())
            throw InputError("duplicate vertex id '" + id + "'");
        doc.ids.push_back(std::move(id));
    }
    doc.graph = Graph(doc.ids.size());

    if (root.contains("marks")) {
        if (!root["marks"].is_object())
            throw InputError("'marks' must be an object label -> vertex id");
        for (const auto& [label, value] : root["marks"].items()) {
            if (!is_id(value))
                throw InputError("mark '" + label + "' must name a vertex id");
            doc.marks[label] = by_id(doc, id_text(value));
        }
        try {
            MarkedGraph{doc.graph, doc.marks}.validate();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }

    if (root.contains("edges")) {
        if (!root["edges"].is_array())
            throw InputError("'edges' must be an array of pairs");
        for (const auto& e : root["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("every edge must be a pair of vertex ids");
            const VertexId a = by_id(doc, id_text(e[0]));
            const VertexId b = by_id(doc, id_text(e[1]));
            if (a == b)
                throw InputError("self-loop on vertex '" + doc.ids[a] + "'");
            if (!doc.graph.add_edge(a, b))
                throw InputError("duplicate edge " + doc.ids[a] + "-" + doc.ids[b]);
        }
    }

    if (root.contains("palette")) {
        const int t = int_field(root["palette"], "palette");
        if (t < 1 || t > max_palette)
            throw InputError("palette out of range");
        doc.palette = t;
    }
    if (root.contains("rulebase")) {
        if (!root["rulebase"].is_string())
            throw InputError("'rulebase' must be a preset name");
        doc.rulebase = root["rulebase"].get<std::string>();
    }
    if (root.contains("k"))
        doc.k = int_field(root["k"], "k");
    if (root.contains("xi"))
        doc.xi = int_field(root["xi"], "xi");

    const int palette = doc.palette.value_or(3);
    const std::size_t n = doc.graph.order();

    if (root.contains("ordering")) {
        std::vector<std::uint32_t> ranks(n, 0);
        for_each_vertex_entry(doc, root["ordering"], "'ordering'", [&](VertexId v, const Json& value) {
            const int r = int_field(value, "rank");
            if (r < 1)
                throw InputError("ranks must be positive");
            ranks[v] = static_cast<std::uint32_t>(r);
        });
        try {
            doc.ordering = Ordering(std::move(ranks));
        } catch (const std::invalid_argument&) {
            throw InputError("'ordering' must assign ranks 1..n bijectively");
        }
    } else {
        doc.warnings.push_back("no ordering given; using insertion order");
    }

    if (root.contains("lists")) {
        ListAssignment lists(n, ColorSet::full(palette));
        for_each_vertex_entry(doc, root["lists"], "'lists'", [&](VertexId v, const Json& value) {
            if (!value.is_array())
                throw InputError("every list must be an array of colors");
            ColorSet l;
            for (const auto& c : value)
                l.insert(color_field(c, palette));
            lists[v] = l;
        });
        doc.lists = std::move(lists);
    }

    if (root.contains("coloring")) {
        Coloring coloring{std::vector<Color>(n, 0), palette};
        for_each_vertex_entry(doc, root["coloring"], "'coloring'",
                              [&](VertexId v, const Json& value) { coloring.colors[v] = color_field(value, palette); });
        if (!coloring.in_range())
            throw InputError("'coloring' must color every vertex");
        doc.coloring = std::move(coloring);
    }

    if (root.contains("transverse")) {
        if (!root["transverse"].is_array())
            throw InputError("'transverse' must be an array of {index, members}");
        oracle::TransverseSystem system;
        for (const auto& entry : root["transverse"]) {
            if (!entry.is_object() || !entry.contains("members") || !entry["members"].is_array())
                throw InputError("transverse entries need a 'members' array");
            oracle::TransverseEntry e;
            e.index = entry.contains("index") ? int_field(entry["index"], "index")
                                              : static_cast<int>(system.size()) + 1;
            for (const auto& m : entry["members"])
                e.members.push_back(by_id(doc, id_text(m)));
            system.push_back(std::move(e));
        }
        doc.transverse = std::move(system);
    }
    return doc;
}

auto load_instance(const std::filesystem::path& path) -> InstanceDocument
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

namespace {

    auto id_json(const std::string& id) -> Json
    {
        if (!id.empty() && id.find_first_not_of("0123456789") == std::string::npos && id.size() < 10)
            return std::stoi(id);
        return id;
    }

}  // namespace

auto to_json(const InstanceDocument& doc) -> std::string
{
    Json root;
    root["vertices"] = Json::array();
    for (const auto& id : doc.ids)
        root["vertices"].push_back(id_json(id));
    root["edges"] = Json::array();
    for (auto [a, b] : doc.graph.edges())
        root["edges"].push_back(Json::array({id_json(doc.ids[a]), id_json(doc.ids[b])}));
    if (doc.palette)
        root["palette"] = *doc.palette;
    if (doc.ordering) {
        root["ordering"] = Json::object();
        for (VertexId v = 0; v < doc.ids.size(); ++v)
            root["ordering"][doc.ids[v]] = doc.ordering->rank(v);
    }
    if (doc.lists) {
        root["lists"] = Json::object();
        for (VertexId v = 0; v < doc.ids.size(); ++v)
            root["lists"][doc.ids[v]] = (*doc.lists)[v].colors();
    }
    if (doc.coloring) {
        root["coloring"] = Json::object();
        for (VertexId v = 0; v < doc.ids.size(); ++v)
            root["coloring"][doc.ids[v]] = doc.coloring->colors[v];
    }
    if (!doc.marks.empty()) {
        // Marks in vertex order, so that the output follows the ordering of ids.
        std::vector<std::pair<VertexId, std::string>> by_vertex;
        for (const auto& [label, v] : doc.marks)
            by_vertex.emplace_back(v, label);
        std::sort(by_vertex.begin(), by_vertex.end());
        root["marks"] = Json::object();
        for (const auto& [v, label] : by_vertex)
            root["marks"][label] = id_json(doc.ids[v]);
    }
    if (doc.rulebase)
        root["rulebase"] = *doc.rulebase;
    if (doc.k)
        root["k"] = *doc.k;
    if (doc.xi)
        root["xi"] = *doc.xi;
    if (doc.transverse) {
        root["transverse"] = Json::array();
        for (const auto& e : *doc.transverse) {
            Json members = Json::array();
            for (VertexId v : e.members)
                members.push_back(id_json(doc.ids[v]));
            root["transverse"].push_back(Json{{"index", e.index}, {"members", members}});
        }
    }
    return root.dump(2) + "\n";
}

auto document_from_gadget(const GadgetInstance& gadget) -> InstanceDocument
{
    InstanceDocument doc;
    doc.graph = gadget.shape.graph;
    for (VertexId v = 0; v < doc.graph.order(); ++v)
        doc.ids.push_back(std::to_string(v));
    doc.marks = gadget.shape.marks;
    doc.ordering = gadget.ordering;
    doc.palette = gadget.coloring.palette;
    if (!gadget.coloring.colors.empty())
        doc.coloring = gadget.coloring;
    if (auto it = gadget.parameters.find("k"); it != gadget.parameters.end())
        doc.k = it->second;
    if (auto it = gadget.parameters.find("xi"); it != gadget.parameters.end())
        doc.xi = it->second;
    return doc;
}

namespace {

    auto fill_for(Color c) -> std::string
    {
        static const char* const palette[] = {"#fbb4ae", "#b3cde3", "#ccebc5", "#decbe4", "#fed9a6",
                                              "#ffffcc", "#e5d8bd", "#fddaec", "#f2f2f2"};
        if (c >= 1 && c <= 9)
            return palette[c - 1];
        return "#ffffff";
    }

    auto escape(const std::string& text) -> std::string
    {
        std::string out;
        for (char ch : text) {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out;
    }

}  // namespace

auto to_dot(const Graph& g, const DotStyle& style) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        std::string label = escape(v < style.names.size() ? style.names[v] : std::to_string(v));
        if (style.ordering)
            label += "\\n#" + std::to_string(style.ordering->rank(v));
        if (style.lists)
            label += "\\n" + (*style.lists)[v].to_string();
        out << "  " << v << " [label=\"" << label << "\"";
        if (style.coloring && v < style.coloring->colors.size())
            out << ", fillcolor=\"" << fill_for(style.coloring->colors[v]) << "\"";
        else if (style.lists && (*style.lists)[v].is_singleton())
            out << ", fillcolor=\"" << fill_for((*style.lists)[v].min()) << "\"";
        out << "];\n";
    }
    for (auto [a, b] : g.edges())
        out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace seqcol
