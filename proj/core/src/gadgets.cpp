#include "seqcol/gadgets.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace seqcol {

auto GadgetInstance::vertices(const std::vector<std::string>& labels) const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (const auto& label : labels)
        out.push_back(vertex(label));
    return out;
}

namespace {

    struct TemplateVertex {
        std::string label;
        int rank = 0;
        Color color = 0;
    };

    /// A gadget written as a sum of labeled cliques (edges are 2-cliques).
    struct Template {
        std::vector<std::vector<std::string>> pieces;
        std::vector<TemplateVertex> vertices;
        std::vector<std::string> interface;

        void edge(const std::string& a, const std::string& b) { pieces.push_back({a, b}); }
        void triangle(const std::string& a, const std::string& b, const std::string& c)
        {
            pieces.push_back({a, b, c});
        }
        void put(const std::string& label, int rank, Color color) { vertices.push_back({label, rank, color}); }
    };

    auto indexed(const std::string& base, int i) -> std::string
    {
        return base + "_" + std::to_string(i);
    }

    auto indexed(const std::string& base, int i, int j) -> std::string
    {
        return base + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }

    auto d_template(int k) -> Template
    {
        if (k < 1)
            throw std::invalid_argument("D_k: k must be at least 1");
        Template t;
        if (k == 1) {
            t.edge("u", "z");
            t.edge("v", "z");
            t.put("u", 1, 3);
            t.put("v", 2, 1);
            t.put("z", 3, 2);
            t.interface = {"u", "v", "z"};
            return t;
        }
        t.edge("u", "z");
        t.edge("u", indexed("x", k));
        t.edge("v", indexed("x", k));
        t.edge("z", indexed("x", 1));
        for (int i = 1; i < k; ++i) {
            t.triangle(indexed("x", i), indexed("v", 1, i), indexed("v", 2, i));
            t.triangle(indexed("x", i + 1), indexed("v", 1, i), indexed("v", 2, i));
            t.edge("z", indexed("v", 1, i));
        }
        t.put("u", 1, 3);
        t.put("v", 2, 1);
        for (int i = 1; i <= k; ++i)
            t.put(indexed("x", i), i + 2, 2);
        t.put("z", k + 3, 1);
        for (int i = 1; i < k; ++i) {
            t.put(indexed("v", 1, i), k + 2 * i + 2, 3);
            t.put(indexed("v", 2, i), k + 2 * i + 3, 1);
        }
        t.interface = {"u", "v"};
        return t;
    }

    auto f_template(int k) -> Template
    {
        if (k < 2)
            throw std::invalid_argument("F_k: k must be at least 2");
        Template t;
        t.edge("z_1", "x");
        t.edge("~z_1", "y");
        t.edge("z_1", "v");
        t.edge("~z_1", "v");
        t.edge("u", "z_3");
        t.edge("u", "~z_3");
        t.edge("u", "z_5");
        t.edge("u", "~z_5");
        t.triangle("z_1", "z_2", "z_3");
        t.triangle("~z_1", "~z_2", "~z_3");
        t.triangle("z_4", "z_2", "z_3");
        t.triangle("~z_4", "~z_2", "~z_3");
        t.triangle("z_5", "z_4", "y");
        t.triangle("~z_5", "~z_4", "x");
        for (int i = 1; i < k; ++i) {
            t.triangle(indexed("y", i), indexed("x", 1, i), indexed("x", 2, i));
            t.triangle(indexed("y", i + 1), indexed("x", 1, i), indexed("x", 2, i));
        }
        for (int i = 1; i < k; ++i)
            t.edge("u", indexed("x", 1, i));
        t.edge("x", indexed("y", k));
        t.edge("y", indexed("y", k));
        t.edge("v", indexed("y", k));

        t.put("u", 1, 1);
        t.put("v", 2, 2);
        t.put("x", 3, 1);
        t.put("y", 4, 1);
        t.put("z_1", 5, 3);
        t.put("~z_1", 6, 3);
        t.put("z_4", 7, 3);
        t.put("~z_4", 8, 3);
        t.put("z_5", 9, 2);
        t.put("~z_5", 10, 2);
        t.put("z_3", 11, 2);
        t.put("~z_3", 12, 2);
        t.put("z_2", 13, 1);
        t.put("~z_2", 14, 1);
        for (int i = 1; i <= k; ++i)
            t.put(indexed("y", i), 15 + (i - 1), 3);
        for (int i = 1; i < k; ++i) {
            t.put(indexed("x", 1, i), 15 + k + 2 * (i - 1), 2);
            t.put(indexed("x", 2, i), 16 + k + 2 * (i - 1), 1);
        }
        t.interface = {"u", "v", "x", "y"};
        return t;
    }

    auto h_template(int n) -> Template
    {
        if (n < 2)
            throw std::invalid_argument("H_n: n must be at least 2");
        Template t;
        for (int i = 1; i <= n; ++i) {
            t.triangle("x", indexed("u", 1, i), indexed("u", 2, i));
            t.triangle("y", indexed("u", 1, i), indexed("u", 2, i));
        }
        for (int i = 1; i <= n; ++i)
            t.edge("v", indexed("u", 1, i));
        t.put("v", 1, 3);
        for (int i = 1; i <= n; ++i) {
            t.put(indexed("u", 1, i), 2 * i, 2);
            t.put(indexed("u", 2, i), 2 * i + 1, 3);
        }
        t.put("x", 2 * n + 2, 1);
        t.put("y", 2 * n + 3, 1);
        t.interface = {"x", "y", "v"};
        return t;
    }

    /// Accumulates labeled pieces plus a sort key and color for every label.
    struct Assembly {
        std::vector<MarkedGraph> pieces;
        std::map<std::string, long long> key;
        std::map<std::string, int> tie;
        std::map<std::string, Color> color;

        void vertex(const std::string& label, long long rank, Color c, int tiebreak = 0)
        {
            if (!key.emplace(label, rank).second)
                throw std::logic_error("assembly: label '" + label + "' placed twice");
            tie[label] = tiebreak;
            color[label] = c;
            MarkedGraph single;
            single.marks.emplace(label, single.graph.add_vertex());
            pieces.push_back(std::move(single));
        }

        /// Adds a copy of `t`: interface labels are renamed by `rename`, the rest get `suffix`.
        /// `rank_of` maps (template rank, template label) to the instance key; interface
        /// vertices are expected to be placed separately.
        void add_copy(const Template& t, const std::map<std::string, std::string>& rename, const std::string& suffix,
                      const std::function<long long(int)>& rank_of, const std::function<Color(Color)>& recolor)
        {
            auto name = [&](const std::string& label) {
                auto it = rename.find(label);
                return it != rename.end() ? it->second : label + suffix;
            };
            for (const auto& piece : t.pieces) {
                std::vector<std::string> labels;
                for (const auto& label : piece)
                    labels.push_back(name(label));
                pieces.push_back(marked_clique(labels));
            }
            for (const auto& tv : t.vertices)
                if (!rename.contains(tv.label)) {
                    const auto label = name(tv.label);
                    key[label] = rank_of(tv.rank);
                    tie[label] = 0;
                    color[label] = recolor(tv.color);
                }
        }

        struct Built {
            GadgetInstance instance;
            bool compacted = false;
        };

        auto build(int palette, bool colored) const -> Built
        {
            Built out;
            auto& inst = out.instance;
            inst.shape = amalgam_all(pieces);
            const auto labels = inst.shape.labels();
            const std::size_t n = labels.size();

            std::vector<long long> literal(n);
            for (VertexId w = 0; w < n; ++w) {
                auto it = key.find(labels[w]);
                if (labels[w].empty() || it == key.end())
                    throw std::logic_error("assembly: vertex '" + labels[w] + "' has no rank");
                literal[w] = it->second;
            }
            std::vector<bool> seen(n + 1, false);
            bool bijective = true;
            for (auto r : literal) {
                if (r < 1 || r > static_cast<long long>(n) || seen[static_cast<std::size_t>(r)]) {
                    bijective = false;
                    break;
                }
                seen[static_cast<std::size_t>(r)] = true;
            }
            if (bijective) {
                std::vector<std::uint32_t> ranks(literal.begin(), literal.end());
                inst.ordering = Ordering(std::move(ranks));
            } else {
                std::vector<long long> keys(n);
                for (VertexId w = 0; w < n; ++w)
                    keys[w] = literal[w] * 4 + tie.at(labels[w]);
                inst.ordering = Ordering::from_keys(keys);
                out.compacted = true;
            }

            inst.coloring.palette = palette;
            if (colored) {
                for (VertexId w = 0; w < n; ++w)
                    inst.coloring.colors.push_back(color.at(labels[w]));
                if (!inst.coloring.in_range() || !inst.coloring.is_proper(inst.shape.graph))
                    throw std::logic_error("gadget coloring is not proper");
            }
            return out;
        }
    };

    auto single_gadget(const Template& t, const std::map<std::string, int>& parameters) -> GadgetInstance
    {
        Assembly a;
        for (const auto& piece : t.pieces)
            a.pieces.push_back(marked_clique(piece));
        for (const auto& tv : t.vertices) {
            a.key[tv.label] = tv.rank;
            a.tie[tv.label] = 0;
            a.color[tv.label] = tv.color;
        }
        auto built = a.build(3, true);
        if (built.compacted)
            throw std::logic_error("gadget ordering is not a bijection");
        built.instance.interface = t.interface;
        built.instance.parameters = parameters;
        return built.instance;
    }

    auto identity_color(Color c) -> Color
    {
        return c;
    }

    void check_base(const OrderedGraph& g)
    {
        if (g.ordering.size() != g.graph.order())
            throw std::invalid_argument("reduction: ordering does not match the graph");
    }

}  // namespace

auto base_label(VertexId w) -> std::string
{
    return "g_" + std::to_string(w);
}

auto build_D(int k) -> GadgetInstance
{
    return single_gadget(d_template(k), {{"k", k}});
}

auto build_F(int k) -> GadgetInstance
{
    return single_gadget(f_template(k), {{"k", k}});
}

auto build_H(int n) -> GadgetInstance
{
    return single_gadget(h_template(n), {{"n", n}});
}

auto build_G_xi(int xi, int k) -> GadgetInstance
{
    if (xi < 1 || k < 1)
        throw std::invalid_argument("G_xi: xi and k must be at least 1");
    const Template d = d_template(k + 1);
    const long long interior = static_cast<long long>(d.vertices.size()) - 2;
    Assembly a;
    a.vertex("u", 1, 3);
    a.vertex("v", 2, 1);
    for (int j = 1; j <= xi; ++j)
        a.add_copy(
            d, {{"u", "u"}, {"v", "v"}}, "^{" + std::to_string(j) + "}",
            [&](int rank) { return interior * (j - 1) + rank; }, identity_color);
    auto built = a.build(3, true);
    built.instance.interface = {"u", "v"};
    built.instance.parameters = {{"xi", xi}, {"k", k}};
    return built.instance;
}

auto edge_order(const Graph& g, const Ordering& ordering) -> std::vector<Edge>
{
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        if (ordering.rank(b) < ordering.rank(a))
            std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end(), [&](const Edge& e, const Edge& f) {
        return std::pair{ordering.rank(e.first), ordering.rank(e.second)} <
               std::pair{ordering.rank(f.first), ordering.rank(f.second)};
    });
    return edges;
}

auto is_vertex_cover(const Graph& g, std::span<const VertexId> cover) -> bool
{
    std::set<VertexId> in(cover.begin(), cover.end());
    for (auto [a, b] : g.edges())
        if (!in.contains(a) && !in.contains(b))
            return false;
    return true;
}

auto reduce_3col(const OrderedGraph& g, int k, ReductionMode mode, const std::optional<Coloring>& base_coloring)
    -> ReductionOutput
{
    check_base(g);
    if (k < 1)
        throw std::invalid_argument("reduce_3col: k must be at least 1");
    if (base_coloring) {
        if (base_coloring->colors.size() != g.graph.order() || base_coloring->palette != 3 ||
            !base_coloring->in_range() || !base_coloring->is_proper(g.graph))
            throw std::invalid_argument("reduce_3col: the supplied coloring is not a proper 3-coloring");
    }
    const long long n = static_cast<long long>(g.graph.order());
    const long long copies = mode == ReductionMode::weak ? n : n + k;
    const Template d = d_template(k);

    Assembly a;
    for (VertexId w = 0; w < g.graph.order(); ++w)
        a.vertex(base_label(w), g.ordering.rank(w), base_coloring ? base_coloring->colors[w] : 1);

    const auto edges = edge_order(g.graph, g.ordering);
    for (std::size_t j = 1; j <= edges.size(); ++j) {
        const auto [x, y] = edges[j - 1];
        // γ has u = 3 and v = 1; recolor so that u and v match the base colors.
        std::array<Color, 4> perm{0, 1, 2, 3};
        if (base_coloring) {
            const Color cx = base_coloring->colors[x];
            const Color cy = base_coloring->colors[y];
            perm[3] = cx;
            perm[1] = cy;
            perm[2] = 6 - cx - cy;
        }
        for (long long i = 1; i <= copies; ++i) {
            const long long block = (3LL * k - 1) * (copies * static_cast<long long>(j - 1) + i - 1);
            a.add_copy(
                d, {{"u", base_label(x)}, {"v", base_label(y)}},
                "^{" + std::to_string(i) + "," + std::to_string(j) + "}",
                [&](int rank) { return n + block + rank; }, [&](Color c) { return perm.at(static_cast<std::size_t>(c)); });
        }
    }

    auto built = a.build(3, base_coloring.has_value());
    ReductionOutput out;
    out.instance = std::move(built.instance);
    out.ranks_compacted = built.compacted;
    out.instance.parameters = {{"k", k}, {"copies", static_cast<int>(copies)}, {"n", static_cast<int>(n)}};
    out.bound = static_cast<int>(mode == ReductionMode::weak ? n : n + k - 1);
    if (base_coloring) {
        std::vector<VertexId> cert;
        for (VertexId w = 0; w < g.graph.order(); ++w)
            cert.push_back(out.instance.vertex(base_label(w)));
        out.certificate = std::move(cert);
    }
    return out;
}

auto reduce_vertexcover_sds(const OrderedGraph& g, int t, int k, const std::optional<std::vector<VertexId>>& cover)
    -> ReductionOutput
{
    check_base(g);
    if (k < 2)
        throw std::invalid_argument("reduce_vertexcover_sds: k must be at least 2");
    if (t < 0)
        throw std::invalid_argument("reduce_vertexcover_sds: t must be nonnegative");
    if (cover && !is_vertex_cover(g.graph, *cover))
        throw std::invalid_argument("reduce_vertexcover_sds: the supplied set is not a vertex cover");

    const long long n = static_cast<long long>(g.graph.order());
    const long long copies = n + k + 2;
    const Template f = f_template(k);

    Assembly a;
    a.vertex("u", 1, 1);
    a.vertex("v", 2, 2);
    for (VertexId w = 0; w < g.graph.order(); ++w)
        a.vertex(base_label(w), g.ordering.rank(w) + 2, 1);

    const auto edges = edge_order(g.graph, g.ordering);
    for (std::size_t j = 1; j <= edges.size(); ++j) {
        const auto [x, y] = edges[j - 1];
        for (long long i = 1; i <= copies; ++i) {
            const long long block = (3LL * k + 8) * (copies * static_cast<long long>(j - 1) + i - 1);
            a.add_copy(
                f, {{"u", "u"}, {"v", "v"}, {"x", base_label(x)}, {"y", base_label(y)}},
                "^{" + std::to_string(i) + "," + std::to_string(j) + "}",
                [&](int rank) { return n + rank - 2 + block; }, identity_color);
        }
    }

    auto built = a.build(3, true);
    ReductionOutput out;
    out.instance = std::move(built.instance);
    out.ranks_compacted = built.compacted;
    out.instance.interface = {"u", "v"};
    out.instance.parameters = {{"k", k}, {"t", t}, {"copies", static_cast<int>(copies)}};
    out.bound = t + k + 1;
    if (cover) {
        std::vector<VertexId> cert{out.instance.vertex("u"), out.instance.vertex("v")};
        for (VertexId w : *cover)
            cert.push_back(out.instance.vertex(base_label(w)));
        out.certificate = std::move(cert);
    }
    return out;
}

auto reduce_vertexcover_rulebase(const OrderedGraph& g, int t, const std::optional<std::vector<VertexId>>& cover)
    -> ReductionOutput
{
    check_base(g);
    if (t < 0)
        throw std::invalid_argument("reduce_vertexcover_rulebase: t must be nonnegative");
    if (cover && !is_vertex_cover(g.graph, *cover))
        throw std::invalid_argument("reduce_vertexcover_rulebase: the supplied set is not a vertex cover");

    const long long n = static_cast<long long>(g.graph.order());
    const auto edges = edge_order(g.graph, g.ordering);
    const long long m = static_cast<long long>(edges.size());

    Assembly a;
    a.vertex("v", 1, 3);
    // The literal base ranks overlap the last interior rank; base vertices go after it.
    for (VertexId w = 0; w < g.graph.order(); ++w)
        a.vertex(base_label(w), 2 * n * m + 1 + g.ordering.rank(w), 1, 1);

    if (!edges.empty()) {
        const Template h = h_template(static_cast<int>(n));
        for (std::size_t j = 1; j <= edges.size(); ++j) {
            const auto [x, y] = edges[j - 1];
            a.add_copy(
                h, {{"v", "v"}, {"x", base_label(x)}, {"y", base_label(y)}}, "^{" + std::to_string(j) + "}",
                [&](int rank) { return 1 + 2 * n * static_cast<long long>(j - 1) + rank; }, identity_color);
        }
    }

    auto built = a.build(3, true);
    ReductionOutput out;
    out.instance = std::move(built.instance);
    out.ranks_compacted = built.compacted;
    out.instance.interface = {"v"};
    out.instance.parameters = {{"t", t}, {"n", static_cast<int>(n)}};
    out.bound = t + 1;
    if (cover) {
        std::vector<VertexId> cert{out.instance.vertex("v")};
        for (VertexId w : *cover)
            cert.push_back(out.instance.vertex(base_label(w)));
        out.certificate = std::move(cert);
    }
    return out;
}

}  // namespace seqcol
