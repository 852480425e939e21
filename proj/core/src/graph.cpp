#include "seqcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace seqcol {

Graph::Graph(std::size_t n) : adjacency_(n) {}

auto Graph::add_vertex() -> VertexId
{
    adjacency_.emplace_back();
    return static_cast<VertexId>(adjacency_.size() - 1);
}

auto Graph::add_edge(VertexId u, VertexId v) -> bool
{
    if (!contains(u) || !contains(v))
        throw std::invalid_argument("add_edge: endpoint out of range");
    if (u == v)
        throw std::invalid_argument("add_edge: self-loop on vertex " + std::to_string(u));

    auto& nu = adjacency_[u];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v)
        return false;
    nu.insert(pos, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

auto Graph::has_edge(VertexId u, VertexId v) const -> bool
{
    if (!contains(u) || !contains(v))
        return false;
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const VertexId other = &a == &adjacency_[u] ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

auto Graph::neighbors(VertexId v) const -> std::span<const VertexId>
{
    return adjacency_.at(v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto complete_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto empty_graph(std::size_t n) -> Graph
{
    return Graph(n);
}

auto cycle_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    if (n >= 3)
        g.add_edge(static_cast<VertexId>(n - 1), 0);
    return g;
}

auto path_graph(std::size_t n) -> Graph
{
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto induced_subgraph(const Graph& g, std::span<const VertexId> subset) -> Graph
{
    std::vector<std::int64_t> position(g.order(), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (!g.contains(subset[i]))
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(subset[i]) + " not in graph");
        if (position[subset[i]] != -1)
            throw std::invalid_argument("induced_subgraph: repeated vertex " + std::to_string(subset[i]));
        position[subset[i]] = static_cast<std::int64_t>(i);
    }

    Graph result(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (VertexId w : g.neighbors(subset[i]))
            if (position[w] > static_cast<std::int64_t>(i))
                result.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(position[w]));
    return result;
}

auto ball(const Graph& g, VertexId v, std::size_t radius) -> std::vector<VertexId>
{
    if (!g.contains(v))
        throw std::invalid_argument("ball: vertex not in graph");

    std::vector<std::size_t> dist(g.order(), SIZE_MAX);
    std::vector<VertexId> order{v};
    dist[v] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId x = order[head];
        if (dist[x] == radius)
            continue;
        for (VertexId y : g.neighbors(x))
            if (dist[y] == SIZE_MAX) {
                dist[y] = dist[x] + 1;
                order.push_back(y);
            }
    }
    return order;
}

auto diameter(const Graph& g) -> std::optional<std::size_t>
{
    std::size_t best = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> dist(g.order(), SIZE_MAX);
        std::deque<VertexId> queue{v};
        std::size_t reached = 1;
        dist[v] = 0;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            best = std::max(best, dist[x]);
            for (VertexId y : g.neighbors(x))
                if (dist[y] == SIZE_MAX) {
                    dist[y] = dist[x] + 1;
                    ++reached;
                    queue.push_back(y);
                }
        }
        if (reached != g.order())
            return std::nullopt;
    }
    return best;
}

void MarkedGraph::validate() const
{
    std::vector<bool> used(graph.order(), false);
    for (const auto& [label, v] : marks) {
        if (!graph.contains(v))
            throw std::invalid_argument("marked graph: label '" + label + "' points outside the graph");
        if (used[v])
            throw std::invalid_argument("marked graph: vertex " + std::to_string(v) + " carries two labels");
        used[v] = true;
    }
}

auto MarkedGraph::vertex(const std::string& label) const -> VertexId
{
    auto it = marks.find(label);
    if (it == marks.end())
        throw std::out_of_range("no vertex labeled '" + label + "'");
    return it->second;
}

auto MarkedGraph::labels() const -> std::vector<std::string>
{
    std::vector<std::string> result(graph.order());
    for (const auto& [label, v] : marks)
        result[v] = label;
    return result;
}

auto marked_clique(const std::vector<std::string>& labels) -> MarkedGraph
{
    MarkedGraph result{complete_graph(labels.size()), {}};
    for (VertexId i = 0; i < labels.size(); ++i)
        if (!result.marks.emplace(labels[i], i).second)
            throw std::invalid_argument("marked_clique: duplicate label '" + labels[i] + "'");
    return result;
}

auto marked_edge(const std::string& a, const std::string& b) -> MarkedGraph
{
    return marked_clique({a, b});
}

auto amalgam(const MarkedGraph& left, const MarkedGraph& right) -> MarkedGraph
{
    MarkedGraph result = left;
    const auto right_labels = right.labels();

    std::vector<VertexId> image(right.graph.order());
    for (VertexId v = 0; v < right.graph.order(); ++v) {
        const auto& label = right_labels[v];
        auto shared = label.empty() ? result.marks.end() : result.marks.find(label);
        if (shared != result.marks.end()) {
            image[v] = shared->second;
        } else {
            image[v] = result.graph.add_vertex();
            if (!label.empty())
                result.marks.emplace(label, image[v]);
        }
    }
    for (auto [a, b] : right.graph.edges())
        result.graph.add_edge(image[a], image[b]);
    return result;
}

auto amalgam_all(std::span<const MarkedGraph> parts) -> MarkedGraph
{
    MarkedGraph result;
    for (const auto& part : parts)
        result = amalgam(result, part);
    return result;
}

auto relabel(const MarkedGraph& g, const std::map<std::string, std::string>& renaming) -> MarkedGraph
{
    MarkedGraph result{g.graph, {}};
    for (const auto& [label, v] : g.marks) {
        auto it = renaming.find(label);
        const auto& fresh = it == renaming.end() ? label : it->second;
        if (!result.marks.emplace(fresh, v).second)
            throw std::invalid_argument("relabel: label collision on '" + fresh + "'");
    }
    return result;
}

Ordering::Ordering(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks))
{
    std::vector<bool> seen(ranks_.size() + 1, false);
    for (auto r : ranks_) {
        if (r < 1 || r > ranks_.size() || seen[r])
            throw std::invalid_argument("ordering: ranks are not a permutation of 1..n");
        seen[r] = true;
    }
}

auto Ordering::identity(std::size_t n) -> Ordering
{
    std::vector<std::uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1U);
    return Ordering(std::move(ranks));
}

auto Ordering::from_keys(std::span<const long long> keys) -> Ordering
{
    std::vector<VertexId> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0U);
    std::stable_sort(idx.begin(), idx.end(), [&](VertexId a, VertexId b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> ranks(keys.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        ranks[idx[i]] = static_cast<std::uint32_t>(i + 1);
    return Ordering(std::move(ranks));
}

auto Ordering::sequence() const -> std::vector<VertexId>
{
    std::vector<VertexId> seq(ranks_.size());
    for (VertexId v = 0; v < ranks_.size(); ++v)
        seq[ranks_[v] - 1] = v;
    return seq;
}

auto Ordering::restrict_to(std::span<const VertexId> subset) const -> Ordering
{
    std::vector<long long> keys;
    keys.reserve(subset.size());
    for (VertexId v : subset)
        keys.push_back(rank(v));
    return from_keys(keys);
}

auto Coloring::in_range() const -> bool
{
    return std::all_of(colors.begin(), colors.end(), [&](Color c) { return c >= 1 && c <= palette; });
}

auto Coloring::conflicts(const Graph& g) const -> std::vector<Edge>
{
    std::vector<Edge> bad;
    for (auto [u, v] : g.edges())
        if (colors.at(u) == colors.at(v))
            bad.emplace_back(u, v);
    return bad;
}

auto Coloring::is_proper(const Graph& g) const -> bool
{
    return colors.size() == g.order() && in_range() && conflicts(g).empty();
}

namespace {

    struct EmbeddingSearch {
        const Graph& host;
        const Graph& pattern;
        const EmbeddingQuery& query;
        std::vector<bool> allowed;
        std::vector<VertexId> all_allowed;  // rank-sorted
        std::vector<VertexId> image;
        std::vector<bool> used;
        std::vector<std::vector<VertexId>> out;

        auto rank(VertexId v) const -> std::uint32_t
        {
            return query.ordering ? query.ordering->rank(v) : v;
        }

        auto pinned(VertexId q) const -> bool { return query.pin && query.pin->first == q; }

        // Pattern vertices are placed in id order; the pinned one is placed up front.
        auto mapped_before(VertexId q, VertexId p) const -> bool { return q < p || pinned(q); }

        void extend(VertexId p)
        {
            if (p == pattern.order()) {
                out.push_back(image);
                return;
            }
            if (pinned(p)) {
                for (VertexId q : pattern.neighbors(p))
                    if (q < p && !host.has_edge(image[q], image[p]))
                        return;
                extend(p + 1);
                return;
            }

            std::vector<VertexId> candidates;
            std::optional<VertexId> anchor;
            for (VertexId q : pattern.neighbors(p))
                if (mapped_before(q, p)) {
                    anchor = q;
                    break;
                }
            if (anchor) {
                auto nb = host.neighbors(image[*anchor]);
                candidates.assign(nb.begin(), nb.end());
                std::sort(candidates.begin(), candidates.end(),
                          [&](VertexId a, VertexId b) { return rank(a) < rank(b); });
            } else {
                candidates = all_allowed;
            }

            for (VertexId h : candidates) {
                if (!allowed[h] || used[h])
                    continue;
                bool ok = true;
                for (VertexId q : pattern.neighbors(p))
                    if (mapped_before(q, p) && !host.has_edge(image[q], h)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                image[p] = h;
                used[h] = true;
                extend(p + 1);
                used[h] = false;
            }
        }
    };

}  // namespace

auto enumerate_embeddings(const Graph& host, const Graph& pattern, const EmbeddingQuery& query)
    -> std::vector<std::vector<VertexId>>
{
    EmbeddingSearch search{host, pattern, query, {}, {}, {}, {}, {}};
    search.allowed.assign(host.order(), query.restricted_to.empty());
    for (VertexId v : query.restricted_to) {
        if (!host.contains(v))
            throw std::invalid_argument("enumerate_embeddings: restriction outside host");
        search.allowed[v] = true;
    }
    for (VertexId v = 0; v < host.order(); ++v)
        if (search.allowed[v])
            search.all_allowed.push_back(v);
    std::sort(search.all_allowed.begin(), search.all_allowed.end(),
              [&](VertexId a, VertexId b) { return search.rank(a) < search.rank(b); });

    if (pattern.order() > search.all_allowed.size())
        return {};
    search.image.assign(pattern.order(), 0);
    search.used.assign(host.order(), false);

    if (query.pin) {
        auto [p, h] = *query.pin;
        if (p >= pattern.order() || !host.contains(h))
            throw std::invalid_argument("enumerate_embeddings: bad pin");
        if (!search.allowed[h])
            return {};
        search.image[p] = h;
        search.used[h] = true;
    }

    search.extend(0);
    return std::move(search.out);
}

}  // namespace seqcol
