#include "seqcol/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace seqcol::oracle {

auto vertex_cap_from_env() -> std::size_t
{
    if (const char* raw = std::getenv("SEQCOL_ORACLE_CAP")) {
        try {
            auto value = std::stoul(raw);
            if (value > 0)
                return value;
        } catch (const std::exception&) {
        }
    }
    return default_vertex_cap;
}

void ListColoringProblem::validate() const
{
    if (lists.size() != graph.order())
        throw std::invalid_argument("list coloring problem: one list per vertex required");
    if (palette < 0 || palette > max_palette)
        throw std::invalid_argument("list coloring problem: palette out of range");
    for (auto l : lists)
        if (!l.within_palette(palette))
            throw std::invalid_argument("list coloring problem: list " + l.to_string() + " exceeds palette");
}

namespace {

    void require_cap(const Graph& g, std::size_t cap)
    {
        if (g.order() > cap)
            throw CapExceeded("oracle: " + std::to_string(g.order()) + " vertices exceeds cap " + std::to_string(cap));
    }

    // Each vertex is visited with the colors of earlier neighbours removed.

    struct Backtracker {
        const ListColoringProblem& p;
        const std::function<bool(const std::vector<Color>&)>& visit;
        std::vector<Color> colors;

        auto run(VertexId v) -> bool
        {
            if (v == p.graph.order())
                return visit(colors);
            ColorSet available = p.lists[v];
            for (VertexId w : p.graph.neighbors(v))
                if (w < v)
                    available.erase(colors[w]);
            for (Color c : available.colors()) {
                colors[v] = c;
                if (!run(v + 1))
                    return false;
            }
            colors[v] = 0;
            return true;
        }
    };

    auto full_lists(const Graph& g, int t) -> ListColoringProblem
    {
        return {g, ListAssignment(g.order(), ColorSet::full(t)), t};
    }

}  // namespace

auto for_each_solution(const ListColoringProblem& p, const std::function<bool(const std::vector<Color>&)>& visit,
                       std::size_t vertex_cap) -> bool
{
    p.validate();
    require_cap(p.graph, vertex_cap);
    Backtracker bt{p, visit, std::vector<Color>(p.graph.order(), 0)};
    return bt.run(0);
}

auto enumerate_solutions(const ListColoringProblem& p, std::size_t count_cap, std::size_t vertex_cap) -> Enumeration
{
    Enumeration result;
    for_each_solution(
        p,
        [&](const std::vector<Color>& s) {
            if (result.solutions.size() == count_cap) {
                result.status = EnumerationStatus::count_overflow;
                return false;
            }
            result.solutions.push_back(s);
            return true;
        },
        vertex_cap);
    return result;
}

auto count_solutions(const ListColoringProblem& p, std::size_t vertex_cap) -> std::uint64_t
{
    std::uint64_t count = 0;
    for_each_solution(
        p,
        [&](const std::vector<Color>&) {
            ++count;
            return true;
        },
        vertex_cap);
    return count;
}

auto canonical_partition(const std::vector<Color>& coloring) -> std::vector<int>
{
    std::vector<int> rename(max_palette + 1, -1);
    std::vector<int> out(coloring.size());
    int next = 0;
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        auto& slot = rename.at(static_cast<std::size_t>(coloring[i]));
        if (slot < 0)
            slot = next++;
        out[i] = slot;
    }
    return out;
}

auto unique_up_to_permutation(const ListColoringProblem& p, std::size_t vertex_cap) -> bool
{
    std::optional<std::vector<int>> first;
    bool unique = true;
    for_each_solution(
        p,
        [&](const std::vector<Color>& s) {
            auto part = canonical_partition(s);
            if (!first) {
                first = std::move(part);
                return true;
            }
            if (part != *first) {
                unique = false;
                return false;
            }
            return true;
        },
        vertex_cap);
    return first.has_value() && unique;
}

auto is_ucg(const Graph& g, int t, std::size_t vertex_cap) -> bool
{
    return unique_up_to_permutation(full_lists(g, t), vertex_cap);
}

auto clique_number(const Graph& g) -> int
{
    int best = 0;
    std::vector<VertexId> current;
    std::function<void(std::vector<VertexId>)> grow = [&](std::vector<VertexId> candidates) {
        best = std::max(best, static_cast<int>(current.size()));
        if (current.size() + candidates.size() <= static_cast<std::size_t>(best))
            return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            VertexId v = candidates[i];
            std::vector<VertexId> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g.has_edge(v, candidates[j]))
                    next.push_back(candidates[j]);
            current.push_back(v);
            grow(std::move(next));
            current.pop_back();
        }
    };
    std::vector<VertexId> all(g.order());
    for (VertexId v = 0; v < g.order(); ++v)
        all[v] = v;
    grow(all);
    return best;
}

auto chromatic_and_clique(const Graph& g, std::size_t vertex_cap) -> ChromaticAndClique
{
    require_cap(g, vertex_cap);
    ChromaticAndClique result;
    result.clique = clique_number(g);
    if (g.order() == 0)
        return result;
    for (int t = std::max(1, result.clique); t <= static_cast<int>(g.order()); ++t) {
        bool colorable = !for_each_solution(full_lists(g, t), [](const std::vector<Color>&) { return false; },
                                            vertex_cap);
        if (colorable) {
            result.chromatic = t;
            break;
        }
    }
    return result;
}

auto embed_list_problem(const ListColoringProblem& p) -> ListEmbedding
{
    p.validate();
    ListEmbedding out{p.graph, {}};
    for (int i = 0; i < p.palette; ++i)
        out.anchors.push_back(out.graph.add_vertex());
    for (std::size_t i = 0; i < out.anchors.size(); ++i)
        for (std::size_t j = i + 1; j < out.anchors.size(); ++j)
            out.graph.add_edge(out.anchors[i], out.anchors[j]);
    for (VertexId u = 0; u < p.graph.order(); ++u)
        for (Color c = 1; c <= p.palette; ++c)
            if (!p.lists[u].contains(c))
                out.graph.add_edge(u, out.anchors[static_cast<std::size_t>(c - 1)]);
    return out;
}

namespace {

    auto colors_on(const std::vector<Color>& sigma, std::span<const VertexId> members) -> ColorSet
    {
        ColorSet seen;
        for (VertexId v : members)
            seen.insert(sigma[v]);
        return seen;
    }

    auto is_complete(const Graph& g) -> bool
    {
        return g.size() * 2 == g.order() * (g.order() == 0 ? 0 : g.order() - 1);
    }

}  // namespace

auto check_transverse(const Graph& g, const TransverseSystem& system, int t, std::size_t vertex_cap) -> bool
{
    require_cap(g, vertex_cap);
    if (t < 2)
        throw std::invalid_argument("check_transverse: t must be at least 2");
    for (const auto& entry : system)
        for (VertexId v : entry.members)
            if (!g.contains(v))
                throw std::invalid_argument("check_transverse: entry member outside the graph");

    if (chromatic_and_clique(g, vertex_cap).chromatic != t - 1)
        return false;

    if (g.order() == static_cast<std::size_t>(t - 1) && is_complete(g) && system.size() == 1 &&
        system.front().index == 1) {
        auto members = system.front().members;
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() == g.order())
            return true;
    }

    // Every (t-1)-coloring: each W meets all classes.
    const ColorSet all_lower = ColorSet::full(t - 1);
    bool every_entry_transverse = true;
    for_each_solution(
        full_lists(g, t - 1),
        [&](const std::vector<Color>& sigma) {
            for (const auto& entry : system)
                if (colors_on(sigma, entry.members) != all_lower) {
                    every_entry_transverse = false;
                    return false;
                }
            return true;
        },
        vertex_cap);
    if (!every_entry_transverse)
        return false;

    // Every surjective t-coloring: some W meets all t classes.
    const ColorSet all = ColorSet::full(t);
    bool covered = true;
    for_each_solution(
        full_lists(g, t),
        [&](const std::vector<Color>& sigma) {
            ColorSet used;
            for (Color c : sigma)
                used.insert(c);
            if (used != all)
                return true;
            for (const auto& entry : system)
                if (colors_on(sigma, entry.members) == all)
                    return true;
            covered = false;
            return false;
        },
        vertex_cap);
    return covered;
}

auto is_fixed_class(const Graph& g, std::span<const VertexId> members, int t, std::size_t vertex_cap) -> bool
{
    if (members.empty())
        return false;
    std::vector<bool> in_class(g.order(), false);
    for (VertexId v : members)
        in_class.at(v) = true;

    bool any = false;
    bool fixed = true;
    for_each_solution(
        full_lists(g, t),
        [&](const std::vector<Color>& sigma) {
            any = true;
            Color c = sigma[members.front()];
            for (VertexId v = 0; v < g.order(); ++v)
                if ((sigma[v] == c) != in_class[v]) {
                    fixed = false;
                    return false;
                }
            return true;
        },
        vertex_cap);
    return any && fixed;
}

auto clique_condition_holds(const Graph& g, const TransverseSystem& system, int t) -> bool
{
    for (const auto& entry : system)
        if (clique_number(induced_subgraph(g, entry.members)) > t - 2)
            return false;
    return clique_number(g) <= t - 1;
}

auto build_from_transverse(const Graph& g, const TransverseSystem& system, int t, std::size_t vertex_cap)
    -> TransverseExtension
{
    TransverseExtension out{g, {}};
    for (const auto& entry : system) {
        VertexId fresh = out.graph.add_vertex();
        out.fixed_class.push_back(fresh);
        for (VertexId w : entry.members)
            out.graph.add_edge(fresh, w);
    }

    auto numbers = chromatic_and_clique(out.graph, vertex_cap);
    if (numbers.chromatic != t)
        throw std::runtime_error("build_from_transverse: result has chromatic number " +
                                 std::to_string(numbers.chromatic) + ", expected " + std::to_string(t));
    if (!is_fixed_class(out.graph, out.fixed_class, t, vertex_cap))
        throw std::runtime_error("build_from_transverse: added vertices are not a fixed color class");
    return out;
}

}  // namespace seqcol::oracle
