#include "seqcol/rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace seqcol {

auto to_string(UpdateKind kind) -> std::string_view
{
    switch (kind) {
    case UpdateKind::subtract_union:
        return "subtract-union";
    case UpdateKind::intersect_lists:
        return "intersect-lists";
    case UpdateKind::greedy_min:
        return "greedy-min";
    case UpdateKind::type1_forcing:
        return "type1-forcing";
    case UpdateKind::type2_forcing:
        return "type2-forcing";
    }
    return "?";
}

auto parse_update_kind(std::string_view text) -> UpdateKind
{
    for (auto kind : {UpdateKind::subtract_union, UpdateKind::intersect_lists, UpdateKind::greedy_min,
                      UpdateKind::type1_forcing, UpdateKind::type2_forcing})
        if (to_string(kind) == text)
            return kind;
    throw std::invalid_argument("unknown update kind '" + std::string(text) + "'");
}

void LocalRule::validate() const
{
    pattern.validate();
    if (!pattern.graph.contains(target))
        throw std::invalid_argument("rule " + name + ": target outside pattern");
    const bool needs_partner = kind == UpdateKind::intersect_lists || kind == UpdateKind::type2_forcing;
    if (needs_partner && (!partner || !pattern.graph.contains(*partner) || *partner == target))
        throw std::invalid_argument("rule " + name + ": partner vertex required");
    for (auto [a, b] : nonadjacent)
        if (!pattern.graph.contains(a) || !pattern.graph.contains(b) || pattern.graph.has_edge(a, b))
            throw std::invalid_argument("rule " + name + ": bad non-adjacency side condition");
}

namespace {

    auto union_of(const ListAssignment& lists, std::span<const VertexId> embedding, std::optional<VertexId> skip)
        -> ColorSet
    {
        ColorSet all;
        for (VertexId p = 0; p < embedding.size(); ++p)
            if (!skip || p != *skip)
                all = all | lists[embedding[p]];
        return all;
    }

}  // namespace

auto LocalRule::apply(const RuleContext& ctx, std::span<const VertexId> embedding) const -> std::optional<ColorSet>
{
    for (auto [a, b] : nonadjacent)
        if (ctx.host.has_edge(embedding[a], embedding[b]))
            return std::nullopt;

    const VertexId host_target = embedding[target];
    const ColorSet current = ctx.lists[host_target];

    switch (kind) {
    case UpdateKind::subtract_union: {
        ColorSet others = union_of(ctx.lists, embedding, target);
        if (others.size() != union_threshold)
            return std::nullopt;
        return current - others;
    }
    case UpdateKind::intersect_lists: {
        if (union_of(ctx.lists, embedding, std::nullopt).size() != union_threshold)
            return std::nullopt;
        return current & ctx.lists[embedding[*partner]];
    }
    case UpdateKind::greedy_min: {
        ColorSet decided;
        for (VertexId q : pattern.graph.neighbors(target))
            if (ctx.lists[embedding[q]].is_singleton())
                decided = decided | ctx.lists[embedding[q]];
        ColorSet rest = current - decided;
        if (rest.empty())
            return std::nullopt;
        return ColorSet::single(rest.min());
    }
    case UpdateKind::type1_forcing: {
        std::vector<VertexId> sub;
        for (VertexId p = 0; p < embedding.size(); ++p)
            if (p != target)
                sub.push_back(embedding[p]);
        auto outcome = type1_force(ctx.host, ctx.lists, ctx.palette, sub, host_target, ctx.oracle_cap);
        if (outcome.status != ForceStatus::applied)
            return std::nullopt;
        return outcome.list;
    }
    case UpdateKind::type2_forcing: {
        std::vector<VertexId> sub;
        for (VertexId p = 0; p < embedding.size(); ++p)
            if (p != target && p != *partner)
                sub.push_back(embedding[p]);
        const std::vector<VertexId> fixed{host_target, embedding[*partner]};
        auto outcome = type2_force(ctx.host, ctx.lists, ctx.palette, sub, fixed, ctx.oracle_cap);
        if (outcome.status != ForceStatus::applied)
            return std::nullopt;
        return outcome.list;
    }
    }
    return std::nullopt;
}

auto tucker1(int t) -> LocalRule
{
    if (t < 2)
        throw std::invalid_argument("tucker1: t must be at least 2");
    std::vector<std::string> labels;
    for (int i = 1; i <= t; ++i)
        labels.push_back("x_" + std::to_string(i));
    LocalRule rule;
    rule.name = "tucker1(" + std::to_string(t) + ")";
    rule.pattern = marked_clique(labels);
    rule.target = rule.pattern.vertex(labels.back());
    rule.kind = UpdateKind::subtract_union;
    rule.union_threshold = t - 1;
    return rule;
}

auto tucker2(int t) -> LocalRule
{
    if (t < 2)
        throw std::invalid_argument("tucker2: t must be at least 2");
    std::vector<std::string> left{"u"};
    std::vector<std::string> right{"v"};
    for (int i = 1; i < t; ++i) {
        left.push_back("x_" + std::to_string(i));
        right.push_back("x_" + std::to_string(i));
    }
    LocalRule rule;
    rule.name = "tucker2(" + std::to_string(t) + ")";
    rule.pattern = amalgam(marked_clique(left), marked_clique(right));
    rule.target = rule.pattern.vertex("u");
    rule.partner = rule.pattern.vertex("v");
    rule.kind = UpdateKind::intersect_lists;
    rule.union_threshold = t;
    rule.nonadjacent = {{rule.target, *rule.partner}};
    return rule;
}

auto greedy_local_rule(const MarkedGraph& pattern, const std::string& target) -> LocalRule
{
    LocalRule rule;
    rule.name = "greedy-as-local";
    rule.pattern = pattern;
    rule.target = pattern.vertex(target);
    rule.kind = UpdateKind::greedy_min;
    return rule;
}

auto type1_rule(std::string name, const MarkedGraph& pattern, const std::string& target) -> LocalRule
{
    LocalRule rule;
    rule.name = std::move(name);
    rule.pattern = pattern;
    rule.target = pattern.vertex(target);
    rule.kind = UpdateKind::type1_forcing;
    rule.validate();
    return rule;
}

auto type2_rule(std::string name, const MarkedGraph& pattern, const std::string& target, const std::string& partner,
                bool require_nonadjacent) -> LocalRule
{
    LocalRule rule;
    rule.name = std::move(name);
    rule.pattern = pattern;
    rule.target = pattern.vertex(target);
    rule.partner = pattern.vertex(partner);
    rule.kind = UpdateKind::type2_forcing;
    if (require_nonadjacent)
        rule.nonadjacent = {{rule.target, *rule.partner}};
    rule.validate();
    return rule;
}

auto NonstructuralRule::apply(const Graph& host, const ListAssignment& lists, VertexId v) const
    -> std::optional<ColorSet>
{
    ColorSet decided;
    for (VertexId w : host.neighbors(v))
        if (lists[w].is_singleton())
            decided = decided | lists[w];
    ColorSet rest = lists[v] - decided;
    if (rest.empty())
        return std::nullopt;
    return ColorSet::single(rest.min());
}

auto greedy() -> NonstructuralRule
{
    return NonstructuralRule{"greedy"};
}

namespace {

    auto behaves_like_edge_rule(const LocalRule& rule) -> bool
    {
        return rule.kind == UpdateKind::subtract_union && rule.pattern.graph.order() == 2 &&
               rule.pattern.graph.size() == 1 && rule.union_threshold == 1 && rule.nonadjacent.empty();
    }

}  // namespace

auto make_rule_base(std::vector<LocalRule> structural, std::optional<NonstructuralRule> nonstructural, int palette,
                    int bound) -> RuleBase
{
    if (palette < 1 || palette > max_palette)
        throw std::invalid_argument("rule base: palette out of range");
    if (bound < 1)
        throw std::invalid_argument("rule base: locality bound must be positive");

    if (std::none_of(structural.begin(), structural.end(), behaves_like_edge_rule))
        structural.insert(structural.begin(), tucker1(2));

    for (const auto& rule : structural) {
        rule.validate();
        auto d = diameter(rule.pattern.graph);
        if (!d || *d > static_cast<std::size_t>(bound))
            throw std::invalid_argument("rule base: pattern of " + rule.name + " exceeds the locality bound " +
                                        std::to_string(bound));
    }
    return RuleBase{std::move(structural), std::move(nonstructural), palette, bound};
}

auto rule_base_rt(int palette) -> RuleBase
{
    std::vector<LocalRule> rules;
    for (int t = 2; t <= palette; ++t)
        rules.push_back(tucker1(t));
    for (int t = 2; t <= palette; ++t)
        rules.push_back(tucker2(t));
    return make_rule_base(std::move(rules), std::nullopt, palette, 2);
}

auto rule_base_rg(int palette) -> RuleBase
{
    return make_rule_base({tucker1(2)}, greedy(), palette, 1);
}

auto rule_base_rt_greedy(int palette) -> RuleBase
{
    auto rb = rule_base_rt(palette);
    rb.nonstructural = greedy();
    return rb;
}

auto preset_rule_base(std::string_view name, int palette) -> RuleBase
{
    if (name == "RT")
        return rule_base_rt(palette);
    if (name == "RG")
        return rule_base_rg(palette);
    if (name == "RT+greedy")
        return rule_base_rt_greedy(palette);
    throw std::invalid_argument("unknown rule base '" + std::string(name) + "' (expected RT, RG or RT+greedy)");
}

namespace {

    void check_vertices(const Graph& g, std::span<const VertexId> vs, const char* what)
    {
        for (VertexId v : vs)
            if (!g.contains(v))
                throw std::invalid_argument(std::string(what) + ": vertex outside the graph");
    }

    auto restrict_problem(const Graph& g, const ListAssignment& lists, int palette, std::span<const VertexId> subset)
        -> oracle::ListColoringProblem
    {
        oracle::ListColoringProblem p{induced_subgraph(g, subset), {}, palette};
        for (VertexId v : subset)
            p.lists.push_back(lists[v]);
        return p;
    }

}  // namespace

auto type1_force(const Graph& g, const ListAssignment& lists, int palette, std::span<const VertexId> sub,
                 VertexId v, std::size_t cap) -> ForceOutcome
{
    check_vertices(g, sub, "type1_force");
    if (!g.contains(v) || std::find(sub.begin(), sub.end(), v) != sub.end())
        throw std::invalid_argument("type1_force: forced vertex must lie outside the forcing set");
    if (sub.empty())
        return {};
    if (sub.size() > cap)
        return {ForceStatus::undecided, {}};

    ColorSet used;
    for (VertexId w : sub)
        used = used | lists[w];

    auto problem = restrict_problem(g, lists, palette, sub);
    std::optional<std::vector<int>> partition;
    bool unique = true;
    try {
        oracle::for_each_solution(
            problem,
            [&](const std::vector<Color>& s) {
                auto part = oracle::canonical_partition(s);
                if (!partition)
                    partition = std::move(part);
                else if (part != *partition)
                    unique = false;
                return unique;
            },
            cap);
    } catch (const oracle::CapExceeded&) {
        return {ForceStatus::undecided, {}};
    }
    if (!partition || !unique)
        return {};

    const int classes = *std::max_element(partition->begin(), partition->end()) + 1;
    if (classes != used.size())
        return {};

    std::vector<bool> hit(static_cast<std::size_t>(classes), false);
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (g.has_edge(v, sub[i]))
            hit[static_cast<std::size_t>((*partition)[i])] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        return {};
    return {ForceStatus::applied, lists[v] - used};
}

auto type1_force(const oracle::ListColoringProblem& p, std::span<const VertexId> sub, VertexId v, std::size_t cap)
    -> ForceOutcome
{
    p.validate();
    return type1_force(p.graph, p.lists, p.palette, sub, v, cap);
}

auto type2_force(const Graph& g, const ListAssignment& lists, int palette, std::span<const VertexId> sub,
                 std::span<const VertexId> fixed, std::size_t cap) -> ForceOutcome
{
    check_vertices(g, sub, "type2_force");
    check_vertices(g, fixed, "type2_force");
    for (VertexId v : fixed)
        if (std::find(sub.begin(), sub.end(), v) != sub.end())
            throw std::invalid_argument("type2_force: forcing set and fixed class must be disjoint");
    if (fixed.empty())
        return {};
    if (sub.size() + fixed.size() > cap)
        return {ForceStatus::undecided, {}};

    std::vector<VertexId> joint(fixed.begin(), fixed.end());
    joint.insert(joint.end(), sub.begin(), sub.end());
    auto problem = restrict_problem(g, lists, palette, joint);

    bool any = false;
    bool fixed_class = true;
    try {
        oracle::for_each_solution(
            problem,
            [&](const std::vector<Color>& s) {
                any = true;
                const Color c = s[0];
                for (std::size_t i = 0; i < s.size(); ++i)
                    if ((s[i] == c) != (i < fixed.size())) {
                        fixed_class = false;
                        return false;
                    }
                return true;
            },
            cap);
    } catch (const oracle::CapExceeded&) {
        return {ForceStatus::undecided, {}};
    }
    if (!any || !fixed_class)
        return {};

    ColorSet common = ColorSet::full(palette);
    for (VertexId v : fixed)
        common = common & lists[v];
    return {ForceStatus::applied, common};
}

auto type2_force(const oracle::ListColoringProblem& p, std::span<const VertexId> sub, std::span<const VertexId> fixed,
                 std::size_t cap) -> ForceOutcome
{
    p.validate();
    return type2_force(p.graph, p.lists, p.palette, sub, fixed, cap);
}

namespace {

    using SolutionSet = std::vector<std::vector<Color>>;

    auto solutions_of(const Graph& g, const ListAssignment& lists, int palette) -> SolutionSet
    {
        auto sols = oracle::enumerate_solutions({g, lists, palette}).solutions;
        std::sort(sols.begin(), sols.end());
        return sols;
    }

    auto describe(const ListAssignment& lists) -> std::string
    {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0; i < lists.size(); ++i)
            out << (i ? "," : "") << lists[i].to_string();
        out << ")";
        return out.str();
    }

}  // namespace

auto validate_rule(const LocalRule& rule, int palette, std::size_t sample_bound) -> RuleValidationReport
{
    rule.validate();
    RuleValidationReport report;
    const Graph& host = rule.pattern.graph;
    const std::size_t m = host.order();
    if (m > sample_bound || palette < 1) {
        report.skipped = true;
        return report;
    }

    const std::vector<std::vector<std::vector<VertexId>>> embeddings{
        enumerate_embeddings(host, host, EmbeddingQuery{{}, std::pair{rule.target, rule.target}, nullptr})};
    const std::vector<LocalRule> rules{rule};

    // Nonempty subsets of {1..palette}, encoded by bits.
    std::vector<ColorSet> subsets;
    for (std::uint32_t bits = 1; bits < (1U << palette); ++bits)
        subsets.push_back(ColorSet::from_bits(bits << 1U));
    const std::size_t base = subsets.size();

    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
        total *= base;
    report.assignments = total;

    auto decode = [&](std::size_t code) {
        ListAssignment lists(m);
        for (std::size_t i = 0; i < m; ++i) {
            lists[i] = subsets[code % base];
            code /= base;
        }
        return lists;
    };
    auto note = [&](std::string text) {
        if (report.examples.size() < 8)
            report.examples.push_back(std::move(text));
    };

    std::vector<ColorSet> updated(total);
    std::vector<bool> solvable(total);
    for (std::size_t code = 0; code < total; ++code) {
        const ListAssignment before = decode(code);
        ListAssignment after = before;
        bool grew = false;
        try {
            saturate(rules, embeddings, host, after, palette, rule.target, 12,
                     [](std::size_t, ColorSet, ColorSet) {});
        } catch (const std::logic_error&) {
            grew = true;
        }
        updated[code] = after[rule.target];
        const auto sols_before = solutions_of(host, before, palette);
        solvable[code] = !sols_before.empty();

        if (grew || !after[rule.target].subset_of(before[rule.target])) {
            ++report.shrink_violations;
            note("shrink-only fails on " + describe(before));
        }
        if (solutions_of(host, after, palette) != sols_before) {
            ++report.solution_violations;
            note("solution set changes on " + describe(before) + " -> " + describe(after));
        }
    }

    // Pairs L1 <= L2: walk every L2 and every pointwise subset of it.
    std::vector<std::vector<std::size_t>> sub_index(base);
    for (std::size_t b = 0; b < base; ++b)
        for (std::size_t a = 0; a < base; ++a)
            if (subsets[a].subset_of(subsets[b]))
                sub_index[b].push_back(a);

    for (std::size_t code2 = 0; code2 < total; ++code2) {
        std::vector<std::size_t> digits2(m);
        std::size_t rest = code2;
        for (std::size_t i = 0; i < m; ++i) {
            digits2[i] = rest % base;
            rest /= base;
        }
        std::vector<std::size_t> choice(m, 0);
        while (true) {
            std::size_t code1 = 0;
            for (std::size_t i = m; i-- > 0;)
                code1 = code1 * base + sub_index[digits2[i]][choice[i]];
            if (solvable[code1]) {
                ++report.monotone_pairs;
                if (!updated[code1].subset_of(updated[code2])) {
                    ++report.monotonicity_violations;
                    note("monotonicity fails: " + describe(decode(code1)) + " <= " + describe(decode(code2)));
                }
            }
            std::size_t i = 0;
            while (i < m && ++choice[i] == sub_index[digits2[i]].size())
                choice[i++] = 0;
            if (i == m)
                break;
        }
    }
    return report;
}

}  // namespace seqcol
