#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seqcol/defining_sets.hpp"
#include "seqcol/engine.hpp"
#include "seqcol/gadgets.hpp"
#include "seqcol/io.hpp"
#include "seqcol/oracle.hpp"

namespace seqcol::cli {

namespace {

    using Json = nlohmann::ordered_json;

    /// Budget breach from a search or an oracle cap.
    struct BudgetBreach {
        Json report;
    };

    struct Settings {
        std::string instance = "-";
        std::string rulebase;
        std::string seeds;
        std::optional<int> rounds_cap;
        bool trace = false;
        std::optional<std::string> dot_out;
        std::optional<std::string> json_out;
        std::optional<int> k;
        std::optional<int> xi;
        std::optional<int> n;
        std::optional<int> t;
        std::string mode = "weak";
        std::string witness;
        std::optional<std::uint64_t> budget;
        std::optional<std::size_t> cap;
        unsigned threads = 1;
        bool no_prune = false;
    };

    auto read_document(const std::string& path) -> InstanceDocument
    {
        if (path == "-") {
            std::ostringstream buffer;
            buffer << std::cin.rdbuf();
            return parse_instance(buffer.str());
        }
        return load_instance(path);
    }

    void write_text(const std::string& target, const std::string& text, std::ostream& out)
    {
        if (target == "-") {
            out << text;
            return;
        }
        std::ofstream file(target);
        if (!file)
            throw InputError("cannot write '" + target + "'");
        file << text;
    }

    void emit(const Settings& s, const Json& result, std::ostream& out)
    {
        write_text(s.json_out.value_or("-"), result.dump(2) + "\n", out);
    }

    auto split(const std::string& text) -> std::vector<std::string>
    {
        std::vector<std::string> parts;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ','))
            if (!item.empty())
                parts.push_back(item);
        return parts;
    }

    auto vertex_names(const InstanceDocument& doc) -> std::vector<std::string>
    {
        std::vector<std::string> names;
        for (VertexId v = 0; v < doc.graph.order(); ++v)
            names.push_back(doc.name(v));
        return names;
    }

    auto names_json(const InstanceDocument& doc, std::span<const VertexId> vs) -> Json
    {
        Json arr = Json::array();
        for (VertexId v : vs)
            arr.push_back(doc.name(v));
        return arr;
    }

    auto lists_json(const InstanceDocument& doc, const ListAssignment& lists) -> Json
    {
        Json obj = Json::object();
        for (VertexId v = 0; v < lists.size(); ++v)
            obj[doc.name(v)] = lists[v].colors();
        return obj;
    }

    auto oracle_cap(const Settings& s) -> std::size_t
    {
        return s.cap.value_or(oracle::vertex_cap_from_env());
    }

    auto pick_rulebase(const Settings& s, const InstanceDocument& doc, int palette) -> RuleBase
    {
        std::string name = !s.rulebase.empty() ? s.rulebase : doc.rulebase.value_or("RT");
        try {
            return preset_rule_base(name, palette);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }

    auto seed_set(const Settings& s, const InstanceDocument& doc) -> std::vector<VertexId>
    {
        std::vector<VertexId> seeds;
        for (const auto& token : split(s.seeds))
            seeds.push_back(doc.resolve(token));
        return seeds;
    }

    auto require_coloring(const InstanceDocument& doc) -> const Coloring&
    {
        if (!doc.coloring)
            throw InputError("this command needs a 'coloring' in the instance");
        return *doc.coloring;
    }

    auto k_of(const Settings& s, const InstanceDocument& doc) -> std::optional<int>
    {
        auto k = s.k ? s.k : doc.k;
        if (k && *k < 1)
            throw InputError("--k must be at least 1");
        return k;
    }

    void warn(const InstanceDocument& doc, std::ostream& err)
    {
        for (const auto& w : doc.warnings)
            err << "warning: " << w << "\n";
    }

    auto witness_json(const InstanceDocument& doc, const SdsWitness& w) -> Json
    {
        return Json{{"set", names_json(doc, w.set)}, {"rounds", w.rounds}, {"index", w.index()}};
    }

    auto solve_json(const InstanceDocument& doc, const SolveResult& r, bool with_trace) -> Json
    {
        Json j;
        j["done"] = r.done;
        j["status"] = std::string(to_string(r.status));
        j["rounds"] = r.rounds;
        j["failed_mid_round"] = r.failed_mid_round;
        if (r.failed_vertex)
            j["failed_vertex"] = doc.name(*r.failed_vertex);
        j["lists"] = lists_json(doc, r.lists);
        if (with_trace) {
            Json rounds = Json::array();
            for (std::size_t i = 0; i < r.trace.size(); ++i) {
                Json changes = Json::array();
                for (const auto& c : r.trace[i])
                    changes.push_back(Json{{"vertex", doc.name(c.vertex)},
                                           {"before", c.before.colors()},
                                           {"after", c.after.colors()},
                                           {"rule", c.rule}});
                rounds.push_back(Json{{"round", i + 1}, {"changes", changes}});
            }
            j["trace"] = rounds;
        }
        return j;
    }

    // ---- color ------------------------------------------------------------

    auto cmd_color(const Settings& s, std::ostream& out, std::ostream& err) -> int
    {
        auto doc = read_document(s.instance);
        warn(doc, err);
        const int palette = doc.effective_palette();
        auto rb = pick_rulebase(s, doc, palette);
        ListAssignment lists;
        if (!s.seeds.empty())
            lists = lists_from_defining_set(doc.graph, require_coloring(doc), seed_set(s, doc));
        else if (doc.lists)
            lists = *doc.lists;
        else
            lists = ListAssignment(doc.graph.order(), ColorSet::full(palette));

        SolveOptions options;
        options.max_rounds = s.rounds_cap;
        if (s.rounds_cap && *s.rounds_cap < 1)
            throw InputError("--rounds-cap must be at least 1");
        SequentialColorer colorer(doc.graph, doc.effective_ordering(), rb);
        auto result = colorer.solve(lists, options);

        Json j = solve_json(doc, result, s.trace);
        if (doc.coloring && result.done)
            j["matches_coloring"] = result.coloring(palette)->colors == doc.coloring->colors;
        if (s.dot_out) {
            auto ordering = colorer.ordering();
            DotStyle style{&ordering, nullptr, &result.lists, vertex_names(doc)};
            write_text(*s.dot_out, to_dot(doc.graph, style), out);
        }
        if (!s.dot_out || *s.dot_out != "-" || s.json_out)
            emit(s, j, out);
        return result.done ? exit_yes : exit_no;
    }

    // ---- sds --------------------------------------------------------------

    auto search_options(const Settings& s, const InstanceDocument& doc) -> SearchOptions
    {
        SearchOptions o;
        o.k = k_of(s, doc);
        o.budget = s.budget;
        o.threads = std::max(1U, s.threads);
        o.prune = !s.no_prune;
        return o;
    }

    auto search_json(const InstanceDocument& doc, const SdsSearchResult& r) -> Json
    {
        Json j;
        j["status"] = std::string(to_string(r.status));
        j["number"] = r.number ? Json(*r.number) : Json(nullptr);
        j["witness"] = r.witness ? witness_json(doc, *r.witness) : Json(nullptr);
        j["nodes_explored"] = r.nodes_explored;
        return j;
    }

    auto cmd_sds(const std::string& action, const Settings& s, std::ostream& out, std::ostream& err) -> int
    {
        auto doc = read_document(s.instance);
        warn(doc, err);
        const int palette = doc.effective_palette();
        auto rb = pick_rulebase(s, doc, palette);
        SequentialColorer colorer(doc.graph, doc.effective_ordering(), rb);

        if (action == "verify") {
            auto w = verify_sds(colorer, require_coloring(doc), seed_set(s, doc), k_of(s, doc));
            Json j{{"sds", w.has_value()}, {"witness", w ? witness_json(doc, *w) : Json(nullptr)}};
            emit(s, j, out);
            return w ? exit_yes : exit_no;
        }
        if (action == "wsdn" || action == "ssdn") {
            const auto mode = action == "wsdn" ? SdsMode::weak : SdsMode::strong;
            auto r = sdn(mode, colorer, require_coloring(doc), search_options(s, doc));
            Json j = search_json(doc, r);
            j["mode"] = std::string(to_string(mode));
            if (r.status == SearchStatus::exceeded_budget)
                throw BudgetBreach{j};
            emit(s, j, out);
            return r.status == SearchStatus::found ? exit_yes : exit_no;
        }
        // colwds / colsds
        const auto mode = action == "colwds" ? SdsMode::weak : SdsMode::strong;
        const auto xi = s.xi ? s.xi : doc.xi;
        if (!xi)
            throw InputError("--xi is required");
        auto r = exists_coloring_with_sdn_le(mode, {doc.graph, doc.effective_ordering()}, rb, *xi,
                                             search_options(s, doc), oracle_cap(s));
        Json j;
        j["answer"] = r.status == SearchStatus::found;
        j["status"] = std::string(to_string(r.status));
        j["xi"] = *xi;
        j["colorings_tried"] = r.colorings_tried;
        if (r.coloring) {
            Json c = Json::object();
            for (VertexId v = 0; v < doc.graph.order(); ++v)
                c[doc.name(v)] = r.coloring->colors[v];
            j["coloring"] = c;
        }
        j["witness"] = r.witness ? witness_json(doc, *r.witness) : Json(nullptr);
        if (r.status == SearchStatus::exceeded_budget)
            throw BudgetBreach{j};
        emit(s, j, out);
        return r.status == SearchStatus::found ? exit_yes : exit_no;
    }

    // ---- gadget / reduce --------------------------------------------------

    void emit_gadget(const Settings& s, const GadgetInstance& g, std::ostream& out, Json extra = Json::object())
    {
        auto doc = document_from_gadget(g);
        if (s.dot_out) {
            DotStyle style{&g.ordering, g.coloring.colors.empty() ? nullptr : &g.coloring, nullptr,
                           vertex_names(doc)};
            write_text(*s.dot_out, to_dot(g.shape.graph, style), out);
        }
        if (s.dot_out && *s.dot_out == "-" && !s.json_out)
            return;
        auto j = Json::parse(to_json(doc));
        for (auto& [key, value] : extra.items())
            j[key] = value;
        emit(s, j, out);
    }

    auto need(const std::optional<int>& value, const char* flag) -> int
    {
        if (!value)
            throw InputError(std::string(flag) + " is required");
        return *value;
    }

    auto cmd_gadget(const std::string& family, const Settings& s, std::ostream& out) -> int
    {
        try {
            GadgetInstance g;
            if (family == "D")
                g = build_D(need(s.k, "--k"));
            else if (family == "Gxi")
                g = build_G_xi(need(s.xi, "--xi"), need(s.k, "--k"));
            else if (family == "F")
                g = build_F(need(s.k, "--k"));
            else
                g = build_H(need(s.n, "--n"));
            emit_gadget(s, g, out);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        return exit_yes;
    }

    auto read_json_file(const std::string& path) -> Json
    {
        std::ifstream in(path);
        if (!in)
            throw InputError("cannot open '" + path + "'");
        try {
            return Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("malformed witness JSON: ") + e.what());
        }
    }

    auto cmd_reduce(const std::string& kind, const Settings& s, std::ostream& out, std::ostream& err) -> int
    {
        auto doc = read_document(s.instance);
        warn(doc, err);
        const OrderedGraph base{doc.graph, doc.effective_ordering()};
        std::optional<Json> witness;
        if (!s.witness.empty())
            witness = read_json_file(s.witness);

        auto ids_from = [&](const Json& arr) {
            std::vector<VertexId> vs;
            if (!arr.is_array())
                throw InputError("witness 'cover' must be an array of vertex ids");
            for (const auto& x : arr)
                vs.push_back(doc.resolve(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>())));
            return vs;
        };

        ReductionOutput r;
        std::optional<int> k;
        try {
            if (kind == "3col") {
                k = need(s.k ? s.k : doc.k, "--k");
                std::optional<Coloring> c;
                if (witness) {
                    if (!witness->contains("coloring"))
                        throw InputError("3col witness needs a 'coloring' object");
                    Coloring col{std::vector<Color>(doc.graph.order(), 0), 3};
                    for (const auto& [id, value] : (*witness)["coloring"].items())
                        col.colors[doc.resolve(id)] = value.get<int>();
                    c = col;
                } else if (doc.coloring) {
                    c = doc.coloring;
                }
                const auto mode = s.mode == "strong" ? ReductionMode::strong : ReductionMode::weak;
                if (s.mode != "weak" && s.mode != "strong")
                    throw InputError("--mode must be weak or strong");
                r = reduce_3col(base, *k, mode, c);
            } else {
                std::optional<std::vector<VertexId>> cover;
                if (witness) {
                    if (!witness->contains("cover"))
                        throw InputError("vertex cover witness needs a 'cover' array");
                    cover = ids_from((*witness)["cover"]);
                }
                const int t = need(s.t, "--t");
                if (kind == "vc-sds") {
                    k = need(s.k ? s.k : doc.k, "--k");
                    r = reduce_vertexcover_sds(base, t, *k, cover);
                } else {
                    k = 1;
                    r = reduce_vertexcover_rulebase(base, t, cover);
                }
            }
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }

        Json extra;
        extra["bound"] = r.bound;
        extra["ranks_compacted"] = r.ranks_compacted;
        bool ok = true;
        if (r.certificate) {
            auto inst_doc = document_from_gadget(r.instance);
            Json cert;
            cert["set"] = names_json(inst_doc, *r.certificate);
            auto w = verify_sds(r.instance.ordered(), *r.certificate, rule_base_rt(3), k);
            const bool strong = kind == "vc-sds" || s.mode == "strong";
            ok = w && (strong ? w->index() <= r.bound : static_cast<int>(w->set.size()) <= r.bound);
            cert["verified"] = ok;
            cert["rounds"] = w ? Json(w->rounds) : Json(nullptr);
            cert["index"] = w ? Json(w->index()) : Json(nullptr);
            extra["certificate"] = cert;
        }
        emit_gadget(s, r.instance, out, extra);
        return ok ? exit_yes : exit_no;
    }

    // ---- oracle -----------------------------------------------------------

    auto cmd_oracle(const std::string& action, const Settings& s, std::ostream& out, std::ostream& err) -> int
    {
        auto doc = read_document(s.instance);
        warn(doc, err);
        const std::size_t cap = oracle_cap(s);
        const int palette = s.t ? *s.t : doc.effective_palette();
        Json j;
        int code = exit_yes;

        if (action == "enumerate") {
            ListAssignment lists = doc.lists ? *doc.lists : ListAssignment(doc.graph.order(), ColorSet::full(palette));
            const std::size_t count_cap = s.budget ? static_cast<std::size_t>(*s.budget) : SIZE_MAX;
            auto e = oracle::enumerate_solutions({doc.graph, lists, palette}, count_cap, cap);
            Json sols = Json::array();
            for (const auto& sol : e.solutions) {
                Json c = Json::object();
                for (VertexId v = 0; v < sol.size(); ++v)
                    c[doc.name(v)] = sol[v];
                sols.push_back(c);
            }
            j["count"] = e.solutions.size();
            j["overflow"] = e.status == oracle::EnumerationStatus::count_overflow;
            j["solutions"] = sols;
            if (e.status == oracle::EnumerationStatus::count_overflow)
                throw BudgetBreach{j};
            code = e.solutions.empty() ? exit_no : exit_yes;
        } else if (action == "ucg") {
            const bool ucg = oracle::is_ucg(doc.graph, palette, cap);
            j["ucg"] = ucg;
            j["t"] = palette;
            code = ucg ? exit_yes : exit_no;
        } else if (action == "chromatic") {
            auto r = oracle::chromatic_and_clique(doc.graph, cap);
            j["chromatic"] = r.chromatic;
            j["clique"] = r.clique;
        } else {
            if (!doc.transverse)
                throw InputError("this command needs a 'transverse' system in the instance");
            if (action == "transverse-check") {
                const bool ok = oracle::check_transverse(doc.graph, *doc.transverse, palette, cap);
                j["transverse"] = ok;
                j["clique_condition"] = oracle::clique_condition_holds(doc.graph, *doc.transverse, palette);
                code = ok ? exit_yes : exit_no;
            } else {
                if (!oracle::check_transverse(doc.graph, *doc.transverse, palette, cap))
                    throw InputError("the system is not transverse for this graph");
                auto ext = oracle::build_from_transverse(doc.graph, *doc.transverse, palette, cap);
                InstanceDocument built;
                built.graph = ext.graph;
                built.ids = doc.ids;
                for (std::size_t i = 0; i < ext.fixed_class.size(); ++i)
                    built.ids.push_back("v*" + std::to_string(i + 1));
                built.marks = doc.marks;
                built.palette = palette;
                built.ordering = Ordering::identity(built.graph.order());
                j = Json::parse(to_json(built));
                j["fixed_class"] = names_json(built, ext.fixed_class);
            }
        }
        emit(s, j, out);
        return code;
    }

    // ---- audit ------------------------------------------------------------

    auto cmd_audit(const Settings& s, std::ostream& out, std::ostream& err) -> int
    {
        auto doc = read_document(s.instance);
        warn(doc, err);
        const int palette = doc.effective_palette();
        auto rb = pick_rulebase(s, doc, palette);
        const std::size_t cap = oracle_cap(s);

        Json rules = Json::array();
        bool ok = true;
        for (const auto& rule : rb.structural) {
            auto report = validate_rule(rule, palette, 6);
            Json r{{"rule", rule.name},
                   {"skipped", report.skipped},
                   {"assignments", report.assignments},
                   {"shrink_violations", report.shrink_violations},
                   {"solution_violations", report.solution_violations},
                   {"monotonicity_violations", report.monotonicity_violations},
                   {"examples", report.examples}};
            ok = ok && (report.skipped || report.passed());
            rules.push_back(r);
        }

        ListAssignment lists;
        if (!s.seeds.empty())
            lists = lists_from_defining_set(doc.graph, require_coloring(doc), seed_set(s, doc));
        else
            lists = doc.lists ? *doc.lists : ListAssignment(doc.graph.order(), ColorSet::full(palette));

        const bool was = audit_enabled();
        set_audit(true, cap);
        const auto before = engine_stats();
        SolveOptions options;
        options.max_rounds = s.rounds_cap;
        options.record_trace = false;
        auto result = SequentialColorer(doc.graph, doc.effective_ordering(), rb).solve(lists, options);
        const auto after = engine_stats();
        set_audit(was);

        const auto firings = after.audited_firings - before.audited_firings;
        const auto violations = after.audit_violations - before.audit_violations;
        const auto bound_violations = after.bound_violations - before.bound_violations;
        ok = ok && violations == 0 && bound_violations == 0;
        Json j;
        j["rules"] = rules;
        j["run"] = Json{{"done", result.done}, {"status", std::string(to_string(result.status))},
                        {"rounds", result.rounds}};
        j["audited_firings"] = firings;
        j["audit_violations"] = violations;
        j["audited"] = doc.graph.order() <= cap;
        j["round_bound"] = round_bound(lists);
        j["round_bound_violations"] = bound_violations;
        j["passed"] = ok;
        emit(s, j, out);
        return ok ? exit_yes : exit_no;
    }

}  // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Rule-based sequential graph coloring", "seqcol"};
    app.require_subcommand(1);
    Settings s;

    auto add_instance = [&](CLI::App* cmd) {
        cmd->add_option("instance", s.instance, "instance JSON file ('-' for stdin)");
    };
    auto add_rulebase = [&](CLI::App* cmd) {
        cmd->add_option("--rulebase", s.rulebase, "rule base preset: RT, RG or RT+greedy");
    };
    auto add_json_out = [&](CLI::App* cmd) {
        cmd->add_option("--json-out", s.json_out, "write the JSON result to this file");
    };
    auto add_dot_out = [&](CLI::App* cmd) {
        cmd->add_option("--dot-out", s.dot_out, "write DOT to this file ('-' or no value for stdout)")
            ->expected(0, 1)
            ->default_str("-");
    };
    auto add_search = [&](CLI::App* cmd) {
        cmd->add_option("--k", s.k, "round bound (unbounded when omitted)");
        cmd->add_option("--budget", s.budget, "maximum number of candidate sets examined");
        cmd->add_option("--threads", s.threads, "worker threads for the search");
        cmd->add_flag("--no-prune", s.no_prune, "disable must-contain pruning");
        cmd->add_option("--cap", s.cap, "oracle vertex cap");
    };

    auto* color = app.add_subcommand("color", "run the sequential coloring algorithm");
    add_instance(color);
    add_rulebase(color);
    color->add_option("--seeds", s.seeds, "comma-separated seed vertices (labels or ids); needs a coloring");
    color->add_option("--rounds-cap", s.rounds_cap, "stop after this many rounds");
    color->add_flag("--trace", s.trace, "include the per-round change trace");
    add_dot_out(color);
    add_json_out(color);

    auto* sds = app.add_subcommand("sds", "sequential defining sets");
    sds->require_subcommand(1);
    std::string sds_action;
    const std::pair<const char*, const char*> sds_actions[] = {
        {"verify", "check that --seeds is a defining set"},
        {"wsdn", "smallest defining set of the given coloring"},
        {"ssdn", "smallest defining-set index of the given coloring"},
        {"colwds", "find a coloring with a defining set of size at most --xi"},
        {"colsds", "find a coloring with a defining-set index of at most --xi"}};
    for (const auto& [name, about] : sds_actions) {
        auto* sub = sds->add_subcommand(name, about);
        add_instance(sub);
        add_rulebase(sub);
        add_search(sub);
        add_json_out(sub);
        sub->add_option("--seeds", s.seeds, "candidate set for verify");
        sub->add_option("--xi", s.xi, "size or index bound for colwds/colsds");
        sub->callback([&sds_action, name] { sds_action = name; });
    }

    auto* gadget = app.add_subcommand("gadget", "emit a gadget instance");
    gadget->require_subcommand(1);
    std::string gadget_family;
    const std::pair<const char*, const char*> families[] = {{"D", "k-round gadget D_k (--k)"},
                                                            {"Gxi", "spectrum gadget G_xi (--xi, --k)"},
                                                            {"F", "vertex cover gadget F_k (--k)"},
                                                            {"H", "vertex cover gadget H_n (--n)"}};
    for (const auto& [name, about] : families) {
        auto* sub = gadget->add_subcommand(name, about);
        sub->add_option("--k", s.k, "round parameter");
        sub->add_option("--xi", s.xi, "gap parameter");
        sub->add_option("--n", s.n, "size parameter");
        add_json_out(sub);
        add_dot_out(sub);
        sub->callback([&gadget_family, name] { gadget_family = name; });
    }

    auto* reduce = app.add_subcommand("reduce", "build a reduction instance from a graph");
    reduce->require_subcommand(1);
    std::string reduce_kind;
    const std::pair<const char*, const char*> kinds[] = {{"3col", "from 3-coloring"},
                                                         {"vc-sds", "from vertex cover, fixed rule base"},
                                                         {"vc-rulebase", "from vertex cover, rule-base choice"}};
    for (const auto& [name, about] : kinds) {
        auto* sub = reduce->add_subcommand(name, about);
        add_instance(sub);
        sub->add_option("--k", s.k, "round bound");
        sub->add_option("--t", s.t, "vertex cover size bound");
        sub->add_option("--mode", s.mode, "weak or strong (3col)");
        sub->add_option("--witness", s.witness, "JSON with 'coloring' (3col) or 'cover' (vertex cover)");
        add_json_out(sub);
        add_dot_out(sub);
        sub->callback([&reduce_kind, name] { reduce_kind = name; });
    }

    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->require_subcommand(1);
    std::string oracle_action;
    const std::pair<const char*, const char*> actions[] = {
        {"enumerate", "list all proper colorings"},
        {"ucg", "decide unique colorability"},
        {"chromatic", "chromatic and clique numbers"},
        {"transverse-check", "check a transverse system"},
        {"transverse-build", "build the graph of a transverse system"}};
    for (const auto& [name, about] : actions) {
        auto* sub = orc->add_subcommand(name, about);
        add_instance(sub);
        sub->add_option("--t", s.t, "palette size");
        sub->add_option("--cap", s.cap, "oracle vertex cap");
        sub->add_option("--budget", s.budget, "maximum number of solutions listed");
        add_json_out(sub);
        sub->callback([&oracle_action, name] { oracle_action = name; });
    }

    auto* audit = app.add_subcommand("audit", "validate the rules and audit a run");
    add_instance(audit);
    add_rulebase(audit);
    audit->add_option("--seeds", s.seeds, "comma-separated seed vertices");
    audit->add_option("--rounds-cap", s.rounds_cap, "stop after this many rounds");
    audit->add_option("--cap", s.cap, "largest graph audited against the oracle");
    add_json_out(audit);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_yes;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << msg.str();
        return e.get_exit_code() == 0 ? exit_yes : exit_input;
    }

    try {
        if (*color)
            return cmd_color(s, out, err);
        if (*sds)
            return cmd_sds(sds_action, s, out, err);
        if (*gadget)
            return cmd_gadget(gadget_family, s, out);
        if (*reduce)
            return cmd_reduce(reduce_kind, s, out, err);
        if (*orc)
            return cmd_oracle(oracle_action, s, out, err);
        if (*audit)
            return cmd_audit(s, out, err);
    } catch (const BudgetBreach& b) {
        emit(s, b.report, out);
        err << "budget exceeded\n";
        return exit_budget;
    } catch (const oracle::CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

}  // namespace seqcol::cli
