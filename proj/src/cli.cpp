#include "relgraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "relgraph/algebra.hpp"
#include "relgraph/composition.hpp"
#include "relgraph/equivalence.hpp"
#include "relgraph/error.hpp"
#include "relgraph/io.hpp"
#include "relgraph/retract.hpp"
#include "relgraph/solver.hpp"

namespace relgraph {

namespace {

using nlohmann::json;

json graph_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    json doc = {{"order", g.order()}, {"edges", edges}};
    if (!g.labels().empty())
        doc["labels"] = g.labels();
    return doc;
}

json relation_json(const Relation& r)
{
    json pairs = json::array();
    for (auto [x, b] : r.pairs())
        pairs.push_back({x, b});
    return {{"domain_size", r.domain_size()}, {"image_size", r.image_size()}, {"pairs", pairs}};
}

json certificate_json(const Certificate& c)
{
    return {{"kind", to_string(c.kind)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"detail", c.detail}};
}

// Collects one command's results and renders them as text sections or as a
// single JSON document. Graph and relation artifacts are also written to
// --out-dir when one is given.
class Report {
public:
    Report(std::string command, bool json_mode, std::string out_dir, std::ostream& out)
        : json_(json_mode), dir_(std::move(out_dir)), out_(out)
    {
        doc_["command"] = std::move(command);
        if (!dir_.empty())
            std::filesystem::create_directories(dir_);
    }

    void answer(const std::string& word)
    {
        doc_["answer"] = word;
        if (!json_)
            text_ << word << '\n';
    }

    void note(const std::string& key, json value, const std::string& text)
    {
        doc_[key] = std::move(value);
        if (!json_ && !text.empty())
            text_ << text << '\n';
    }

    void graph(const std::string& name, const Graph& g, const std::string& caption)
    {
        doc_[name] = graph_json(g);
        if (!json_)
            text_ << "# " << caption << '\n' << format_graph(g);
        save(name + ".graph", format_graph(g));
    }

    void relation(const std::string& name, const Relation& r, const std::string& caption)
    {
        doc_[name] = relation_json(r);
        if (!json_)
            text_ << "# " << caption << '\n' << format_relation(r);
        save(name + ".rel", format_relation(r));
    }

    // Relation stored inside a JSON array instead of under its own key.
    void listed_relation(const std::string& list, const std::string& file, const Relation& r,
                         const std::string& caption)
    {
        doc_[list].push_back(relation_json(r));
        if (!json_)
            text_ << "# " << caption << '\n' << format_relation(r);
        save(file, format_relation(r));
    }

    void flush()
    {
        if (json_)
            out_ << doc_.dump(2) << '\n';
        else
            out_ << text_.str();
    }

private:
    void save(const std::string& file, const std::string& content)
    {
        if (dir_.empty())
            return;
        std::ofstream f(std::filesystem::path(dir_) / file);
        if (!f)
            throw Error(ErrorKind::parse, dir_ + "/" + file + ": cannot write");
        f << content;
    }

    bool json_;
    std::string dir_;
    std::ostream& out_;
    json doc_ = json::object();
    std::ostringstream text_;
};

VertexSet parse_subset(const std::string& text, std::size_t universe)
{
    VertexSet out(universe);
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item.substr(first), &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "vertex list: '" + item + "' is not a vertex index");
        }
        if (item.find_first_not_of(" \t", first + pos) != std::string::npos)
            throw Error(ErrorKind::parse, "vertex list: '" + item + "' is not a vertex index");
        if (v >= universe)
            throw Error(ErrorKind::parse, "vertex list: " + std::to_string(v) + " is out of range");
        out.set(v);
    }
    return out;
}

std::string join(const std::vector<Vertex>& vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? " " : "") + std::to_string(vs[i]);
    return out;
}

int exit_for(bool positive)
{
    return positive ? exit_positive : exit_negative;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Relations between graphs: composition, equivalence, cores and an exhaustive solver", "relgraph"};
    app.require_subcommand(1);
    bool json_mode = false;
    std::string out_dir;
    app.add_flag("--json", json_mode, "Print one JSON document instead of text");
    app.add_option("--out-dir", out_dir, "Also write every graph and relation to files in this directory");

    std::string g_path, h_path, r_path, subset_text;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    auto* apply = sub(&app, "apply", "Print G * R");
    apply->add_option("graph", g_path, "Graph file")->required();
    apply->add_option("relation", r_path, "Relation file")->required();

    auto* apply_weak_cmd = sub(&app, "apply-weak", "Print the loop-free part of G * R");
    apply_weak_cmd->add_option("graph", g_path, "Graph file")->required();
    apply_weak_cmd->add_option("relation", r_path, "Relation file")->required();

    auto* thin = sub(&app, "thin", "Thin graph and the collapsing relation");
    thin->add_option("graph", g_path, "Graph file")->required();

    bool literal = false;
    auto* rcore_cmd = sub(&app, "rcore", "R-core with relations in both directions");
    rcore_cmd->add_option("graph", g_path, "Graph file")->required();
    rcore_cmd->add_flag("--literal", literal, "Single pass against the original neighbourhoods");

    auto* cocore_cmd = sub(&app, "cocore", "Cocore with its coretraction");
    cocore_cmd->add_option("graph", g_path, "Graph file")->required();
    cocore_cmd->add_flag("--literal", literal, "Single pass against the original neighbourhoods");

    auto* core_cmd = sub(&app, "core", "Graph core (at most 10 vertices) with its retraction");
    core_cmd->add_option("graph", g_path, "Graph file")->required();

    bool strong_flag = false, weak_flag = false;
    auto* equiv = sub(&app, "equiv", "Decide strong or weak relational equivalence");
    equiv->add_option("G", g_path, "First graph file")->required();
    equiv->add_option("H", h_path, "Second graph file")->required();
    auto* strong_opt = equiv->add_flag("--strong", strong_flag, "Strong equivalence (default)");
    equiv->add_flag("--weak", weak_flag, "Weak equivalence")->excludes(strong_opt);

    bool solve_weak = false, full_domain = false;
    bool want_all = false, want_exists = false, want_min = false, want_max = false;
    std::uint64_t node_budget = 0, time_budget = 0;
    unsigned workers = 1;
    auto* solve_cmd = sub(&app, "solve", "Find relations R with G * R = H");
    solve_cmd->add_option("G", g_path, "Source graph file")->required();
    solve_cmd->add_option("H", h_path, "Target graph file")->required();
    solve_cmd->add_flag("--weak", solve_weak, "Solve the loop-free equation instead");
    solve_cmd->add_flag("--full-domain", full_domain, "Every source vertex must be related");
    solve_cmd->add_flag("--all", want_all, "List every solution (default)");
    solve_cmd->add_flag("--exists", want_exists, "Stop at the first solution");
    solve_cmd->add_flag("--minimal", want_min, "List the inclusion-minimal solutions");
    solve_cmd->add_flag("--maximal", want_max, "List the inclusion-maximal solutions");
    solve_cmd->add_option("--node-budget", node_budget, "Search node limit")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--time-budget", time_budget, "Search time limit in milliseconds")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--workers", workers, "Search threads")->check(CLI::Range(1u, 64u));

    auto* check = sub(&app, "check", "Predicates with witnesses");
    check->require_subcommand(1);
    auto* hall = sub(check, "hall", "Hall condition of a relation");
    hall->add_option("relation", r_path, "Relation file")->required();
    auto* reversible = sub(check, "reversible", "Whether (G * R) * R^+ = G");
    reversible->add_option("graph", g_path, "Graph file")->required();
    reversible->add_option("relation", r_path, "Relation file")->required();
    auto* prop_n = sub(check, "prop-n", "Property N");
    prop_n->add_option("graph", g_path, "Graph file")->required();
    auto* prop_nstar = sub(check, "prop-nstar", "Property N*");
    prop_nstar->add_option("graph", g_path, "Graph file")->required();
    auto* retraction = sub(check, "retraction", "Whether R retracts G onto G[SUB]");
    retraction->add_option("graph", g_path, "Graph file")->required();
    retraction->add_option("sub", subset_text, "Comma separated vertex list, e.g. 2,3")->required();
    retraction->add_option("relation", r_path, "Relation file")->required();
    auto* coretraction = sub(check, "coretraction", "Whether G[SUB] * R = G with R fixing SUB");
    coretraction->add_option("graph", g_path, "Graph file")->required();
    coretraction->add_option("sub", subset_text, "Comma separated vertex list, e.g. 2,3")->required();
    coretraction->add_option("relation", r_path, "Relation file")->required();

    auto* decompose_cmd = sub(&app, "decompose", "Split R into an injective and a functional part");
    decompose_cmd->add_option("relation", r_path, "Relation file")->required();

    auto* reduce = sub(&app, "reduce", "Build the instances of the problem reductions");
    reduce->require_subcommand(1);
    auto* hom_to_fulrel = sub(reduce, "hom-to-fulrel", "G + H");
    hom_to_fulrel->add_option("G", g_path, "Graph file")->required();
    hom_to_fulrel->add_option("H", h_path, "Graph file")->required();
    auto* fulrel_to_shom = sub(reduce, "fulrel-to-shom", "G with every vertex copied |V_H| times");
    fulrel_to_shom->add_option("G", g_path, "Graph file")->required();
    fulrel_to_shom->add_option("H", h_path, "Graph file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_positive;
    } catch (const CLI::ParseError& e) {
        err << "relgraph: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        const auto command = app.get_subcommands().front()->get_name();
        if (*apply || *apply_weak_cmd) {
            Report rep(command, json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto r = read_relation_file(r_path);
            auto result = *apply ? apply_strong(g, r) : apply_weak(g, r);
            rep.graph("graph", result, *apply ? "G * R" : "G * R without loops");
            rep.flush();
            return exit_positive;
        }
        if (*thin) {
            Report rep(command, json_mode, out_dir, out);
            auto q = thin_quotient(read_graph_file(g_path));
            rep.note("classes", q.partition.classes(), "");
            rep.graph("thin", q.thin, "thin graph");
            rep.relation("collapse", q.collapse, "collapse: G -> thin");
            rep.flush();
            return exit_positive;
        }
        if (*rcore_cmd) {
            Report rep(command, json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto c = rcore(g, literal ? DeletionMode::literal : DeletionMode::fixpoint);
            rep.note("kept", c.kept, "");
            rep.graph("core", c.core, "R-core, kept vertices: " + join(c.kept));
            rep.relation("to_core", *c.to_core, "G * to_core = core");
            rep.relation("from_core", c.from_core, "core * from_core = G");
            rep.flush();
            return exit_positive;
        }
        if (*cocore_cmd) {
            Report rep(command, json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto c = cocore(g, literal ? DeletionMode::literal : DeletionMode::fixpoint);
            rep.note("kept", c.kept, "");
            rep.graph("cocore", c.core, "cocore, kept vertices: " + join(c.kept));
            rep.relation("coretraction", c.from_core, "cocore * coretraction = G");
            rep.flush();
            return exit_positive;
        }
        if (*core_cmd) {
            Report rep(command, json_mode, out_dir, out);
            auto c = graph_core(read_graph_file(g_path));
            rep.note("kept", c.kept, "");
            rep.graph("core", c.core, "core, kept vertices: " + join(c.kept));
            rep.relation("retraction", c.retraction, "retraction G -> core, onto the kept vertices");
            rep.flush();
            return exit_positive;
        }
        if (*equiv) {
            Report rep(command, json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto h = read_graph_file(h_path);
            auto w = weak_flag ? weakly_equivalent(g, h) : strongly_equivalent(g, h);
            rep.note("kind", weak_flag ? "weak" : "strong", "");
            rep.answer(w ? "EQUIVALENT" : "NOT-EQUIVALENT");
            if (w) {
                rep.relation("forward", w->forward, "G * forward = H");
                rep.relation("backward", w->backward, "H * backward = G");
            }
            rep.flush();
            return exit_for(w.has_value());
        }
        if (*solve_cmd) {
            SolveQuery q;
            q.g = read_graph_file(g_path);
            q.h = read_graph_file(h_path);
            if (q.g.order() > cli_solver_cap || q.h.order() > cli_solver_cap) {
                err << "relgraph: solve accepts graphs with at most " << cli_solver_cap << " vertices\n";
                return exit_usage;
            }
            q.mode = solve_weak ? Mode::weak : Mode::strong;
            q.domain = full_domain ? DomainConstraint::full : DomainConstraint::any;
            if (want_exists)
                q.enumeration = Enumeration::exists;
            else if (want_min)
                q.enumeration = Enumeration::minimal;
            else if (want_max)
                q.enumeration = Enumeration::maximal;
            if (node_budget)
                q.limits.node_budget = node_budget;
            if (time_budget)
                q.limits.time_budget = std::chrono::milliseconds(time_budget);
            q.limits.workers = workers;
            auto result = solve(q);
            const auto& set = result.set;

            Report rep(command, json_mode, out_dir, out);
            rep.note("mode", to_string(q.mode), "");
            rep.note("domain", to_string(q.domain), "");
            rep.note("enumeration", to_string(q.enumeration), "");
            rep.note("complete", set.complete, "");
            rep.note("nodes", set.nodes, "");
            const bool found = !set.solutions.empty();
            if (found)
                rep.answer("SOLVABLE");
            else
                rep.answer(set.complete ? "NO-SOLUTION" : "INCOMPLETE");
            if (found && !set.complete)
                rep.note("partial", true, "# budget exhausted: the solution list is partial");
            rep.note("solution_count", set.solutions.size(),
                     q.enumeration == Enumeration::exists ? "" : "solutions " + std::to_string(set.solutions.size()));
            if (result.certificate)
                rep.note("certificate", certificate_json(*result.certificate),
                         std::string("certificate ") + to_string(result.certificate->kind) + ": " +
                             result.certificate->detail);
            else
                rep.note("certificate", nullptr, "");

            std::vector<std::size_t> shown;
            if (want_min || want_max) {
                rep.note("authoritative", set.complete,
                         set.complete ? "" : "# minimal/maximal lists are not authoritative");
                if (want_min) {
                    rep.note("minimal", set.minimal, "minimal " + std::to_string(set.minimal.size()));
                    for (auto i : set.minimal)
                        shown.push_back(i);
                }
                if (want_max) {
                    rep.note("maximal", set.maximal, "maximal " + std::to_string(set.maximal.size()));
                    for (auto i : set.maximal)
                        if (std::find(shown.begin(), shown.end(), i) == shown.end())
                            shown.push_back(i);
                }
                std::sort(shown.begin(), shown.end());
            } else {
                for (std::size_t i = 0; i < set.solutions.size(); ++i)
                    shown.push_back(i);
            }
            rep.note("listed", shown, "");
            rep.note("solutions", json::array(), "");
            for (auto i : shown) {
                std::ostringstream file;
                file << "solution-" << std::setw(4) << std::setfill('0') << i << ".rel";
                std::string tag;
                if (want_min && std::count(set.minimal.begin(), set.minimal.end(), i))
                    tag += " minimal";
                if (want_max && std::count(set.maximal.begin(), set.maximal.end(), i))
                    tag += " maximal";
                rep.listed_relation("solutions", file.str(), set.solutions[i],
                                    "solution " + std::to_string(i) + tag);
            }
            rep.flush();
            // A partial list still decides --exists, but not an enumeration.
            if (found && (set.complete || q.enumeration == Enumeration::exists))
                return exit_positive;
            return set.complete ? exit_negative : exit_budget;
        }
        if (*hall) {
            Report rep("check hall", json_mode, out_dir, out);
            auto report = hall_check(read_relation_file(r_path));
            rep.answer(report.satisfied ? "TRUE" : "FALSE");
            if (report.satisfied) {
                rep.relation("monomorphism", *report.monomorphism, "injective map contained in R");
            } else {
                const auto s = members(*report.violating);
                rep.note("violating", s, "violating " + join(s));
            }
            rep.flush();
            return exit_for(report.satisfied);
        }
        if (*reversible) {
            Report rep("check reversible", json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto r = read_relation_file(r_path);
            const bool yes = is_reversible(g, r);
            rep.answer(yes ? "TRUE" : "FALSE");
            rep.flush();
            return exit_for(yes);
        }
        if (*prop_n || *prop_nstar) {
            const bool star = prop_nstar->parsed();
            Report rep(star ? "check prop-nstar" : "check prop-n", json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            const bool yes = star ? property_n_star(g) : property_n(g);
            rep.answer(yes ? "TRUE" : "FALSE");
            if (!yes && !star) {
                for (Vertex x = 0; x < g.order(); ++x)
                    for (Vertex y = 0; y < g.order(); ++y)
                        if (x != y && g.neighbors(x).is_subset_of(g.neighbors(y))) {
                            rep.note("witness", {x, y},
                                     "witness N(" + std::to_string(x) + ") is inside N(" + std::to_string(y) + ")");
                            x = y = g.order();
                            break;
                        }
            } else if (!yes) {
                for (Vertex x = 0; x < g.order(); ++x) {
                    std::vector<Vertex> u;
                    VertexSet acc(g.order());
                    for (Vertex y = 0; y < g.order(); ++y)
                        if (y != x && g.neighbors(y).is_subset_of(g.neighbors(x))) {
                            u.push_back(y);
                            acc |= g.neighbors(y);
                        }
                    if (!u.empty() && acc == g.neighbors(x)) {
                        rep.note("witness", {{"vertex", x}, {"union_of", u}},
                                 "witness N(" + std::to_string(x) + ") = union of N over " + join(u));
                        break;
                    }
                }
            }
            rep.flush();
            return exit_for(yes);
        }
        if (*retraction || *coretraction) {
            const bool co = coretraction->parsed();
            Report rep(co ? "check coretraction" : "check retraction", json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto r = read_relation_file(r_path);
            auto s = parse_subset(subset_text, g.order());
            const bool yes = co ? is_coretraction(g, s, r) : is_retraction(g, s, r);
            rep.answer(yes ? "TRUE" : "FALSE");
            rep.flush();
            return exit_for(yes);
        }
        if (*decompose_cmd) {
            Report rep(command, json_mode, out_dir, out);
            auto d = decompose(read_relation_file(r_path));
            json carrier = json::array();
            std::string table;
            for (std::size_t b = 0; b < d.carrier.size(); ++b) {
                carrier.push_back({d.carrier[b].first, d.carrier[b].second});
                table += (b ? "\n" : "") + std::string("# b") + std::to_string(b) + " = (" +
                         std::to_string(d.carrier[b].first) + "," + std::to_string(d.carrier[b].second) + ")";
            }
            rep.note("carrier", carrier, table);
            rep.relation("into", d.into, "R_D: source -> B, injective");
            rep.relation("collapse", d.collapse, "R_C: B -> target, functional");
            rep.flush();
            return exit_positive;
        }
        if (*hom_to_fulrel || *fulrel_to_shom) {
            const bool first = hom_to_fulrel->parsed();
            Report rep(first ? "reduce hom-to-fulrel" : "reduce fulrel-to-shom", json_mode, out_dir, out);
            auto g = read_graph_file(g_path);
            auto h = read_graph_file(h_path);
            rep.graph("graph", first ? reduce_hom_to_fulrel(g, h) : reduce_fulrel_to_shom(g, h),
                      first ? "G + H" : "G with every vertex copied |V_H| times");
            rep.flush();
            return exit_positive;
        }
    } catch (const Error& e) {
        err << "relgraph: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "relgraph: " << e.what() << '\n';
        return exit_usage;
    }
    err << "relgraph: no command\n";
    return exit_usage;
}

} // namespace relgraph
