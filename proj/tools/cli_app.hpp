#pragma once

// Command-line front end. run_cli writes to the given streams and returns
// the process exit code:
//   0 success / every claim passed, 1 some claim failed,
//   2 usage or parse error, 3 capacity (envelope) error.

#include "dorient/dorient.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dorient::cli {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2, kCapacity = 3 };

struct Common {
    bool json = false;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    bool mc = false;
    bool force = false;
    bool progress = false;
};

inline Graph resolve_graph(const std::string& descriptor, const std::string& file)
{
    if (!descriptor.empty() && !file.empty()) throw ParseError("give either --graph or --graph-file, not both");
    if (!file.empty()) {
        auto parsed = read_graph_file(file);
        if (auto* g = std::get_if<Graph>(&parsed)) return *g;
        throw ParseError(file + ": expected only e lines");
    }
    if (descriptor.empty()) throw ParseError("missing --graph or --graph-file");
    return named_graph(descriptor);
}

inline Digraph resolve_digraph(const std::string& descriptor, const std::string& file)
{
    if (!descriptor.empty() && !file.empty()) throw ParseError("give either --forbidden or --forbidden-file, not both");
    if (!file.empty()) {
        auto parsed = read_graph_file(file);
        if (auto* d = std::get_if<Digraph>(&parsed)) return *d;
        throw ParseError(file + ": expected only a lines");
    }
    if (descriptor.empty()) throw ParseError("missing --forbidden or --forbidden-file");
    return named_digraph(descriptor);
}

inline std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline std::string describe_edges(const Graph& g) { return describe(g) + "  " + to_string(g); }

inline void print_cost(std::ostream& err, const std::string& what, const std::string& estimate)
{
    err << "--force: " << what << ", estimated cost " << estimate << "\n";
}

inline int cmd_graph(const Graph& g, const Common& c, std::ostream& out)
{
    if (c.json) {
        Json j = to_json(g);
        j["name"] = describe(g);
        if (g.order() <= kChromaticMaxVertices) j["chromatic_number"] = chromatic_number(g);
        out << render(j);
        return kOk;
    }
    out << "vertices " << g.order() << "\nedges " << g.size() << "\nname " << describe(g) << "\n";
    if (g.order() <= kChromaticMaxVertices) out << "chromatic_number " << chromatic_number(g) << "\n";
    out << write_graph_text(g);
    return kOk;
}

inline int cmd_count(const Graph& g, const Digraph& h, const Common& c, std::ostream& out, std::ostream& err)
{
    if (c.mc) {
        if (c.samples < 1) throw ParseError("--samples must be at least 1");
        auto e = mc_estimate(g, h, c.samples, c.seed);
        if (c.json) {
            out << render(to_json(e));
        } else {
            out << "samples " << e.samples << "\nhits " << e.hits << "\np_contains " << to_fraction_string(e.estimate)
                << " (" << to_decimal_string(e.estimate) << ")\nstderr <= " << to_decimal_string(e.stderr_bound, 12)
                << "\n";
        }
        return kOk;
    }
    CountOptions opt;
    opt.threads = c.threads;
    opt.force = c.force;
    if (c.force && g.size() > kExactMaxEdges) print_cost(err, "exact count", "up to 2^" + std::to_string(g.size()) + " leaves");
    auto r = count_hfree(g, h, opt);
    if (c.json) {
        out << render(to_json(r));
    } else {
        out << "hfree " << to_string(r.hfree) << "\ntotal " << to_string(r.total) << "\np_contains "
            << to_fraction_string(r.p_contains) << " (" << to_decimal_string(r.p_contains) << ")\n";
    }
    return kOk;
}

inline int cmd_count_conditioned(const PartialOrientation& p, const Digraph& h, const Common& c, std::ostream& out)
{
    CountOptions opt;
    opt.threads = c.threads;
    opt.force = c.force;
    auto r = count_hfree_conditioned(p.base(), h, p, opt);
    if (c.json) {
        out << render(to_json(r));
    } else {
        out << "free_edges " << p.free_indices().size() << "\nhfree " << to_string(r.hfree) << "\ntotal "
            << to_string(r.total) << "\np_contains " << to_fraction_string(r.p_contains) << " ("
            << to_decimal_string(r.p_contains) << ")\n";
    }
    return kOk;
}

inline int cmd_decomp(const Graph& h, std::optional<int> t, const Common& c, std::ostream& out)
{
    auto r = decomposition_family(h, t, c.threads);
    if (c.json) {
        out << render(to_json(r));
        return kOk;
    }
    out << "p " << r.p << "\nt " << r.t_used << "\nmembers " << r.members.size() << "\n";
    for (const auto& m : r.members) out << "  " << describe_edges(m) << "\n";
    return kOk;
}

inline int cmd_mprime(const Digraph& h, std::optional<int> t, const Common& c, std::ostream& out)
{
    auto rs = directed_family(h, t);
    if (c.json) {
        Json members = Json::array(), family = Json::array();
        for (const auto& r : rs) {
            family.push_back(to_json(r));
            if (r.all_orientations_in) members.push_back(to_json(r.base));
        }
        out << render(Json{{"m_prime", members}, {"family", family}});
        return kOk;
    }
    std::vector<Graph> members;
    for (const auto& r : rs)
        if (r.all_orientations_in) members.push_back(r.base);
    out << "m_prime " << members.size() << "\n";
    for (const auto& m : members) out << "  " << describe_edges(m) << "\n";
    out << "family\n";
    for (const auto& r : rs) {
        out << "  " << describe(r.base) << ": " << r.member_orientations.size() << " of " << r.orientation_classes
            << " orientation classes\n";
        for (const auto& o : r.member_orientations) out << "    " << to_string(o) << "\n";
    }
    return kOk;
}

inline SearchOptions search_options(const Common& c, std::ostream& err)
{
    SearchOptions opt;
    opt.threads = c.threads;
    opt.force = c.force;
    opt.progress = c.progress ? &err : nullptr;
    return opt;
}

inline int cmd_extremal(int n, const std::vector<Graph>& family, const Common& c, std::ostream& out, std::ostream& err)
{
    if (c.force && n > kExtremalMaxVertices) print_cost(err, "extremal search", "all isomorphism classes on " + std::to_string(n) + " vertices");
    auto r = extremal_number(n, family, search_options(c, err));
    if (c.json) {
        out << render(to_json(r));
        return kOk;
    }
    out << "n " << r.n << "\nex " << r.max_edges << "\nwitnesses " << r.witnesses.size() << "\n";
    for (const auto& w : r.witnesses) out << "  " << to_string(w) << "\n";
    return kOk;
}

inline int cmd_maxd(int n, const Digraph& h, const Common& c, std::ostream& out, std::ostream& err)
{
    if (c.force && n > kMaxDMaxVertices) print_cost(err, "max_d", "one exact count per isomorphism class on " + std::to_string(n) + " vertices");
    auto r = max_d(n, h, search_options(c, err));
    if (c.json) {
        out << render(to_json(r));
        return kOk;
    }
    out << "n " << r.n << "\nmax_d " << to_string(r.max_count) << "\nwitnesses " << r.witnesses.size() << "\n";
    for (const auto& w : r.witnesses) out << "  " << describe_edges(w) << "\n";
    return kOk;
}

inline Json to_json(const ClaimReport& r)
{
    Json checks = Json::array();
    for (const auto& s : r.checks)
        checks.push_back({{"name", s.name}, {"expected", s.expected}, {"computed", s.computed}, {"pass", s.pass}});
    return Json{{"id", r.id},           {"description", r.description}, {"tags", r.tags},
                {"expected", r.expected}, {"computed", r.computed},       {"pass", r.pass},
                {"runtime_ms", r.runtime_ms}, {"checks", checks},          {"notes", r.notes}};
}

inline int cmd_verify(const std::string& claim, const std::string& tag, const Common& c, std::ostream& out)
{
    std::vector<ClaimReport> reports;
    if (claim == "all") reports = run_all(tag, c.threads);
    else reports.push_back(run_claim(claim));
    bool all = std::all_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.pass; });
    if (c.json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << render(arr);
        return all ? kOk : kClaimFailed;
    }
    out << std::left << std::setw(22) << "id" << std::setw(26) << "expected" << std::setw(26) << "computed"
        << std::setw(6) << "pass" << "ms\n";
    int passed = 0;
    for (const auto& r : reports) {
        out << std::setw(22) << r.id << std::setw(26) << r.expected << std::setw(26) << r.computed << std::setw(6)
            << (r.pass ? "yes" : "NO") << r.runtime_ms << "\n";
        for (const auto& s : r.checks)
            if (!s.pass) out << "    failed: " << s.name << ": expected " << s.expected << ", computed " << s.computed << "\n";
        passed += r.pass;
    }
    out << passed << "/" << reports.size() << " claims pass\n";
    return all ? kOk : kClaimFailed;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Counting H-free orientations, decomposition families and extremal searches"};
    app.require_subcommand(1);
    Common c;
    auto shared = [&](CLI::App* sub) {
        sub->add_flag("--json", c.json, "JSON output");
        sub->add_option("--threads", c.threads, "worker cap (0 = all cores)");
        sub->add_flag("--force", c.force, "run past the documented size limits");
        sub->add_flag("--progress", c.progress, "status lines on standard error");
    };

    std::string graph, graph_file, forbidden, forbidden_file, claim = "all", tag;
    std::vector<std::string> forbidden_list;
    int n = 0;
    std::optional<int> t;

    auto* g_cmd = app.add_subcommand("graph", "describe a graph");
    shared(g_cmd);
    g_cmd->add_option("--graph", graph, "graph descriptor");
    g_cmd->add_option("--graph-file", graph_file, "graph file");

    auto* count = app.add_subcommand("count", "number of H-free orientations");
    shared(count);
    count->add_option("--graph", graph, "host descriptor, e.g. complete:4");
    count->add_option("--graph-file", graph_file, "host file (e lines; a lines fix edges)");
    count->add_option("--forbidden", forbidden, "oriented pattern, e.g. triangle:cyclic");
    count->add_option("--forbidden-file", forbidden_file, "pattern file with a lines");
    count->add_flag("--mc", c.mc, "Monte Carlo estimate instead of the exact count");
    count->add_option("--samples", c.samples, "Monte Carlo samples");
    count->add_option("--seed", c.seed, "Monte Carlo seed");

    auto* decomp = app.add_subcommand("decomp", "decomposition family of a graph");
    shared(decomp);
    decomp->add_option("--graph", graph, "graph descriptor");
    decomp->add_option("--graph-file", graph_file, "graph file");
    decomp->add_option("--t", t, "part size of the host (default |V(H)|)");

    auto* mprime = app.add_subcommand("mprime", "members all of whose orientations are in the directed family");
    shared(mprime);
    mprime->add_option("--forbidden", forbidden, "oriented pattern");
    mprime->add_option("--forbidden-file", forbidden_file, "pattern file with a lines");
    mprime->add_option("--t", t, "part size of the host (default |V(H)|)");

    auto* extremal = app.add_subcommand("extremal", "ex(n, F) by exhaustive search");
    shared(extremal);
    extremal->add_option("--n", n, "vertex count")->required();
    extremal->add_option("--forbidden", forbidden_list, "forbidden graph descriptor (repeatable)");
    extremal->add_option("--forbidden-file", forbidden_file, "comma-separated graph files");

    auto* maxd = app.add_subcommand("maxd", "maximum of D(G, H) over n-vertex graphs");
    shared(maxd);
    maxd->add_option("--n", n, "vertex count")->required();
    maxd->add_option("--forbidden", forbidden, "oriented pattern");
    maxd->add_option("--forbidden-file", forbidden_file, "pattern file with a lines");

    auto* verify = app.add_subcommand("verify", "run registered claims");
    shared(verify);
    verify->add_option("--claim", claim, "claim id or 'all'");
    verify->add_option("--tag", tag, "only claims with this tag (with --claim all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*g_cmd) return cmd_graph(resolve_graph(graph, graph_file), c, out);
        if (*count) {
            Digraph h = resolve_digraph(forbidden, forbidden_file);
            if (!graph_file.empty() && graph.empty()) {
                auto parsed = read_graph_file(graph_file);
                if (auto* p = std::get_if<PartialOrientation>(&parsed)) {
                    if (c.mc) throw ParseError("--mc does not support partially oriented hosts");
                    return cmd_count_conditioned(*p, h, c, out);
                }
            }
            return cmd_count(resolve_graph(graph, graph_file), h, c, out, err);
        }
        if (*decomp) return cmd_decomp(resolve_graph(graph, graph_file), t, c, out);
        if (*mprime) return cmd_mprime(resolve_digraph(forbidden, forbidden_file), t, c, out);
        if (*extremal) {
            std::vector<Graph> family;
            for (const auto& d : forbidden_list) family.push_back(named_graph(d));
            for (const auto& f : split_list(forbidden_file)) {
                auto parsed = read_graph_file(f);
                if (auto* g = std::get_if<Graph>(&parsed)) family.push_back(*g);
                else throw ParseError(f + ": expected only e lines");
            }
            if (family.empty()) throw ParseError("missing --forbidden or --forbidden-file");
            return cmd_extremal(n, family, c, out, err);
        }
        if (*maxd) return cmd_maxd(n, resolve_digraph(forbidden, forbidden_file), c, out, err);
        if (*verify) return cmd_verify(claim, tag, c, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const UnknownClaim& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace dorient::cli
