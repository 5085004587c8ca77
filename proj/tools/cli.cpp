#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mcds/analysis.hpp"
#include "mcds/enumerator.hpp"
#include "mcds/generators.hpp"
#include "mcds/io.hpp"
#include "mcds/oracle.hpp"

namespace mcds::cli {

namespace {

struct Options {
    std::string graph_file;
    std::string trace_out;
    bool print_stats = false;
    int threads = 1;
    int max_n = 24;

    std::string out_file;
    int k = 3;
    int n_u = 4;
    int n_w = 4;
    std::uint64_t seed = 0;
    int max_retries = 1000;

    std::string vector;
    double tol = 1e-12;

    std::string trace_in;
    int n = 0;
};

void emit(std::ostream& out, const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-")
        out << contents;
    else
        write_file(path, contents);
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto g = parse_graph(read_file(o.graph_file));
    EnumOptions eo;
    eo.record_trace = !o.trace_out.empty();
    eo.threads = o.threads;
    const auto res = enumerate_mcds(g, eo);
    out << format_solutions(res.solutions);
    if (eo.record_trace) {
        std::ostringstream ts;
        write_trace(ts, res.trace);
        write_file(o.trace_out, ts.str());
    }
    if (o.print_stats) {
        err << res.stats.to_string() << "duplicates_discarded " << res.duplicates_discarded << '\n'
            << "growth_bound " << std::setprecision(6) << growth_bound(g.n()) << '\n'
            << "growth_check " << (growth_check(res.stats, g.n()) ? "pass" : "FAIL") << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph_file));
    OracleOptions oo;
    oo.max_n = o.max_n;
    oo.threads = o.threads;
    out << format_solutions(enumerate_mcds_bruteforce(g, oo));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph_file));
    OracleOptions oo;
    oo.max_n = o.max_n;
    oo.threads = o.threads;
    const auto oracle = enumerate_mcds_bruteforce(g, oo);
    const auto mine = enumerate_mcds(g).solutions;
    const bool same = oracle == mine;
    out << (same ? "agree" : "DISAGREE") << ": enumerator " << mine.size() << ", oracle " << oracle.size() << '\n';
    for (const auto& d : set_difference(mine, oracle)) out << "only-enumerator " << d.to_string() << '\n';
    for (const auto& d : set_difference(oracle, mine)) out << "only-oracle " << d.to_string() << '\n';
    return same ? kExitOk : kExitFailed;
}

int cmd_gen_lower(const Options& o, std::ostream& out) {
    emit(out, o.out_file, serialize_graph(lower_bound_graph({o.k})));
    return kExitOk;
}

int cmd_gen_random(const Options& o, std::ostream& out) {
    emit(out, o.out_file, serialize_graph(random_convex_graph({o.n_u, o.n_w, o.seed, o.max_retries})));
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto raw = parse_graph_raw(read_file(o.graph_file));
    const auto rep = validate(raw.n_u, raw.n_w, raw.intervals);
    out << "nU " << raw.n_u << " nW " << raw.n_w << '\n';
    out << "well-formed " << (rep.well_formed() ? "yes" : "no") << '\n';
    for (const auto& issue : rep.interval_errors) {
        out << "  ";
        if (issue.u_index > 0)
            out << "line " << raw.interval_lines[static_cast<std::size_t>(issue.u_index - 1)] << " u" << issue.u_index << ": ";
        out << issue.message << '\n';
    }
    if (!rep.well_formed()) return kExitFailed;
    out << "connected " << (rep.connected ? "yes" : "no") << '\n';
    out << "star " << (rep.is_star ? "yes (center " + label(*rep.star_center) + ")" : std::string("no")) << '\n';
    out << "isolated " << (rep.isolated_vertices.empty() ? "none" : rep.isolated_vertices.to_string()) << '\n';
    return rep.connected ? kExitOk : kExitFailed;
}

std::optional<BranchingVector> parse_vector(const std::string& text) {
    std::vector<int> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) return std::nullopt;
            c.push_back(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    try {
        return BranchingVector(std::move(c));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

int cmd_alpha(const Options& o, std::ostream& out, std::ostream& err) {
    const auto v = parse_vector(o.vector);
    if (!v) {
        err << "alpha: --vector expects comma-separated positive integers, got '" << o.vector << "'\n";
        return kExitUsage;
    }
    out << std::fixed << std::setprecision(12) << branching_number(*v, o.tol) << '\n';
    return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
    std::ifstream in(o.trace_in);
    if (!in) throw std::runtime_error("cannot open '" + o.trace_in + "'");
    const auto trace = parse_trace(in);
    const auto stats = stats_from_trace(trace);
    const auto measure = verify_measure_trace(trace);
    const bool growth = growth_check(stats, o.n);
    out << stats.to_string();
    out << "edges_checked " << measure.edges_checked << '\n';
    for (const auto& v : measure.violations)
        out << "violation line " << v.line << ' ' << v.step << ' ' << v.label << " declared " << v.declared
            << " actual " << v.actual << '\n';
    out << "growth_bound " << std::setprecision(6) << growth_bound(o.n) << '\n';
    out << "growth_check " << (growth ? "pass" : "FAIL") << '\n';
    out << "measure_check " << (measure.ok() ? "pass" : "FAIL") << '\n';
    return growth && measure.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate minimal connected dominating sets of convex bipartite graphs", "mcds"};
    app.require_subcommand(1);
    Options o;

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate with the branching algorithm");
    enumerate->add_option("file", o.graph_file, "Graph file")->required();
    enumerate->add_option("--trace", o.trace_out, "Write the search-tree trace here");
    enumerate->add_flag("--stats", o.print_stats, "Print search-tree statistics to stderr");
    enumerate->add_option("--threads", o.threads, "Workers over Stage-1 seeds (0 = all cores)");

    auto* oracle = app.add_subcommand("oracle", "Enumerate by brute force");
    oracle->add_option("file", o.graph_file, "Graph file")->required();
    oracle->add_option("--max-n", o.max_n, "Refuse graphs with more vertices");
    oracle->add_option("--threads", o.threads, "Workers (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "Compare the enumerator against the oracle");
    verify->add_option("file", o.graph_file, "Graph file")->required();
    verify->add_option("--max-n", o.max_n, "Oracle cap");
    verify->add_option("--threads", o.threads, "Oracle workers (0 = all cores)");

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    auto* lower = gen->add_subcommand("lower", "Lower-bound family with 3^k solutions");
    lower->add_option("--k", o.k, "Odd k >= 3")->required();
    lower->add_option("-o,--output", o.out_file, "Output file (default stdout)");
    auto* random = gen->add_subcommand("random", "Seeded random connected convex bipartite graph");
    random->add_option("--nu", o.n_u, "|U|")->required();
    random->add_option("--nw", o.n_w, "|W|")->required();
    random->add_option("--seed", o.seed, "Seed")->required();
    random->add_option("--max-retries", o.max_retries, "Resampling budget");
    random->add_option("-o,--output", o.out_file, "Output file (default stdout)");

    auto* check = app.add_subcommand("check", "Validate a graph file");
    check->add_option("file", o.graph_file, "Graph file")->required();

    auto* alpha = app.add_subcommand("alpha", "Branching number of a branching vector");
    alpha->add_option("--vector", o.vector, "Comma-separated decreases, e.g. 2,2,3")->required();
    alpha->add_option("--tol", o.tol, "Bisection tolerance");

    auto* stats = app.add_subcommand("stats", "Summarize and verify a search-tree trace");
    stats->add_option("--trace", o.trace_in, "Trace file")->required();
    stats->add_option("-n", o.n, "Number of vertices of the traced graph")->required();

    std::vector<std::string> argv_storage{"mcds"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(o, out, err);
        if (*oracle) return cmd_oracle(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*lower) return cmd_gen_lower(o, out);
        if (*random) return cmd_gen_random(o, out);
        if (*check) return cmd_check(o, out);
        if (*alpha) return cmd_alpha(o, out, err);
        if (*stats) return cmd_stats(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TraceParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mcds::cli
