// hfsub: command-line front end.
// Exit codes: 0 success / Yes, 1 No, 2 usage or data error, 3 size or budget guard.

#include "hfs/checks.hpp"
#include "hfs/classify.hpp"
#include "hfs/error.hpp"
#include "hfs/induced.hpp"
#include "hfs/io.hpp"
#include "hfs/oracle.hpp"
#include "hfs/reductions.hpp"
#include "hfs/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef HFS_PATTERN_DIR
#define HFS_PATTERN_DIR "patterns"
#endif

using namespace hfs;

namespace {

enum class Format { Human, Record };

struct Common {
    Format format = Format::Record;
    int jobs = 1;
    std::optional<std::uint64_t> seed;
};

std::string join(const std::vector<Vertex>& vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out.empty() ? "-" : out;
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    return in;
}

/// Writes to `path`, or standard output for "-" / empty.
void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::Parse, "cannot write " + path);
    out << text;
}

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::TooLarge:
    case ErrorKind::BudgetExceeded:
        return 3;
    default:
        return 2;
    }
}

// --- classify -------------------------------------------------------------------

int run_classify(const Common& c, const std::string& pattern, bool diagnostics)
{
    PatternVerdict v = classify(read_graph_file(pattern), diagnostics);
    if (c.format == Format::Record) {
        std::cout << verdict_record(v);
        if (diagnostics) {
            std::string rules, notes;
            for (Rule r : v.applicable)
                rules += (rules.empty() ? "" : ",") + std::string(to_string(r));
            for (const auto& n : v.notes)
                notes += (notes.empty() ? "" : ",") + n;
            std::cout << " applicable=" << (rules.empty() ? "-" : rules) << " notes=" << (notes.empty() ? "-" : notes);
        }
        std::cout << '\n';
    } else {
        std::cout << "status: " << to_string(v.status) << "\nrule: " << to_string(v.rule) << '\n';
        for (const auto& [k, val] : v.witness)
            std::cout << "  " << k << " = " << val << '\n';
        if (diagnostics) {
            std::cout << "applicable rules:";
            for (Rule r : v.applicable)
                std::cout << ' ' << to_string(r);
            std::cout << '\n';
            for (const auto& n : v.notes)
                std::cout << "note: " << n << '\n';
        }
    }
    return 0;
}

// --- solve / oracle / verify ----------------------------------------------------

int run_solve(const Common& c, const std::string& host, const std::string& pattern, int k, bool generic, bool memo,
              const std::string& out)
{
    Graph g = read_graph_file(host);
    Graph h = read_graph_file(pattern);
    SolveOptions opt;
    opt.fast_paths = !generic;
    opt.memo = memo;
    opt.jobs = c.jobs;
    SolveResult r = solve(g, h, k, opt);
    const bool yes = r.answer == Answer::Yes;
    if (c.format == Format::Record)
        std::cerr << "answer=" << to_string(r.answer) << " k=" << k << " steps=" << r.solution.size()
                  << " nodes=" << r.nodes_explored << " method=" << r.method << '\n';
    else
        std::cerr << (yes ? "Yes" : "No") << ": " << r.nodes_explored << " search nodes (" << r.method << ")\n";
    if (yes) {
        std::ostringstream s;
        write_solution(s, r.solution);
        emit(out, s.str());
    }
    return yes ? 0 : 1;
}

int run_oracle(const Common& c, const std::string& problem, const std::string& host, const std::string& pattern,
               int budget, bool no_dedupe, const std::string& witness_out)
{
    Graph g = read_graph_file(host);
    OracleOptions opt;
    opt.dedupe = !no_dedupe;
    OracleResult r;
    std::ostringstream witness;
    auto need_pattern = [&] {
        if (pattern.empty())
            throw Error(ErrorKind::Parse, "--pattern is required for " + problem);
        return read_graph_file(pattern);
    };
    if (problem == "subdivision") {
        r = oracle_subdivision(g, need_pattern(), budget, opt);
        write_solution(witness, r.subdivision_witness);
    } else if (problem == "edge-deletion") {
        r = oracle_edge_deletion(g, need_pattern(), budget, opt);
        write_edge_set(witness, r.deleted_edges);
    } else {
        r = oracle_vertex_cover(g, budget, opt);
        write_vertex_set(witness, r.cover);
    }
    const bool yes = r.answer == Answer::Yes;
    if (c.format == Format::Record)
        std::cout << "problem=" << problem << " answer=" << to_string(r.answer) << " budget=" << budget
                  << " states=" << r.states_visited << " mode=" << r.mode << '\n';
    else
        std::cout << problem << ": " << (yes ? "Yes" : "No") << " (" << r.states_visited << " states, " << r.mode
                  << ")\n";
    if (yes && !witness_out.empty())
        emit(witness_out, witness.str());
    return yes ? 0 : 1;
}

int report_verify(const Common& c, const VerifyReport& v)
{
    if (c.format == Format::Record) {
        std::cout << "valid=" << (v.ok ? "true" : "false") << '\n';
        if (!v.ok)
            std::cerr << v.reason << '\n';
    } else {
        std::cout << (v.ok ? "valid\n" : "invalid: " + v.reason + "\n");
    }
    return v.ok ? 0 : 1;
}

int run_verify(const Common& c, const std::string& problem, const std::string& host, const std::string& pattern,
               int budget, const std::string& witness)
{
    Graph g = read_graph_file(host);
    std::ifstream in = open_in(witness);
    if (problem == "subdivision") {
        if (pattern.empty())
            throw Error(ErrorKind::Parse, "--pattern is required for subdivision");
        return report_verify(c, verify_solution(g, read_graph_file(pattern), budget, parse_solution(in)));
    }
    SourceInstance src{problem == "vertex-cover" ? SourceProblem::VertexCover : SourceProblem::EdgeDeletion, g, budget,
                       std::nullopt};
    SourceWitness w;
    Graph h;
    if (src.problem == SourceProblem::VertexCover) {
        w.vertices = parse_vertex_set(in);
    } else {
        if (pattern.empty())
            throw Error(ErrorKind::Parse, "--pattern is required for edge-deletion");
        h = read_graph_file(pattern);
        w.edges = parse_edge_set(in);
    }
    return report_verify(c, verify_source_witness(src, h, w));
}

// --- reductions -------------------------------------------------------------------

struct ReduceArgs {
    std::string lemma, pattern, source;
    int budget = 0;
    bool allow_ineligible = false;
};

ReductionArtifact build(const ReduceArgs& a)
{
    auto lemma = parse_lemma(a.lemma);
    if (!lemma)
        throw Error(ErrorKind::Parse, "unknown lemma " + a.lemma);
    SourceInstance src{source_problem_for(*lemma), read_graph_file(a.source), a.budget, std::nullopt};
    ReduceOptions opt;
    opt.enforce_preconditions = !a.allow_ineligible;
    return reduce(*lemma, src, read_graph_file(a.pattern), opt);
}

int run_reduce(const Common& c, const ReduceArgs& args, const std::string& out, std::string meta)
{
    ReductionArtifact a = build(args);
    emit(out, graph_to_text(a.target));
    if (meta.empty() && !out.empty() && out != "-")
        meta = out + ".meta";
    if (!meta.empty())
        emit(meta, metadata_text(a));
    if (c.format == Format::Record)
        std::cerr << "lemma=" << to_string(a.lemma) << " target_vertices=" << a.target.vertex_count()
                  << " target_edges=" << a.target.edge_count() << " target_budget=" << a.target_budget
                  << " gadgets=" << a.blocks.size() << '\n';
    else
        std::cerr << to_string(a.lemma) << ": target has " << a.target.vertex_count() << " vertices, "
                  << a.target.edge_count() << " edges, budget " << a.target_budget << '\n';
    return 0;
}

int run_lift(const ReduceArgs& args, const std::string& witness, const std::string& out)
{
    ReductionArtifact a = build(args);
    std::ifstream in = open_in(witness);
    SourceWitness w;
    if (a.source.problem == SourceProblem::VertexCover)
        w.vertices = parse_vertex_set(in);
    else
        w.edges = parse_edge_set(in);
    std::ostringstream s;
    write_solution(s, a.forward(w));
    emit(out, s.str());
    return 0;
}

int run_project(const ReduceArgs& args, const std::string& solution, const std::string& out)
{
    ReductionArtifact a = build(args);
    std::ifstream in = open_in(solution);
    SourceWitness w = a.backward(parse_solution(in));
    std::ostringstream s;
    if (a.source.problem == SourceProblem::VertexCover)
        write_vertex_set(s, w.vertices);
    else
        write_edge_set(s, w.edges);
    emit(out, s.str());
    return 0;
}

// --- search helpers ----------------------------------------------------------------

int run_find(const Common& c, const std::string& host, const std::string& pattern)
{
    Graph g = read_graph_file(host);
    auto e = find_induced_copy(g, read_graph_file(pattern));
    if (c.format == Format::Record)
        std::cout << "found=" << (e ? "yes" : "no") << (e ? " mapping=" + join(e->mapping) : "") << '\n';
    else if (e)
        std::cout << "induced copy on vertices " << join(e->vertex_set()) << '\n';
    else
        std::cout << "no induced copy\n";
    return e ? 0 : 1;
}

int run_count(const Common& c, const std::string& host, const std::string& pattern)
{
    long long n = count_induced_copies(read_graph_file(host), read_graph_file(pattern));
    if (c.format == Format::Record)
        std::cout << "count=" << n << '\n';
    else
        std::cout << n << " induced cop" << (n == 1 ? "y" : "ies") << '\n';
    return 0;
}

int run_sample(const Common& c, const std::string& problem, int size, std::optional<int> girth_req, int budget,
               const std::string& out)
{
    if (!c.seed)
        throw Error(ErrorKind::Parse, "sample needs --seed");
    auto p = parse_source_problem(problem);
    if (!p)
        throw Error(ErrorKind::Parse, "unknown problem " + problem);
    SourceInstance s = sample_source(*p, size, girth_req, *c.seed, budget);
    emit(out, graph_to_text(s.graph));
    return 0;
}

// --- selftest ------------------------------------------------------------------------

int run_selftest(const Common& c, bool quick, const std::string& corpus)
{
    checks::RunOptions opt{c.jobs, c.seed.value_or(1)};
    std::vector<checks::Report> reports;
    // The corpus goes first: a broken corpus is a data error, not a failed property.
    reports.push_back(checks::classifier_corpus(corpus));
    auto solver = quick ? checks::solver_vs_oracle(5, 20, 6, 2, opt) : checks::solver_vs_oracle(7, 500, 8, 3, opt);
    reports.push_back(std::move(solver.agreement));
    reports.push_back(std::move(solver.node_bound));
    reports.push_back(checks::edge_deletion_equivalence(quick ? 5 : 6, 2, opt));
    for (auto& r : checks::reduction_checks(quick ? 3 : 50, opt))
        reports.push_back(std::move(r));
    reports.push_back(checks::girth4_all_sweep(quick ? 6 : 7, opt));
    reports.push_back(checks::indestructibility(quick ? 500 : 10000, 10, opt));
    int failed = 0;
    for (const auto& r : reports) {
        failed += !r.ok();
        if (c.format == Format::Record) {
            std::cout << r.summary() << '\n';
        } else {
            std::cout << (r.ok() ? "pass " : "FAIL ") << r.name << ": " << r.cases - r.failures << "/" << r.cases
                      << '\n';
        }
        for (const auto& d : r.failure_details)
            std::cerr << "  " << r.name << ": " << d << '\n';
    }
    if (c.format == Format::Record)
        std::cout << "selftest=" << (failed ? "fail" : "pass") << " checks=" << reports.size() << " failed=" << failed
                  << '\n';
    else
        std::cout << (failed ? std::to_string(failed) + " check(s) failed\n" : "all checks passed\n");
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"H-free subdivision toolkit"};
    app.require_subcommand(1);
    Common common;
    std::string format = "record";
    app.add_option("--format", format, "human or record")->check(CLI::IsMember({"human", "record"}));
    app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomised paths");
    app.fallthrough();

    std::string host, pattern, source, out, meta, witness, corpus = HFS_PATTERN_DIR, problem, lemma;
    int k = 0, size = 0, budget = 1;
    std::optional<int> girth_req;
    bool diagnostics = false, generic = false, memo = false, quick = false, no_dedupe = false;

    auto* classify_cmd = app.add_subcommand("classify", "classify a pattern");
    classify_cmd->add_option("--pattern", pattern)->required()->check(CLI::ExistingFile);
    classify_cmd->add_flag("--diagnostics", diagnostics, "list every applicable rule");

    auto* solve_cmd = app.add_subcommand("solve", "decide H-free Subdivision");
    solve_cmd->add_option("--host", host)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--pattern", pattern)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("-k", k, "subdivision budget")->required()->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--no-fast-paths", generic, "always use the branching search");
    solve_cmd->add_flag("--memo", memo, "remember failed states");
    solve_cmd->add_option("--out", out, "certificate file (default standard output)");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive decision");
    oracle_cmd->add_option("--problem", problem)->default_val("subdivision")->check(
        CLI::IsMember({"subdivision", "edge-deletion", "vertex-cover"}));
    oracle_cmd->add_option("--host", host)->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("--pattern", pattern)->check(CLI::ExistingFile);
    auto* ok = oracle_cmd->add_option("-k", k, "budget")->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("-p", k, "vertex cover budget")->check(CLI::NonNegativeNumber)->excludes(ok);
    oracle_cmd->add_flag("--no-dedupe", no_dedupe, "explore without canonical deduplication");
    oracle_cmd->add_option("--witness", witness, "write the witness here");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
    verify_cmd->add_option("--problem", problem)->default_val("subdivision")->check(
        CLI::IsMember({"subdivision", "edge-deletion", "vertex-cover"}));
    verify_cmd->add_option("--host", host)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--pattern", pattern)->check(CLI::ExistingFile);
    auto* vk = verify_cmd->add_option("-k", k, "budget")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("-p", k, "vertex cover budget")->check(CLI::NonNegativeNumber)->excludes(vk);
    verify_cmd->add_option("--solution,--witness", witness)->required()->check(CLI::ExistingFile);

    ReduceArgs rargs;
    auto reduction_options = [&](CLI::App* cmd) {
        cmd->add_option("--lemma", rargs.lemma)->required()->check(CLI::IsMember(
            {"edge-del-eq", "degree3", "roof", "hanging", "girth4a", "girth4b", "tree-even", "tree-odd"}));
        cmd->add_option("--pattern", rargs.pattern)->required()->check(CLI::ExistingFile);
        cmd->add_option("--source", rargs.source)->required()->check(CLI::ExistingFile);
        auto* bk = cmd->add_option("-k", rargs.budget, "source budget")->check(CLI::NonNegativeNumber);
        cmd->add_option("-p", rargs.budget, "vertex cover budget")->check(CLI::NonNegativeNumber)->excludes(bk);
        cmd->add_flag("--allow-ineligible", rargs.allow_ineligible, "build even when the pattern misses a hypothesis");
    };
    auto* reduce_cmd = app.add_subcommand("reduce", "build a reduction target");
    reduction_options(reduce_cmd);
    reduce_cmd->add_option("--out", out, "target graph file (default standard output)");
    reduce_cmd->add_option("--meta", meta, "metadata sidecar (default <out>.meta)");
    auto* lift_cmd = app.add_subcommand("lift", "map a source witness to a target solution");
    reduction_options(lift_cmd);
    lift_cmd->add_option("--witness", witness)->required()->check(CLI::ExistingFile);
    lift_cmd->add_option("--out", out);
    auto* project_cmd = app.add_subcommand("project", "map a target solution to a source witness");
    reduction_options(project_cmd);
    project_cmd->add_option("--solution", witness)->required()->check(CLI::ExistingFile);
    project_cmd->add_option("--out", out);

    auto* find_cmd = app.add_subcommand("find", "find one induced copy");
    find_cmd->add_option("--host", host)->required()->check(CLI::ExistingFile);
    find_cmd->add_option("--pattern", pattern)->required()->check(CLI::ExistingFile);
    auto* count_cmd = app.add_subcommand("count", "count induced copies");
    count_cmd->add_option("--host", host)->required()->check(CLI::ExistingFile);
    count_cmd->add_option("--pattern", pattern)->required()->check(CLI::ExistingFile);

    auto* sample_cmd = app.add_subcommand("sample", "sample a source instance");
    sample_cmd->add_option("--problem", problem)->required()->check(
        CLI::IsMember({"vertex-cover", "edge-deletion", "p3-free-edge-deletion", "p4-free-edge-deletion"}));
    sample_cmd->add_option("--size", size)->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--girth", girth_req)->check(CLI::PositiveNumber);
    sample_cmd->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    sample_cmd->add_option("--out", out);

    auto* selftest_cmd = app.add_subcommand("selftest", "run the small-instance property suite");
    selftest_cmd->add_flag("--quick", quick, "smaller deterministic subsample");
    selftest_cmd->add_option("--corpus", corpus, "pattern corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    common.format = format == "human" ? Format::Human : Format::Record;
    if (seed_opt->count())
        common.seed = seed;

    try {
        if (*classify_cmd)
            return run_classify(common, pattern, diagnostics);
        if (*solve_cmd)
            return run_solve(common, host, pattern, k, generic, memo, out);
        if (*oracle_cmd)
            return run_oracle(common, problem, host, pattern, k, no_dedupe, witness);
        if (*verify_cmd)
            return run_verify(common, problem, host, pattern, k, witness);
        if (*reduce_cmd)
            return run_reduce(common, rargs, out, meta);
        if (*lift_cmd)
            return run_lift(rargs, witness, out);
        if (*project_cmd)
            return run_project(rargs, witness, out);
        if (*find_cmd)
            return run_find(common, host, pattern);
        if (*count_cmd)
            return run_count(common, host, pattern);
        if (*sample_cmd)
            return run_sample(common, problem, size, girth_req, budget, out);
        if (*selftest_cmd)
            return run_selftest(common, quick, corpus);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
