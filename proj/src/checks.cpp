#include "hfs/checks.hpp"

#include "hfs/classify.hpp"
#include "hfs/error.hpp"
#include "hfs/families.hpp"
#include "hfs/generators.hpp"
#include "hfs/induced.hpp"
#include "hfs/io.hpp"
#include "hfs/oracle.hpp"
#include "hfs/pattern.hpp"
#include "hfs/solver.hpp"
#include "hfs/special_core.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

namespace hfs::checks {

namespace {

constexpr std::size_t kMaxDetails = 8;

/// Runs f(i) for i in [0, count) on `jobs` threads; f writes only to slot i.
template <class F>
void parallel_for(std::size_t count, int jobs, F f)
{
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                f(i);
        });
    for (auto& th : pool)
        th.join();
}

struct CaseResult {
    std::string record;
    bool ok = true;
    std::string detail;
};

void fold(Report& r, const std::vector<CaseResult>& results)
{
    for (const CaseResult& c : results) {
        ++r.cases;
        r.records.push_back(c.record);
        if (!c.ok) {
            ++r.failures;
            if (r.failure_details.size() < kMaxDetails)
                r.failure_details.push_back(c.record + (c.detail.empty() ? "" : " | " + c.detail));
        }
    }
}

std::string edge_list(const Graph& g)
{
    std::string out = std::to_string(g.vertex_count()) + ":";
    bool first = true;
    for (const Edge& e : g.edges()) {
        out += (first ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
        first = false;
    }
    return out;
}

const char* yes_no(bool b) { return b ? "Yes" : "No"; }

/// g with h planted on a random vertex subset, every other pair drawn with probability p.
Graph plant(const Graph& h, int n, double p, Rng& rng)
{
    std::vector<Vertex> slots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        slots[static_cast<std::size_t>(i)] = i;
    rng.shuffle(slots);
    std::vector<int> role(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < h.vertex_count(); ++i)
        role[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = i;
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int ru = role[static_cast<std::size_t>(u)];
            int rv = role[static_cast<std::size_t>(v)];
            bool edge = ru >= 0 && rv >= 0 ? h.has_edge(ru, rv) : rng.chance(p);
            if (edge)
                b.add_edge(u, v);
        }
    return b.build();
}

} // namespace

std::uint64_t Report::digest() const
{
    std::uint64_t h = 1469598103934665603ULL;
    for (const std::string& r : records) {
        for (unsigned char c : r) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= '\n';
        h *= 1099511628211ULL;
    }
    return h;
}

std::string Report::summary() const
{
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest()));
    return "check=" + name + " cases=" + std::to_string(cases) + " failures=" + std::to_string(failures) +
           " digest=" + hex;
}

std::vector<NamedPattern> solver_patterns()
{
    return {{"P3", path_graph(3)},   {"P4", path_graph(4)}, {"K3", complete_graph(3)},
            {"K1,3", star_graph(3)}, {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)},
            {"paw", paw()},          {"diamond", diamond()}, {"bistar", bistar(2, 3)}};
}

SolverChecks solver_vs_oracle(int max_host, int random_hosts, int random_size, int kmax, const RunOptions& opt)
{
    std::vector<Graph> hosts;
    for (int n = 1; n <= max_host; ++n)
        for (Graph& g : all_graphs(n))
            hosts.push_back(std::move(g));
    Rng rng(opt.seed);
    for (int i = 0; i < random_hosts; ++i) {
        double p = 0.2 + 0.6 * static_cast<double>(rng.below(1000)) / 1000.0;
        hosts.push_back(random_graph(random_size, p, rng));
    }
    const auto patterns = solver_patterns();
    const std::size_t per_host = patterns.size() * static_cast<std::size_t>(kmax + 1);
    std::vector<CaseResult> agree(hosts.size() * per_host), bound(hosts.size() * per_host);
    parallel_for(hosts.size(), opt.jobs, [&](std::size_t hi) {
        const Graph& g = hosts[hi];
        std::size_t slot = hi * per_host;
        for (const NamedPattern& p : patterns)
            for (int k = 0; k <= kmax; ++k, ++slot) {
                SolveResult s = solve(g, p.graph, k);
                OracleResult o = oracle_subdivision(g, p.graph, k);
                const std::string id = "host=" + std::to_string(hi) + " pattern=" + p.name + " k=" + std::to_string(k);
                CaseResult& a = agree[slot];
                a.record = id + " solve=" + yes_no(s.answer == Answer::Yes) + " oracle=" +
                           yes_no(o.answer == Answer::Yes) + " method=" + s.method;
                a.ok = s.answer == o.answer;
                if (a.ok && s.answer == Answer::Yes) {
                    VerifyReport v = verify_solution(g, p.graph, k, s.solution);
                    a.ok = v.ok;
                    a.detail = v.reason;
                }
                if (!a.ok)
                    a.detail += " graph=" + edge_list(g);
                const long long cap = branching_node_bound(p.graph.edge_count(), k);
                CaseResult& b = bound[slot];
                b.record = id + " nodes=" + std::to_string(s.nodes_explored) + " bound=" + std::to_string(cap);
                b.ok = s.nodes_explored <= cap;
            }
    });
    SolverChecks out{{"solver-oracle"}, {"node-bound"}};
    fold(out.agreement, agree);
    fold(out.node_bound, bound);
    return out;
}

Report edge_deletion_equivalence(int max_host, int kmax, const RunOptions& opt)
{
    const std::vector<NamedPattern> patterns{{"K3", complete_graph(3)}, {"K4", complete_graph(4)}, {"diamond", diamond()}};
    std::vector<Graph> hosts;
    for (int n = 1; n <= max_host; ++n)
        for (Graph& g : all_graphs(n))
            hosts.push_back(std::move(g));
    const std::size_t per_host = patterns.size() * static_cast<std::size_t>(kmax + 1);
    std::vector<CaseResult> results(hosts.size() * per_host);
    parallel_for(hosts.size(), opt.jobs, [&](std::size_t hi) {
        std::size_t slot = hi * per_host;
        for (const NamedPattern& p : patterns)
            for (int k = 0; k <= kmax; ++k, ++slot) {
                bool sub = oracle_subdivision(hosts[hi], p.graph, k).answer == Answer::Yes;
                bool del = oracle_edge_deletion(hosts[hi], p.graph, k).answer == Answer::Yes;
                CaseResult& c = results[slot];
                c.record = "host=" + std::to_string(hi) + " pattern=" + p.name + " k=" + std::to_string(k) +
                           " subdivision=" + yes_no(sub) + " deletion=" + yes_no(del);
                c.ok = sub == del;
            }
    });
    Report r{"edge-deletion-equivalence"};
    fold(r, results);
    return r;
}

// --- reductions -----------------------------------------------------------------

std::vector<Scenario> reduction_scenarios()
{
    const Graph k4_pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const Graph roof(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    const Graph hanging(7, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {0, 6}});
    // Two 4-cycles joined by an edge: the smallest pattern outside all three families.
    const Graph bridged(8, {{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}});
    return {
        {Lemma::EdgeDelEq, "K3", complete_graph(3), 3, 6, 2, std::nullopt, 0.6},
        {Lemma::EdgeDelEq, "diamond", diamond(), 4, 6, 2, std::nullopt, 0.7},
        {Lemma::Degree3, "K4+pendant", k4_pendant, 4, 5, 1, std::nullopt, 0.85},
        {Lemma::Degree3, "2xbistar", disjoint_union(bistar(2, 2), bistar(2, 2)), 4, 5, 1, std::nullopt, 0.4, true},
        {Lemma::Roof, "roof", roof, 3, 5, 2, std::nullopt, 0.7},
        {Lemma::Hanging, "hanging", hanging, 6, 6, 1, std::nullopt, 0.5, true},
        {Lemma::Girth4A, "bridged-squares", bridged, 4, 5, 2, 4},
        {Lemma::Girth4B, "C4", cycle_graph(4), 5, 6, 3, 5},
        {Lemma::Girth4B, "C5", cycle_graph(5), 6, 6, 3, 6},
        {Lemma::TreeEven, "d2-tree", two_branch_tree(2), 3, 5, 1, std::nullopt, 0.6},
        {Lemma::TreeOdd, "d5-tree", two_branch_tree(5), 3, 4, 1, std::nullopt, 0.5, true},
    };
}

SourceInstance scenario_instance(const Scenario& s, int i)
{
    const int span = s.max_size - s.min_size + 1;
    const int size = s.min_size + i % span;
    const int budget = (i / span) % (s.max_budget + 1);
    const std::uint64_t seed = 1000003ULL * (static_cast<std::uint64_t>(s.lemma) + 1) +
                               7919ULL * static_cast<std::uint64_t>(i) + s.name.size();
    if (s.girth)
        return sample_source(source_problem_for(s.lemma), size, s.girth, seed, budget);
    Rng rng(seed);
    const Graph sp = source_pattern_for(s.lemma, s.pattern);
    Graph g = s.plant && i % 2 == 0 && sp.vertex_count() <= size ? plant(sp, size, s.density, rng)
                                                                  : random_graph(size, s.density, rng);
    return {source_problem_for(s.lemma), std::move(g), budget, std::nullopt};
}

namespace {

/// Exhaustive oracle while the state space is small; otherwise the branching solver, which is exact
/// and is held to the oracle by the solver check.
std::pair<bool, SubdivisionSolution> decide_target(const Graph& g, const Graph& h, int k, std::string& how)
{
    constexpr long long oracle_states = 20000;
    if (g.vertex_count() + k <= OracleOptions::default_canonical_bound() ||
        subdivision_state_estimate(g.edge_count(), k) <= oracle_states) {
        OracleResult r = oracle_subdivision(g, h, k);
        how = r.mode;
        return {r.answer == Answer::Yes, r.subdivision_witness};
    }
    SolveResult r = solve(g, h, k);
    how = "solver-" + r.method;
    return {r.answer == Answer::Yes, r.solution};
}

} // namespace

EquivalenceOutcome reduction_equivalence(Lemma lemma, const SourceInstance& src, const Graph& h)
{
    EquivalenceOutcome out;
    ReductionArtifact a = reduce(lemma, src, h);
    OracleResult s = source_oracle(src, a.source_pattern);
    out.source_yes = s.answer == Answer::Yes;
    auto [yes, sol] = decide_target(a.target, a.pattern, a.target_budget, out.decider);
    out.target_yes = yes;
    if (out.source_yes) {
        VerifyReport v = verify_solution(a.target, a.pattern, a.target_budget, a.forward(witness_of(s)));
        out.forward_ok = v.ok;
        if (!v.ok)
            out.detail += "forward: " + v.reason + "; ";
    }
    if (out.target_yes) {
        VerifyReport v = verify_source_witness(src, a.source_pattern, a.backward(sol));
        out.backward_ok = v.ok;
        if (!v.ok)
            out.detail += "backward: " + v.reason + "; ";
    }
    if (out.source_yes != out.target_yes)
        out.detail += std::string("source ") + yes_no(out.source_yes) + " vs target " + yes_no(out.target_yes);
    return out;
}

std::vector<Report> reduction_checks(int per_scenario, const RunOptions& opt)
{
    const auto scenarios = reduction_scenarios();
    std::vector<std::pair<std::size_t, int>> cases;
    for (std::size_t s = 0; s < scenarios.size(); ++s)
        for (int i = 0; i < per_scenario; ++i)
            cases.emplace_back(s, i);
    std::vector<CaseResult> results(cases.size());
    parallel_for(cases.size(), opt.jobs, [&](std::size_t c) {
        const Scenario& s = scenarios[cases[c].first];
        CaseResult& r = results[c];
        SourceInstance src = scenario_instance(s, cases[c].second);
        r.record = std::string("lemma=") + to_string(s.lemma) + " pattern=" + s.name + " instance=" +
                   std::to_string(cases[c].second) + " source=" + edge_list(src.graph) +
                   " budget=" + std::to_string(src.budget);
        try {
            EquivalenceOutcome o = reduction_equivalence(s.lemma, src, s.pattern);
            r.record += std::string(" source_answer=") + yes_no(o.source_yes) + " target_answer=" +
                        yes_no(o.target_yes) + " decider=" + o.decider;
            r.ok = o.ok();
            r.detail = o.detail;
        } catch (const Error& e) {
            r.record += std::string(" error=") + to_string(e.kind());
            r.ok = false;
            r.detail = e.what();
        }
    });
    std::vector<Report> out;
    for (Lemma l : {Lemma::EdgeDelEq, Lemma::Degree3, Lemma::Roof, Lemma::Hanging, Lemma::Girth4A, Lemma::Girth4B,
                    Lemma::TreeEven, Lemma::TreeOdd}) {
        Report r{std::string("reduction-") + to_string(l)};
        std::vector<CaseResult> mine;
        for (std::size_t c = 0; c < cases.size(); ++c)
            if (scenarios[cases[c].first].lemma == l)
                mine.push_back(results[c]);
        fold(r, mine);
        out.push_back(std::move(r));
    }
    return out;
}

// --- pattern side ---------------------------------------------------------------

Report girth4_all_sweep(int max_vertices, const RunOptions& opt)
{
    std::vector<std::pair<int, Graph>> graphs;
    for (int n = 1; n <= max_vertices; ++n) {
        int index = 0;
        for (Graph& g : all_connected_graphs(n))
            graphs.emplace_back(index++, std::move(g));
    }
    std::vector<std::optional<CaseResult>> results(graphs.size());
    parallel_for(graphs.size(), opt.jobs, [&](std::size_t i) {
        const Graph& h = graphs[i].second;
        if (is_forest(h) || *girth(h).length < 4 || thm_easy_case(h))
            return;
        auto fam = family_membership(h);
        if (!fam)
            return;
        const bool cycle_set = is_two_connected(induced_subgraph(h, shortest_cycle_vertices(h)).graph);
        auto core = recognize_special_core(two_core(h).core);
        CaseResult c;
        c.record = "graph=" + std::to_string(h.vertex_count()) + "/" + std::to_string(graphs[i].first) +
                   " family=" + to_string(fam->family) + " cycle_set_2connected=" + (cycle_set ? "yes" : "no") +
                   " special_core=" + (core ? (core->kind == CoreKind::Htilde ? "Htilde" : "Hkl") : "none");
        c.ok = cycle_set || core.has_value();
        if (!c.ok)
            c.detail = edge_list(h);
        results[i] = std::move(c);
    });
    Report r{"girth4-all"};
    std::vector<CaseResult> kept;
    for (auto& c : results)
        if (c)
            kept.push_back(std::move(*c));
    fold(r, kept);
    return r;
}

Report classifier_corpus(const std::string& dir)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw Error(ErrorKind::Parse, "pattern corpus not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".g")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw Error(ErrorKind::Parse, "pattern corpus is empty: " + dir);
    std::vector<CaseResult> results;
    for (const fs::path& file : files) {
        std::vector<std::string> comments;
        Graph h;
        try {
            h = read_graph_file(file.string(), &comments);
        } catch (const Error& e) {
            throw Error(ErrorKind::Parse, file.filename().string() + ": " + e.what());
        }
        std::optional<std::string> expect;
        for (const std::string& c : comments)
            if (c.rfind("expect:", 0) == 0)
                expect = c.substr(7);
        if (!expect)
            throw Error(ErrorKind::Parse, file.filename().string() + ": missing 'expect:' header");
        const std::string got = verdict_record(classify(h));
        std::istringstream want(*expect);
        std::vector<std::string> have;
        {
            std::istringstream ss(got);
            for (std::string t; ss >> t;)
                have.push_back(t);
        }
        CaseResult c;
        c.record = "file=" + file.filename().string() + " " + got;
        int wanted = 0;
        for (std::string t; want >> t; ++wanted)
            if (std::find(have.begin(), have.end(), t) == have.end()) {
                c.ok = false;
                c.detail += "missing " + t + "; ";
            }
        if (wanted == 0)
            throw Error(ErrorKind::Parse, file.filename().string() + ": empty 'expect:' header");
        results.push_back(std::move(c));
    }
    Report r{"classifier-corpus"};
    fold(r, results);
    return r;
}

Report indestructibility(int trials, int max_vertices, const RunOptions& opt)
{
    std::vector<CaseResult> results(static_cast<std::size_t>(trials));
    parallel_for(results.size(), opt.jobs, [&](std::size_t t) {
        Rng rng(opt.seed * 0x9e3779b97f4a7c15ULL + t);
        // A subdivided star that fits: legs of length 1..3, at most max_vertices vertices in total.
        std::vector<int> legs;
        int used = 1;
        const int want = rng.between(1, 5);
        for (int i = 0; i < want; ++i) {
            int len = rng.between(1, 3);
            if (used + len > max_vertices)
                break;
            legs.push_back(len);
            used += len;
        }
        const Graph h = spider(legs);
        const int n = rng.between(h.vertex_count(), max_vertices);
        const Graph g = plant(h, n, 0.3, rng);
        const Edge e = g.edges()[rng.below(static_cast<std::size_t>(g.edge_count()))];
        const bool survives = find_induced_copy(subdivide(g, {e.u, e.v}), h).has_value();
        std::string shape;
        for (int l : legs)
            shape += (shape.empty() ? "" : ",") + std::to_string(l);
        CaseResult& c = results[t];
        c.record = "trial=" + std::to_string(t) + " legs=" + shape + " host=" + std::to_string(n) +
                   " step=" + to_string(e) + " copy=" + (survives ? "yes" : "no");
        c.ok = survives;
        if (!survives)
            c.detail = edge_list(g);
    });
    Report r{"indestructibility"};
    fold(r, results);
    return r;
}

} // namespace hfs::checks
