#include "hfs/oracle.hpp"

#include "hfs/error.hpp"
#include "hfs/induced.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <unordered_set>

namespace hfs {

namespace {

long long env_or(const char* name, long long fallback)
{
    const char* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (*end != '\0' || v <= 0)
        throw Error(ErrorKind::Parse, std::string("bad value for ") + name + ": " + raw);
    return v;
}

long long saturating_binomial(long long n, long long r)
{
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    long double acc = 1;
    for (long long i = 1; i <= r; ++i)
        acc = acc * static_cast<long double>(n - r + i) / static_cast<long double>(i);
    return acc >= static_cast<long double>(LLONG_MAX) ? LLONG_MAX : static_cast<long long>(acc + 0.5L);
}

long long saturating_add(long long a, long long b)
{
    return a > LLONG_MAX - b ? LLONG_MAX : a + b;
}

// Visits every graph reachable with at most kmax subdivisions, level by level (level = number of
// steps). The callback returns false to stop. Mode chosen by size; throws TooLarge when neither fits.
using Visit = std::function<bool(int level, const Graph&, const SubdivisionSolution&)>;

std::string explore(const Graph& g, int kmax, const OracleOptions& opt, long long& states, const Visit& visit)
{
    const long long estimate = subdivision_state_estimate(g.edge_count(), kmax);
    if (estimate > opt.state_cap)
        throw Error(ErrorKind::TooLarge, "about " + std::to_string(estimate) + " states exceed the cap of " +
                                             std::to_string(opt.state_cap));
    const int bound = std::min(opt.canonical_bound, kMaxCanonicalBound);
    states = 1;
    if (!visit(0, g, {}))
        return g.vertex_count() + kmax <= bound ? "canonical-bfs" : "count-vectors";

    if (g.vertex_count() + kmax <= bound) {
        if (!opt.dedupe) {
            long long sequences = 1, width = 1;
            for (int j = 0; j < kmax; ++j) {
                width = width > LLONG_MAX / (g.edge_count() + j + 1) ? LLONG_MAX : width * (g.edge_count() + j + 1);
                sequences = saturating_add(sequences, width);
            }
            if (sequences > opt.state_cap)
                throw Error(ErrorKind::TooLarge, "sequence enumeration exceeds the state cap");
        }
        struct Node {
            Graph graph;
            SubdivisionSolution steps;
        };
        std::unordered_set<std::string> seen;
        if (opt.dedupe)
            seen.insert(canonical_form(g, bound));
        std::vector<Node> frontier{{g, {}}};
        for (int level = 1; level <= kmax; ++level) {
            std::vector<Node> next;
            for (const Node& node : frontier)
                for (const Edge& e : node.graph.edges()) {
                    Graph child = subdivide(node.graph, {e.u, e.v});
                    // The last level is never expanded, so repeats there only cost a visit.
                    if (opt.dedupe && level < kmax && !seen.insert(canonical_form(child, bound)).second)
                        continue;
                    SubdivisionSolution steps = node.steps;
                    steps.push_back({e.u, e.v});
                    ++states;
                    if (!visit(level, child, steps))
                        return "canonical-bfs";
                    if (level < kmax)
                        next.push_back({std::move(child), std::move(steps)});
                }
            frontier = std::move(next);
        }
        return "canonical-bfs";
    }

    // Beyond the canonical bound: the result of any sequence is determined up to isomorphism by how
    // often each original edge was subdivided, so enumerating count vectors is exhaustive.
    const int m = g.edge_count();
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    bool stopped = false;
    std::function<void(int, int, int)> place = [&](int index, int remaining, int level) {
        if (stopped)
            return;
        if (index == m) {
            if (remaining != 0)
                return;
            ++states;
            auto [graph, steps] = subdivide_by_counts(g, counts);
            if (!visit(level, graph, steps))
                stopped = true;
            return;
        }
        for (int c = remaining; c >= 0 && !stopped; --c) {
            counts[static_cast<std::size_t>(index)] = c;
            place(index + 1, remaining - c, level);
        }
        counts[static_cast<std::size_t>(index)] = 0;
    };
    for (int level = 1; level <= kmax && !stopped && m > 0; ++level)
        place(0, level, level);
    return "count-vectors";
}

void check_pattern(const Graph& h)
{
    if (h.empty())
        throw Error(ErrorKind::EmptyPattern, "pattern has no vertices");
}

// Calls visit(subset) over all k-subsets of 0..n-1 in lexicographic order until it returns false.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    if (k > n)
        return true;
    for (;;) {
        if (!visit(idx))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

long long OracleOptions::default_state_cap()
{
    return env_or("HFS_STATE_CAP", 1'000'000);
}

int OracleOptions::default_canonical_bound()
{
    long long v = env_or("HFS_CANONICAL_BOUND", kDefaultCanonicalBound);
    return static_cast<int>(std::min<long long>(v, kMaxCanonicalBound));
}

long long subdivision_state_estimate(int edges, int k)
{
    return saturating_binomial(static_cast<long long>(edges) + k, k);
}

std::pair<Graph, SubdivisionSolution> subdivide_by_counts(const Graph& g, const std::vector<int>& counts)
{
    const auto edges = g.edges();
    if (counts.size() != edges.size())
        throw Error(ErrorKind::PreconditionViolated, "one count per edge expected");
    GraphBuilder b(g.vertex_count());
    SubdivisionSolution steps;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        int c = counts[i];
        if (c == 0) {
            b.add_edge(u, v);
            continue;
        }
        // Steps (u,v), (u,w0), (u,w1), ... leave the path u - w_{c-1} - ... - w0 - v.
        Vertex first = b.add_vertices(c);
        steps.push_back({u, v});
        for (int j = 1; j < c; ++j)
            steps.push_back({u, first + j - 1});
        b.add_edge(first, v);
        for (int j = 1; j < c; ++j)
            b.add_edge(first + j, first + j - 1);
        b.add_edge(u, first + c - 1);
    }
    return {b.build(), std::move(steps)};
}

OracleResult oracle_subdivision(const Graph& g, const Graph& h, int k, const OracleOptions& opt)
{
    check_pattern(h);
    if (k < 0)
        throw Error(ErrorKind::PreconditionViolated, "budget must be non-negative");
    OracleResult r;
    r.mode = explore(g, k, opt, r.states_visited, [&](int, const Graph& graph, const SubdivisionSolution& steps) {
        if (!is_h_free(graph, h))
            return true;
        r.answer = Answer::Yes;
        r.subdivision_witness = steps;
        return false;
    });
    return r;
}

std::vector<std::optional<int>> oracle_min_subdivisions(const Graph& g, const std::vector<Graph>& patterns, int kmax,
                                                        const OracleOptions& opt)
{
    for (const Graph& h : patterns)
        check_pattern(h);
    std::vector<std::optional<int>> best(patterns.size());
    std::size_t open = patterns.size();
    long long states = 0;
    explore(g, kmax, opt, states, [&](int level, const Graph& graph, const SubdivisionSolution&) {
        for (std::size_t i = 0; i < patterns.size(); ++i)
            if (!best[i] && is_h_free(graph, patterns[i])) {
                best[i] = level;
                --open;
            }
        return open > 0;
    });
    return best;
}

OracleResult oracle_edge_deletion(const Graph& g, const Graph& h, int k, const OracleOptions& opt)
{
    check_pattern(h);
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    long long estimate = 0;
    for (int j = 0; j <= std::min(k, m); ++j)
        estimate = saturating_add(estimate, saturating_binomial(m, j));
    if (estimate > opt.state_cap)
        throw Error(ErrorKind::TooLarge, "edge subsets exceed the state cap");
    OracleResult r;
    r.mode = "subsets";
    for (int j = 0; j <= std::min(k, m) && r.answer == Answer::No; ++j)
        for_each_subset(m, j, [&](const std::vector<int>& pick) {
            ++r.states_visited;
            std::vector<Edge> f;
            for (int i : pick)
                f.push_back(edges[static_cast<std::size_t>(i)]);
            if (!is_h_free(remove_edges(g, f), h))
                return true;
            r.answer = Answer::Yes;
            r.deleted_edges = std::move(f);
            return false;
        });
    return r;
}

OracleResult oracle_vertex_cover(const Graph& g, int p, const OracleOptions& opt)
{
    const int n = g.vertex_count();
    long long estimate = 0;
    for (int j = 0; j <= std::min(p, n); ++j)
        estimate = saturating_add(estimate, saturating_binomial(n, j));
    if (estimate > opt.state_cap)
        throw Error(ErrorKind::TooLarge, "vertex subsets exceed the state cap");
    const auto edges = g.edges();
    OracleResult r;
    r.mode = "subsets";
    for (int j = 0; j <= std::min(p, n) && r.answer == Answer::No; ++j)
        for_each_subset(n, j, [&](const std::vector<int>& pick) {
            ++r.states_visited;
            std::vector<char> in(static_cast<std::size_t>(n), 0);
            for (int v : pick)
                in[static_cast<std::size_t>(v)] = 1;
            for (const Edge& e : edges)
                if (!in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)])
                    return true;
            r.answer = Answer::Yes;
            r.cover.assign(pick.begin(), pick.end());
            return false;
        });
    return r;
}

} // namespace hfs
