#include "hfs/solver.hpp"

#include "hfs/error.hpp"
#include "hfs/induced.hpp"
#include "hfs/pattern.hpp"
#include "hfs/tracker.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <mutex>
#include <thread>

namespace hfs {

const char* to_string(Answer a)
{
    return a == Answer::Yes ? "Yes" : "No";
}

long long branching_node_bound(int pattern_edges, int k)
{
    long long total = 0;
    long long term = 1;
    for (int j = 0; j <= k; ++j) {
        if (total > LLONG_MAX - term)
            return LLONG_MAX;
        total += term;
        if (j < k) {
            if (pattern_edges != 0 && term > LLONG_MAX / pattern_edges)
                term = LLONG_MAX;
            else
                term *= pattern_edges;
        }
    }
    return total;
}

namespace {

struct State {
    Graph graph;
    // Only maintained with memoisation on.
    std::map<Edge, int> origin;
    std::vector<int> counts;

    State next(const Edge& e, bool track) const
    {
        State s{subdivide(graph, {e.u, e.v}), {}, {}};
        if (track) {
            s.origin = origin;
            s.counts = counts;
            int index = s.origin.at(e);
            s.origin.erase(e);
            Vertex w = graph.vertex_count();
            s.origin.emplace(Edge(e.u, w), index);
            s.origin.emplace(Edge(e.v, w), index);
            ++s.counts[static_cast<std::size_t>(index)];
        }
        return s;
    }
};

class Brancher {
public:
    Brancher(const Graph& h, bool memo, const std::atomic<bool>* abandon) : h_(h), memo_(memo), abandon_(abandon) {}

    long long nodes() const { return nodes_; }

    // True when some sequence of at most `budget` steps from `s` removes every copy; the steps go to `out`.
    bool search(const State& s, int budget, SubdivisionSolution& out)
    {
        ++nodes_;
        if (abandon_ && abandon_->load(std::memory_order_relaxed))
            return false;
        auto copy = find_induced_copy(s.graph, h_);
        if (!copy)
            return true;
        if (budget == 0)
            return false;
        if (memo_) {
            auto it = failed_.find(s.counts);
            if (it != failed_.end() && it->second >= budget)
                return false;
        }
        for (const Edge& e : copy->image_edges(h_)) {
            out.push_back({e.u, e.v});
            if (search(s.next(e, memo_), budget - 1, out))
                return true;
            out.pop_back();
        }
        if (memo_) {
            int& known = failed_[s.counts];
            known = std::max(known, budget);
        }
        return false;
    }

private:
    const Graph& h_;
    bool memo_;
    const std::atomic<bool>* abandon_;
    long long nodes_ = 0;
    std::map<std::vector<int>, int> failed_;
};

State initial_state(const Graph& g, bool track)
{
    State s{g, {}, {}};
    if (track) {
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            s.origin.emplace(edges[i], static_cast<int>(i));
        s.counts.assign(edges.size(), 0);
    }
    return s;
}

struct BranchOutcome {
    bool done = false;
    bool success = false;
    long long nodes = 0;
    SubdivisionSolution steps;
};

// Root expansion shared by the sequential and parallel modes. The reported node count is
// 1 + the nodes of every top-level branch up to and including the first successful one,
// which is exactly what a sequential left-to-right search explores.
SolveResult branch_from_root(const Graph& g, const Graph& h, int k, const SolveOptions& opt)
{
    SolveResult result;
    result.method = "branching";
    auto copy = find_induced_copy(g, h);
    if (!copy) {
        result.answer = Answer::Yes;
        result.nodes_explored = 1;
        return result;
    }
    if (k == 0) {
        result.nodes_explored = 1;
        return result;
    }
    const State root = initial_state(g, opt.memo);
    const auto edges = copy->image_edges(h);
    std::vector<BranchOutcome> outcomes(edges.size());

    auto run_branch = [&](std::size_t i, const std::atomic<bool>* abandon) {
        Brancher b(h, opt.memo, abandon);
        BranchOutcome& o = outcomes[i];
        o.success = b.search(root.next(edges[i], opt.memo), k - 1, o.steps);
        o.nodes = b.nodes();
        o.done = true;
    };

    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(edges.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            run_branch(i, nullptr);
            if (outcomes[i].success)
                break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_success{edges.size()};
        std::vector<std::atomic<bool>> abandon(edges.size());
        std::mutex mu;
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= edges.size() || i > first_success.load())
                    return;
                run_branch(i, &abandon[i]);
                if (outcomes[i].success) {
                    std::lock_guard lock(mu);
                    if (i < first_success.load()) {
                        first_success.store(i);
                        for (std::size_t j = i + 1; j < edges.size(); ++j)
                            abandon[j].store(true);
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    result.nodes_explored = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!outcomes[i].done)
            throw Error(ErrorKind::Internal, "branch skipped before the first success");
        result.nodes_explored += outcomes[i].nodes;
        if (outcomes[i].success) {
            result.answer = Answer::Yes;
            result.solution.push_back({edges[i].u, edges[i].v});
            result.solution.insert(result.solution.end(), outcomes[i].steps.begin(), outcomes[i].steps.end());
            break;
        }
    }
    return result;
}

bool all_components_stars(const Graph& h)
{
    for (const auto& comp : components(h))
        if (!is_subdivided_star(induced_subgraph(h, comp).graph))
            return false;
    return true;
}

} // namespace

SolveResult solve_poly_star(const Graph& g, const Graph& h, int /*k*/)
{
    if (h.empty())
        throw Error(ErrorKind::EmptyPattern, "pattern has no vertices");
    if (!all_components_stars(h))
        throw Error(ErrorKind::PreconditionViolated, "every component of the pattern must be a subdivided star");
    SolveResult r;
    r.method = "star";
    r.nodes_explored = 1;
    r.answer = is_h_free(g, h) ? Answer::Yes : Answer::No;
    return r;
}

SolveResult solve_poly_bistar(const Graph& g, const Graph& h, int k)
{
    if (h.empty())
        throw Error(ErrorKind::EmptyPattern, "pattern has no vertices");
    if (!obs1_polynomial(h) || all_components_stars(h))
        throw Error(ErrorKind::PreconditionViolated, "pattern must have exactly one subdivided-bistar component");
    // The central edge of the bistar component: its two branching vertices.
    Edge centre;
    for (const auto& comp : components(h)) {
        auto sub = induced_subgraph(h, comp);
        if (is_subdivided_bistar(sub.graph)) {
            auto br = branching_vertices(sub.graph);
            centre = Edge(sub.to_original[static_cast<std::size_t>(br[0])], sub.to_original[static_cast<std::size_t>(br[1])]);
        }
    }
    SolveResult r;
    r.method = "bistar";
    Graph current = g;
    const long long cap = static_cast<long long>(g.edge_count()) + k;
    for (long long iter = 0;; ++iter) {
        if (iter > cap)
            throw Error(ErrorKind::Internal, "forced-move loop exceeded its iteration cap");
        ++r.nodes_explored;
        auto copy = find_induced_copy(current, h);
        if (!copy) {
            r.answer = Answer::Yes;
            return r;
        }
        if (static_cast<int>(r.solution.size()) >= k) {
            r.answer = Answer::No;
            r.solution.clear();
            return r;
        }
        SubdivisionStep step{copy->mapping[static_cast<std::size_t>(centre.u)],
                             copy->mapping[static_cast<std::size_t>(centre.v)]};
        r.solution.push_back(step);
        current = subdivide(current, step);
    }
}

SolveResult solve(const Graph& g, const Graph& h, int k, const SolveOptions& options)
{
    if (h.empty())
        throw Error(ErrorKind::EmptyPattern, "pattern has no vertices");
    if (k < 0)
        throw Error(ErrorKind::PreconditionViolated, "budget must be non-negative");
    if (options.fast_paths && obs1_polynomial(h))
        return all_components_stars(h) ? solve_poly_star(g, h, k) : solve_poly_bistar(g, h, k);
    return branch_from_root(g, h, k, options);
}

VerifyReport verify_solution(const Graph& g, const Graph& h, int k, const SubdivisionSolution& sol)
{
    if (static_cast<int>(sol.size()) > k)
        return {false, "solution has " + std::to_string(sol.size()) + " steps, budget is " + std::to_string(k)};
    Graph result;
    try {
        result = apply_solution(g, sol);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    if (auto copy = find_induced_copy(result, h)) {
        std::string where;
        for (Vertex v : copy->vertex_set())
            where += (where.empty() ? "" : ",") + std::to_string(v);
        return {false, "induced copy remains on vertices " + where};
    }
    return {true, {}};
}

} // namespace hfs
