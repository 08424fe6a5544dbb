#include "hfs/graph.hpp"

#include "hfs/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace hfs {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::Acyclic: return "Acyclic";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::PatternNotEligible: return "PatternNotEligible";
    case ErrorKind::GirthTooSmall: return "GirthTooSmall";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

void check_endpoints(int n, Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorKind::InvalidGraph,
                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (u == v)
        throw Error(ErrorKind::InvalidGraph, "self-loop at " + std::to_string(u));
}

} // namespace

// --- Graph / GraphBuilder ----------------------------------------------------

Graph::Graph(int vertex_count) : adj_(static_cast<std::size_t>(std::max(vertex_count, 0)))
{
    if (vertex_count < 0)
        throw Error(ErrorKind::InvalidGraph, "negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count)
{
    GraphBuilder b(vertex_count);
    for (const Edge& e : edges) {
        check_endpoints(vertex_count, e.u, e.v);
        if (b.has_edge(e.u, e.v))
            throw Error(ErrorKind::InvalidGraph, "parallel edge " + to_string(e));
        b.add_edge(e.u, e.v);
    }
    *this = b.build();
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(vertex_count)
{
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_endpoints(vertex_count, u, v);
        list.emplace_back(u, v);
    }
    *this = Graph(vertex_count, list);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (!contains(u) || !contains(v))
        return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    Vertex target = a.size() <= b.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.adj_) {}

Vertex GraphBuilder::add_vertex()
{
    adj_.emplace_back();
    return static_cast<Vertex>(adj_.size() - 1);
}

Vertex GraphBuilder::add_vertices(int count)
{
    auto first = static_cast<Vertex>(adj_.size());
    adj_.resize(adj_.size() + static_cast<std::size_t>(count));
    return first;
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_endpoints(vertex_count(), u, v);
    auto& a = adj_[static_cast<std::size_t>(u)];
    if (std::find(a.begin(), a.end(), v) != a.end())
        return;
    a.push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

void GraphBuilder::add_graph(const Graph& g, Vertex offset)
{
    for (const Edge& e : g.edges())
        add_edge(e.u + offset, e.v + offset);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::find(a.begin(), a.end(), v) != a.end();
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.adj_ = adj_;
    std::size_t twice = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        twice += list.size();
    }
    g.edge_count_ = static_cast<int>(twice / 2);
    return g;
}

// --- subdivision -------------------------------------------------------------

Graph subdivide(const Graph& g, SubdivisionStep step)
{
    if (!g.has_edge(step.u, step.v))
        throw Error(ErrorKind::MissingEdge,
                    "no edge " + std::to_string(step.u) + "-" + std::to_string(step.v) + " to subdivide");
    GraphBuilder b(g.vertex_count() + 1);
    const Edge removed(step.u, step.v);
    for (const Edge& e : g.edges())
        if (e != removed)
            b.add_edge(e.u, e.v);
    const Vertex w = g.vertex_count();
    b.add_edge(step.u, w);
    b.add_edge(step.v, w);
    return b.build();
}

Graph apply_solution(const Graph& g, std::span<const SubdivisionStep> sol)
{
    Graph current = g;
    for (std::size_t i = 0; i < sol.size(); ++i) {
        if (!current.has_edge(sol[i].u, sol[i].v))
            throw Error(ErrorKind::MissingEdge,
                        "step " + std::to_string(i) + " names non-edge " + std::to_string(sol[i].u) + "-" +
                            std::to_string(sol[i].v),
                        i);
        current = subdivide(current, sol[i]);
    }
    return current;
}

// --- traversal ---------------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{source};
    d[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x))
            if (d[static_cast<std::size_t>(y)] < 0) {
                d[static_cast<std::size_t>(y)] = d[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
    }
    return d;
}

std::optional<int> dist(const Graph& g, Vertex u, Vertex v)
{
    if (!g.contains(u) || !g.contains(v))
        throw Error(ErrorKind::InvalidGraph, "dist on unknown vertex");
    int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d < 0)
        return std::nullopt;
    return d;
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex y : g.neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g)
{
    return g.edge_count() == g.vertex_count() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g)
{
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

int min_degree(const Graph& g)
{
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::min(best, g.degree(v));
    return g.empty() ? 0 : best;
}

std::vector<Vertex> vertices_with_min_degree(const Graph& g, int degree)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= degree)
            out.push_back(v);
    return out;
}

// --- cycles ------------------------------------------------------------------

namespace {

// Length of the shortest u-v path avoiding the edge uv itself, or -1.
int detour_length(const Graph& g, Vertex u, Vertex v)
{
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{u};
    d[static_cast<std::size_t>(u)] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (x == u && y == v)
                continue;
            if (d[static_cast<std::size_t>(y)] < 0) {
                d[static_cast<std::size_t>(y)] = d[static_cast<std::size_t>(x)] + 1;
                if (y == v)
                    return d[static_cast<std::size_t>(y)];
                queue.push_back(y);
            }
        }
    }
    return -1;
}

} // namespace

Girth girth(const Graph& g)
{
    std::optional<int> best;
    for (const Edge& e : g.edges()) {
        int d = detour_length(g, e.u, e.v);
        if (d > 0 && (!best || d + 1 < *best))
            best = d + 1;
    }
    return Girth{best};
}

std::vector<Vertex> shortest_cycle_vertices(const Graph& g)
{
    Girth gi = girth(g);
    if (gi.infinite())
        throw Error(ErrorKind::Acyclic, "graph has no cycle");
    std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges())
        if (detour_length(g, e.u, e.v) + 1 == *gi.length) {
            on[static_cast<std::size_t>(e.u)] = 1;
            on[static_cast<std::size_t>(e.v)] = 1;
        }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (on[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

long long count_cycles(const Graph& g, int length)
{
    if (length < 3)
        return 0;
    long long total = 0;
    std::vector<Vertex> path;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    // Each cycle is found from its smallest vertex in two directions.
    auto extend = [&](auto&& self, Vertex start, Vertex last) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (g.has_edge(last, start))
                ++total;
            return;
        }
        for (Vertex y : g.neighbors(last)) {
            if (y <= start || used[static_cast<std::size_t>(y)])
                continue;
            used[static_cast<std::size_t>(y)] = 1;
            path.push_back(y);
            self(self, start, y);
            path.pop_back();
            used[static_cast<std::size_t>(y)] = 0;
        }
    };
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        used[static_cast<std::size_t>(s)] = 1;
        path.assign(1, s);
        extend(extend, s, s);
        used[static_cast<std::size_t>(s)] = 0;
    }
    return total / 2;
}

// --- core / connectivity -----------------------------------------------------

CoreResult two_core(const Graph& g)
{
    if (g.vertex_count() == 0 || !is_connected(g))
        throw Error(ErrorKind::NotConnected, "core is defined for connected non-empty graphs");
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int remaining = n;
    for (Vertex v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    // Delete the smallest current leaf until none is left; a tree stops at one vertex.
    for (bool progress = true; progress && remaining > 1;) {
        progress = false;
        for (Vertex v = 0; v < n && remaining > 1; ++v) {
            if (!alive[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] != 1)
                continue;
            alive[static_cast<std::size_t>(v)] = 0;
            --remaining;
            for (Vertex y : g.neighbors(v))
                if (alive[static_cast<std::size_t>(y)])
                    --deg[static_cast<std::size_t>(y)];
            progress = true;
            v = -1;
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)])
            keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    return {std::move(sub.graph), std::move(sub.to_original)};
}

bool is_two_connected(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 3 || !is_connected(g))
        return false;
    // Articulation points by low-link DFS.
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    int timer = 0;
    bool cut = false;
    auto dfs = [&](auto&& self, Vertex v, Vertex parent) -> void {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        int children = 0;
        for (Vertex y : g.neighbors(v)) {
            if (y == parent)
                continue;
            if (disc[static_cast<std::size_t>(y)] >= 0) {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(y)]);
                continue;
            }
            ++children;
            self(self, y, v);
            low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(y)]);
            if (parent >= 0 && low[static_cast<std::size_t>(y)] >= disc[static_cast<std::size_t>(v)])
                cut = true;
        }
        if (parent < 0 && children > 1)
            cut = true;
    };
    dfs(dfs, 0, -1);
    return !cut;
}

// --- derived graphs ----------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (!g.contains(v) || index[static_cast<std::size_t>(v)] >= 0)
            throw Error(ErrorKind::InvalidGraph, "induced_subgraph: bad or repeated vertex " + std::to_string(v));
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    GraphBuilder b(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex y : g.neighbors(vertices[i]))
            if (int j = index[static_cast<std::size_t>(y)]; j > static_cast<int>(i))
                b.add_edge(static_cast<Vertex>(i), j);
    return {b.build(), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    GraphBuilder out(a.vertex_count() + b.vertex_count());
    out.add_graph(a, 0);
    out.add_graph(b, a.vertex_count());
    return out.build();
}

std::vector<Edge> edges_between(const Graph& g, std::span<const Vertex> x1, std::span<const Vertex> x2)
{
    std::vector<char> in2(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : x2)
        in2[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : x1)
        if (in2[static_cast<std::size_t>(v)])
            throw Error(ErrorKind::PreconditionViolated, "edges_between needs disjoint sets");
    std::vector<Edge> out;
    for (Vertex u : x1)
        for (Vertex y : g.neighbors(u))
            if (in2[static_cast<std::size_t>(y)])
                out.emplace_back(u, y);
    std::sort(out.begin(), out.end());
    return out;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges)
{
    std::vector<Edge> removed(edges.begin(), edges.end());
    std::sort(removed.begin(), removed.end());
    GraphBuilder b(g.vertex_count());
    for (const Edge& e : g.edges())
        if (!std::binary_search(removed.begin(), removed.end(), e))
            b.add_edge(e.u, e.v);
    return b.build();
}

Graph permute(const Graph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw Error(ErrorKind::InvalidGraph, "permutation size mismatch");
    GraphBuilder b(g.vertex_count());
    for (const Edge& e : g.edges())
        b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return b.build();
}

std::string to_string(const Edge& e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::string to_string(const Graph& g)
{
    std::ostringstream os;
    os << "Graph(n=" << g.vertex_count() << ", edges={";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : ",") << e.u << '-' << e.v;
        first = false;
    }
    os << "})";
    return os.str();
}

} // namespace hfs
