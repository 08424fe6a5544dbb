#pragma once

// Deliberately naive reference implementations. They share nothing with the library beyond
// the Graph value type, so agreement with them is evidence rather than tautology.

#include "hfs/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using hfs::Edge;
using hfs::Graph;

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix(const Graph& g)
{
    Matrix m(static_cast<std::size_t>(g.vertex_count()), std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
    for (const Edge& e : g.edges())
        m[e.u][e.v] = m[e.v][e.u] = 1;
    return m;
}

/// Calls f for every k-subset of {0..n-1} (as a sorted vector) until f returns false.
inline bool each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f)
{
    if (k > n || k < 0)
        return true;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        if (!f(pick))
            return false;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

/// Does host[subset] induce a copy of pattern? Tries every bijection.
inline bool induces(const Matrix& host, const std::vector<int>& subset, const Matrix& pat)
{
    std::vector<int> perm(subset);
    std::sort(perm.begin(), perm.end());
    const std::size_t k = perm.size();
    do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < k; ++i)
            for (std::size_t j = i + 1; ok && j < k; ++j)
                ok = host[perm[i]][perm[j]] == pat[i][j];
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline long long count_copies(const Graph& host, const Graph& pattern)
{
    Matrix h = matrix(host);
    Matrix p = matrix(pattern);
    long long count = 0;
    each_subset(host.vertex_count(), pattern.vertex_count(), [&](const std::vector<int>& s) {
        count += induces(h, s, p);
        return true;
    });
    return count;
}

inline bool contains(const Graph& host, const Graph& pattern)
{
    Matrix h = matrix(host);
    Matrix p = matrix(pattern);
    return !each_subset(host.vertex_count(), pattern.vertex_count(),
                        [&](const std::vector<int>& s) { return !induces(h, s, p); });
}

inline Graph with_edges(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

/// Subdivides every listed sequence explicitly: w is appended as vertex n.
inline Graph subdivide(const Graph& g, int u, int v)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!(e == Edge(u, v)))
            edges.push_back(e);
    int w = g.vertex_count();
    edges.emplace_back(u, w);
    edges.emplace_back(v, w);
    return Graph(w + 1, edges);
}

/// Every sequence of at most k subdivisions, depth first.
inline bool subdivision_yes(const Graph& g, const Graph& h, int k)
{
    if (!contains(g, h))
        return true;
    if (k == 0)
        return false;
    for (const Edge& e : g.edges())
        if (subdivision_yes(subdivide(g, e.u, e.v), h, k - 1))
            return true;
    return false;
}

inline bool edge_deletion_yes(const Graph& g, const Graph& h, int k)
{
    std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (int size = 0; size <= std::min(k, m); ++size) {
        bool found = !each_subset(m, size, [&](const std::vector<int>& drop) {
            std::vector<Edge> keep;
            for (int i = 0; i < m; ++i)
                if (!std::binary_search(drop.begin(), drop.end(), i))
                    keep.push_back(edges[i]);
            return contains(Graph(g.vertex_count(), keep), h);
        });
        if (found)
            return true;
    }
    return false;
}

inline bool vertex_cover_yes(const Graph& g, int p)
{
    const int n = g.vertex_count();
    for (int size = 0; size <= std::min(p, n); ++size) {
        bool found = !each_subset(n, size, [&](const std::vector<int>& cover) {
            for (const Edge& e : g.edges())
                if (!std::binary_search(cover.begin(), cover.end(), e.u) &&
                    !std::binary_search(cover.begin(), cover.end(), e.v))
                    return true;
            return false;
        });
        if (found)
            return true;
    }
    return false;
}

inline bool connected(const Matrix& m, const std::vector<char>& alive)
{
    const int n = static_cast<int>(m.size());
    int start = -1, total = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            ++total;
            if (start < 0)
                start = v;
        }
    if (total == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (alive[w] && m[v][w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == total;
}

inline bool two_connected(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 3)
        return false;
    Matrix m = matrix(g);
    std::vector<char> alive(n, 1);
    if (!connected(m, alive))
        return false;
    for (int x = 0; x < n; ++x) {
        alive[x] = 0;
        bool ok = connected(m, alive);
        alive[x] = 1;
        if (!ok)
            return false;
    }
    return true;
}

/// All simple cycles as vertex sets, with their lengths. Only for small graphs.
inline std::vector<std::pair<int, std::vector<int>>> cycles(const Graph& g)
{
    Matrix m = matrix(g);
    const int n = g.vertex_count();
    std::set<std::pair<int, std::vector<int>>> out;
    std::vector<int> path;
    std::vector<char> on(n, 0);
    std::function<void(int, int)> extend = [&](int start, int v) {
        for (int w = start; w < n; ++w) {
            if (!m[v][w])
                continue;
            if (w == start && path.size() >= 3) {
                std::vector<int> s(path);
                std::sort(s.begin(), s.end());
                out.insert({static_cast<int>(path.size()), s});
            } else if (w > start && !on[w]) {
                on[w] = 1;
                path.push_back(w);
                extend(start, w);
                path.pop_back();
                on[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        extend(s, s);
        on[s] = 0;
    }
    return {out.begin(), out.end()};
}

inline int girth(const Graph& g)
{
    int best = 0;
    for (const auto& [len, vs] : brute::cycles(g))
        if (best == 0 || len < best)
            best = len;
    return best; // 0 for forests
}

inline std::vector<int> shortest_cycle_vertices(const Graph& g)
{
    int gi = brute::girth(g);
    std::set<int> out;
    for (const auto& [len, vs] : brute::cycles(g))
        if (len == gi)
            out.insert(vs.begin(), vs.end());
    return {out.begin(), out.end()};
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), edges);
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> all(static_cast<std::size_t>(a.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return induces(matrix(a), all, matrix(b));
}

} // namespace brute
