#include "hfs/generators.hpp"

#include "hfs/error.hpp"

#include <map>
#include <set>

namespace hfs {

Graph path_graph(int n)
{
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return b.build();
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidGraph, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph complete_graph(int n)
{
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return b.build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        b.add_edge(0, i);
    return b.build();
}

Graph complete_bipartite(int a, int c)
{
    GraphBuilder b(a + c);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < c; ++j)
            b.add_edge(i, a + j);
    return b.build();
}

Graph bistar(int left, int right)
{
    GraphBuilder b(2);
    b.add_edge(0, 1);
    for (int i = 0; i < left; ++i)
        b.add_edge(0, b.add_vertex());
    for (int i = 0; i < right; ++i)
        b.add_edge(1, b.add_vertex());
    return b.build();
}

Graph spider(const std::vector<int>& legs)
{
    GraphBuilder b(1);
    for (int len : legs) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            Vertex next = b.add_vertex();
            b.add_edge(prev, next);
            prev = next;
        }
    }
    return b.build();
}

Graph two_branch_tree(int distance, int leaves_left, int leaves_right)
{
    GraphBuilder b(distance + 1);
    for (int i = 0; i < distance; ++i)
        b.add_edge(i, i + 1);
    for (int i = 0; i < leaves_left; ++i)
        b.add_edge(0, b.add_vertex());
    for (int i = 0; i < leaves_right; ++i)
        b.add_edge(distance, b.add_vertex());
    return b.build();
}

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph petersen()
{
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
}

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph hkl_graph(int k, int l, std::array<int, 3> i)
{
    if (k < 2 || l < 2)
        throw Error(ErrorKind::InvalidGraph, "bundle sizes must be at least 2");
    for (int x : i)
        if (x < 0 || x > 2)
            throw Error(ErrorKind::InvalidGraph, "attachment type must be 0, 1 or 2");
    GraphBuilder b(3);
    for (int j = 0; j < k; ++j) {
        Vertex m = b.add_vertex();
        b.add_edge(0, m);
        b.add_edge(m, 1);
    }
    for (int j = 0; j < l; ++j) {
        Vertex m = b.add_vertex();
        b.add_edge(1, m);
        b.add_edge(m, 2);
    }
    std::array<Vertex, 3> s{-1, -1, -1};
    for (int j = 0; j < 3; ++j)
        if (i[static_cast<std::size_t>(j)] == 2)
            s[static_cast<std::size_t>(j)] = b.add_vertex();
    if (i[0] == 0 && i[1] == 0 && i[2] == 0)
        return b.build();
    Vertex y = b.add_vertex();
    for (int j = 0; j < 3; ++j) {
        int t = i[static_cast<std::size_t>(j)];
        if (t == 1)
            b.add_edge(y, j);
        else if (t == 2) {
            b.add_edge(j, s[static_cast<std::size_t>(j)]);
            b.add_edge(s[static_cast<std::size_t>(j)], y);
        }
    }
    return b.build();
}

Graph htilde_graph()
{
    enum { x, y, z, t, a1, a2, b1, b2 };
    return Graph(8, {{x, a1}, {x, a2}, {a1, y}, {a2, y}, {y, b1}, {y, b2}, {b1, z}, {b2, z}, {t, x}, {t, b2}});
}

Graph random_graph(int n, double p, Rng& rng)
{
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p))
                b.add_edge(i, j);
    return b.build();
}

std::vector<Graph> all_graphs(int n)
{
    if (n < 0 || n > 8)
        throw Error(ErrorKind::TooLarge, "graph enumeration supports at most 8 vertices");
    std::vector<Graph> level{Graph(0)};
    for (int size = 1; size <= n; ++size) {
        // Every graph on `size` vertices arises by adding a vertex to one on size-1.
        std::map<std::string, Graph> next;
        for (const Graph& base : level) {
            for (unsigned mask = 0; mask < (1U << (size - 1)); ++mask) {
                GraphBuilder b(base);
                Vertex v = b.add_vertex();
                for (int u = 0; u < size - 1; ++u)
                    if (mask >> u & 1U)
                        b.add_edge(u, v);
                Graph g = b.build();
                next.try_emplace(canonical_form(g), std::move(g));
            }
        }
        level.clear();
        for (auto& [key, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> all_connected_graphs(int n)
{
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g))
            out.push_back(std::move(g));
    return out;
}

} // namespace hfs
