#include "hfs/pattern.hpp"

#include "hfs/error.hpp"

#include <algorithm>

namespace hfs {

std::vector<Vertex> branching_vertices(const Graph& h)
{
    return vertices_with_min_degree(h, 3);
}

bool is_subdivided_star(const Graph& h)
{
    return is_tree(h) && branching_vertices(h).size() <= 1;
}

bool is_subdivided_bistar(const Graph& h)
{
    if (!is_tree(h))
        return false;
    auto br = branching_vertices(h);
    return br.size() == 2 && h.has_edge(br[0], br[1]);
}

bool obs1_polynomial(const Graph& h)
{
    int bistars = 0;
    for (const auto& comp : components(h)) {
        Graph c = induced_subgraph(h, comp).graph;
        if (is_subdivided_bistar(c))
            ++bistars;
        else if (!is_subdivided_star(c))
            return false;
    }
    return bistars <= 1;
}

std::optional<EasyCase> thm_easy_case(const Graph& h)
{
    if (h.empty())
        return std::nullopt;
    bool case1 = min_degree(h) >= 2;
    for (Vertex v = 0; case1 && v < h.vertex_count(); ++v)
        if (h.degree(v) == 2 && !h.has_edge(h.neighbors(v)[0], h.neighbors(v)[1]))
            case1 = false;
    if (case1)
        return EasyCase::Case1;
    auto br = branching_vertices(h);
    if (induced_subgraph(h, br).graph.edge_count() >= 2)
        return EasyCase::Case2;
    return std::nullopt;
}

std::vector<Triangle> triangles(const Graph& h)
{
    std::vector<Triangle> out;
    for (const Edge& e : h.edges())
        for (Vertex w : h.neighbors(e.v))
            if (w > e.v && h.has_edge(e.u, w))
                out.push_back({e.u, e.v, w});
    return out;
}

namespace {

int high_count(const Graph& h, const Triangle& t)
{
    return static_cast<int>(std::count_if(t.begin(), t.end(), [&](Vertex v) { return h.degree(v) >= 3; }));
}

} // namespace

std::optional<RoofTriangle> find_roof_triangle(const Graph& h)
{
    for (const Triangle& t : triangles(h)) {
        if (high_count(h, t) != 2)
            continue;
        RoofTriangle r;
        for (Vertex v : t) {
            if (h.degree(v) < 3)
                r.apex = v;
            else if (r.a < 0)
                r.a = v;
            else
                r.b = v;
        }
        return r;
    }
    return std::nullopt;
}

std::optional<HangingTrianglePair> find_adjacent_hanging_triangles(const Graph& h)
{
    std::vector<std::pair<Vertex, Triangle>> hanging;
    for (const Triangle& t : triangles(h))
        if (high_count(h, t) == 1)
            for (Vertex v : t)
                if (h.degree(v) >= 3)
                    hanging.emplace_back(v, t);
    for (const auto& [a, t1] : hanging)
        for (const auto& [b, t2] : hanging)
            if (a < b && h.has_edge(a, b))
                return HangingTrianglePair{a, b, t1, t2};
    return std::nullopt;
}

bool has_unique_triangle(const Graph& h)
{
    return triangles(h).size() == 1;
}

TreeProfile tree_branching_profile(const Graph& h)
{
    if (!is_tree(h))
        throw Error(ErrorKind::NotATree, "tree_branching_profile needs a tree");
    TreeProfile p;
    p.branching = branching_vertices(h);
    p.branching_count = static_cast<int>(p.branching.size());
    if (p.branching_count == 2)
        p.distance = dist(h, p.branching[0], p.branching[1]);
    return p;
}

} // namespace hfs
