#include "hfs/reductions.hpp"

#include "hfs/error.hpp"
#include "hfs/families.hpp"
#include "hfs/generators.hpp"
#include "hfs/induced.hpp"
#include "hfs/pattern.hpp"
#include "hfs/special_core.hpp"
#include "hfs/tracker.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hfs {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string vertex_anchor(Vertex v) { return std::to_string(v); }
std::string edge_anchor(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }
std::string arc_anchor(Vertex u, Vertex v) { return std::to_string(u) + ">" + std::to_string(v); }

struct Assembly {
    GraphBuilder graph;
    std::vector<GadgetBlock> blocks;

    explicit Assembly(int base) : graph(base) {}

    Vertex open(const std::string& kind, const std::string& anchor, int size)
    {
        Vertex first = graph.add_vertices(size);
        blocks.push_back({kind, anchor, first, size});
        return first;
    }

    /// Copies h restricted to `fresh` as a new block and identifies the h-vertices in `fixed` with
    /// existing target vertices. Edges of h among fresh and fixed vertices are copied; edges
    /// between two fixed vertices only when `fixed_edges` is set. Returns the h -> target map.
    std::vector<Vertex> place(const Graph& h, const std::vector<Vertex>& fresh,
                              const std::vector<std::pair<Vertex, Vertex>>& fixed, const std::string& kind,
                              const std::string& anchor, bool fixed_edges = false)
    {
        std::vector<Vertex> map(idx(h.vertex_count()), -1);
        std::vector<bool> is_fresh(idx(h.vertex_count()), false);
        Vertex first = open(kind, anchor, static_cast<int>(fresh.size()));
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            map[idx(fresh[i])] = first + static_cast<Vertex>(i);
            is_fresh[idx(fresh[i])] = true;
        }
        for (auto [hv, tv] : fixed)
            map[idx(hv)] = tv;
        for (const Edge& e : h.edges()) {
            if (map[idx(e.u)] < 0 || map[idx(e.v)] < 0)
                continue;
            if (!is_fresh[idx(e.u)] && !is_fresh[idx(e.v)] && !fixed_edges)
                continue;
            graph.add_edge(map[idx(e.u)], map[idx(e.v)]);
        }
        return map;
    }
};

std::vector<Vertex> complement_of(int n, const std::vector<Vertex>& removed)
{
    std::vector<bool> gone(idx(n), false);
    for (Vertex v : removed)
        gone[idx(v)] = true;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[idx(v)])
            out.push_back(v);
    return out;
}

void require(bool condition, ErrorKind kind, const std::string& what)
{
    if (!condition)
        throw Error(kind, what);
}

void check_source(const SourceInstance& src, SourceProblem expected, Lemma lemma)
{
    if (src.problem != expected)
        throw Error(ErrorKind::PreconditionViolated, std::string(to_string(lemma)) + " reduces from " +
                                                         to_string(expected) + ", got " + to_string(src.problem));
    require(src.budget >= 0, ErrorKind::PreconditionViolated, "negative source budget");
}

/// Replays a target solution as far as it stays valid.
SubdivisionTracker replay(const Graph& target, const SubdivisionSolution& sol)
{
    SubdivisionTracker t(target);
    for (const SubdivisionStep& s : sol) {
        try {
            t.apply(s);
        } catch (const Error&) {
            break;
        }
    }
    return t;
}

/// Edge-deletion witness: original source edges (ids shared with the target) subdivided >= times.
std::vector<Edge> source_edges_subdivided(const SubdivisionTracker& t, const Graph& source, int times)
{
    std::vector<Edge> out;
    for (const Edge& e : source.edges())
        if (t.count(e) >= times)
            out.push_back(e);
    return out;
}

SubdivisionSolution subdivide_each(const std::vector<Edge>& edges, int times, int vertex_count)
{
    SubdivisionSolution sol;
    Vertex next = vertex_count;
    for (const Edge& e : edges) {
        if (times <= 0)
            continue;
        sol.push_back({e.u, e.v});
        Vertex last = next++;
        for (int j = 1; j < times; ++j) {
            sol.push_back({e.u, last});
            last = next++;
        }
    }
    return sol;
}

std::vector<Edge> sorted_unique(std::vector<Edge> edges)
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> vs)
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

/// Original target edges with both endpoints in `vertices` that were subdivided at least once.
bool touched_inside(const SubdivisionTracker& t, const std::vector<Vertex>& vertices)
{
    std::set<Vertex> in(vertices.begin(), vertices.end());
    const Graph& g = t.original();
    for (Vertex v : vertices)
        for (Vertex w : g.neighbors(v))
            if (v < w && in.count(w) && t.count(Edge(v, w)) > 0)
                return true;
    return false;
}

std::vector<Vertex> block_vertices(const GadgetBlock& b, std::initializer_list<Vertex> extra)
{
    std::vector<Vertex> out(extra);
    for (int i = 0; i < b.size; ++i)
        out.push_back(b.first + i);
    return out;
}

ReductionArtifact start(Lemma lemma, const SourceInstance& src, const Graph& h)
{
    ReductionArtifact a;
    a.lemma = lemma;
    a.source = src;
    a.pattern = h;
    a.source_pattern = source_pattern_for(lemma, h);
    return a;
}

void finish(ReductionArtifact& a, Assembly& as, int budget)
{
    a.target = as.graph.build();
    a.target_budget = budget;
    a.blocks = std::move(as.blocks);
    a.metadata.insert(a.metadata.begin(),
                      {{"lemma", to_string(a.lemma)},
                       {"source_problem", to_string(a.source.problem)},
                       {"source_vertices", std::to_string(a.source.graph.vertex_count())},
                       {"source_edges", std::to_string(a.source.graph.edge_count())},
                       {"source_budget", std::to_string(a.source.budget)},
                       {"pattern_vertices", std::to_string(a.pattern.vertex_count())},
                       {"target_vertices", std::to_string(a.target.vertex_count())},
                       {"target_edges", std::to_string(a.target.edge_count())},
                       {"target_budget", std::to_string(a.target_budget)}});
}

/// Forward and backward maps shared by the lemmas that subdivide F once per edge.
void once_per_edge_maps(ReductionArtifact& a)
{
    const Graph source = a.source.graph;
    const Graph target = a.target;
    a.forward = [target](const SourceWitness& w) {
        return subdivide_each(sorted_unique(w.edges), 1, target.vertex_count());
    };
    a.backward = [source, target](const SubdivisionSolution& sol) {
        SourceWitness w;
        w.edges = source_edges_subdivided(replay(target, sol), source, 1);
        return w;
    };
}

/// Common shape of the two Vertex Cover lemmas: V(G) = 0..n-1, apex at n.
void apex_maps(ReductionArtifact& a, Vertex apex,
               std::vector<std::pair<std::vector<Vertex>, Vertex>> gadget_owner)
{
    const Graph target = a.target;
    const int n = a.source.graph.vertex_count();
    a.forward = [target, apex](const SourceWitness& w) {
        SubdivisionSolution sol;
        for (Vertex v : sorted_unique(w.vertices))
            sol.push_back({v, apex});
        return sol;
    };
    a.backward = [target, apex, n, gadget_owner = std::move(gadget_owner)](const SubdivisionSolution& sol) {
        SubdivisionTracker t = replay(target, sol);
        std::vector<Vertex> y;
        for (Vertex v = 0; v < n; ++v)
            if (t.count(Edge(v, apex)) > 0)
                y.push_back(v);
        for (const auto& [vertices, owner] : gadget_owner)
            if (touched_inside(t, vertices))
                y.push_back(owner);
        SourceWitness w;
        w.vertices = sorted_unique(std::move(y));
        return w;
    };
}

bool branching_induce_at_most_one_edge(const Graph& h)
{
    std::vector<Vertex> x = branching_vertices(h);
    return induced_subgraph(h, x).graph.edge_count() <= 1;
}

} // namespace

SourceProblem source_problem_for(Lemma lemma)
{
    switch (lemma) {
    case Lemma::Girth4A:
    case Lemma::Girth4B:
        return SourceProblem::VertexCover;
    case Lemma::TreeEven:
        return SourceProblem::P3FreeEdgeDeletion;
    case Lemma::TreeOdd:
        return SourceProblem::P4FreeEdgeDeletion;
    default:
        return SourceProblem::EdgeDeletion;
    }
}

Graph source_pattern_for(Lemma lemma, const Graph& h)
{
    switch (lemma) {
    case Lemma::EdgeDelEq:
        return h;
    case Lemma::Degree3:
        return induced_subgraph(h, branching_vertices(h)).graph;
    case Lemma::Roof: {
        auto roof = find_roof_triangle(h);
        if (!roof)
            return Graph();
        std::vector<Vertex> x{roof->a, roof->b};
        for (const Triangle& t : triangles(h))
            if (std::count(t.begin(), t.end(), roof->a) && std::count(t.begin(), t.end(), roof->b))
                for (Vertex v : t)
                    x.push_back(v);
        return induced_subgraph(h, sorted_unique(std::move(x))).graph;
    }
    case Lemma::Hanging: {
        auto pair = find_adjacent_hanging_triangles(h);
        if (!pair)
            return Graph();
        std::vector<Vertex> x{pair->a, pair->b};
        for (const Triangle& t : triangles(h))
            for (Vertex att : {pair->a, pair->b})
                if (std::count(t.begin(), t.end(), att)) {
                    int high = 0;
                    for (Vertex v : t)
                        high += h.degree(v) >= 3;
                    if (high == 1)
                        x.insert(x.end(), t.begin(), t.end());
                }
        return induced_subgraph(h, sorted_unique(std::move(x))).graph;
    }
    case Lemma::TreeEven:
        return path_graph(3);
    case Lemma::TreeOdd:
        return path_graph(4);
    default:
        return Graph();
    }
}

// --- edge-deletion equivalence ------------------------------------------------

ReductionArtifact reduce_edge_deletion_equiv(const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    check_source(src, SourceProblem::EdgeDeletion, Lemma::EdgeDelEq);
    if (opt.enforce_preconditions) {
        bool ok = h.vertex_count() > 0 && min_degree(h) >= 2;
        for (Vertex v = 0; ok && v < h.vertex_count(); ++v)
            if (h.degree(v) == 2)
                ok = h.has_edge(h.neighbors(v)[0], h.neighbors(v)[1]);
        require(ok, ErrorKind::PatternNotEligible,
                "needs minimum degree 2 and adjacent neighbours around every degree-2 vertex");
    }
    ReductionArtifact a = start(Lemma::EdgeDelEq, src, h);
    Assembly as(0);
    as.graph = GraphBuilder(src.graph);
    finish(a, as, src.budget);
    once_per_edge_maps(a);
    return a;
}

// --- degree 3 -------------------------------------------------------------------

ReductionArtifact reduce_degree3(const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    check_source(src, SourceProblem::EdgeDeletion, Lemma::Degree3);
    const std::vector<Vertex> x = branching_vertices(h);
    if (opt.enforce_preconditions)
        require(induced_subgraph(h, x).graph.edge_count() >= 2, ErrorKind::PatternNotEligible,
                "the degree->=3 vertices must induce at least two edges");

    ReductionArtifact a = start(Lemma::Degree3, src, h);
    const Graph& g = src.graph;
    const int n = g.vertex_count();
    const int k = src.budget;
    Assembly as(0);
    as.graph = GraphBuilder(g);

    std::vector<bool> in_x(idx(h.vertex_count()), false);
    for (Vertex v : x)
        in_x[idx(v)] = true;
    InducedSubgraph rest = induced_subgraph(h, complement_of(h.vertex_count(), x));
    int counts[4] = {0, 0, 0, 0};
    for (const auto& comp_local : components(rest.graph)) {
        std::vector<Vertex> comp;
        for (Vertex v : comp_local)
            comp.push_back(rest.to_original[idx(v)]);
        std::sort(comp.begin(), comp.end());
        // (endpoint in S_i, neighbour in X) pairs
        std::vector<std::pair<Vertex, Vertex>> links;
        for (Vertex v : comp)
            for (Vertex w : h.neighbors(v))
                if (in_x[idx(w)])
                    links.emplace_back(v, w);
        const int size = static_cast<int>(comp.size());
        const std::string tag = "S" + std::to_string(comp.front());
        if (links.empty()) {
            ++counts[0];
            for (int i = 0; i <= k; ++i)
                as.place(h, comp, {}, tag + ":isolated", std::to_string(i));
        } else if (links.size() == 1) {
            ++counts[1];
            for (Vertex v = 0; v < n; ++v) {
                auto map = as.place(h, comp, {}, tag + ":pendant", vertex_anchor(v));
                as.graph.add_edge(v, map[idx(links[0].first)]);
            }
        } else if (size >= 2) {
            ++counts[2];
            Vertex ea = std::min(links[0].first, links[1].first);
            Vertex eb = std::max(links[0].first, links[1].first);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u; v < n; ++v)
                    for (int i = 0; i <= k; ++i) {
                        auto map = as.place(h, comp, {}, tag + ":bridge", edge_anchor(u, v));
                        as.graph.add_edge(u, map[idx(ea)]);
                        as.graph.add_edge(v, map[idx(eb)]);
                    }
        } else {
            ++counts[3];
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    for (int i = 0; i <= k; ++i) {
                        Vertex z = as.open(tag + ":hinge", edge_anchor(u, v), 1);
                        as.graph.add_edge(u, z);
                        as.graph.add_edge(v, z);
                    }
        }
    }
    a.metadata = {{"components_isolated", std::to_string(counts[0])},
                  {"components_one_attachment", std::to_string(counts[1])},
                  {"components_two_attachments", std::to_string(counts[2])},
                  {"components_single_vertex_two_attachments", std::to_string(counts[3])}};
    finish(a, as, k);
    once_per_edge_maps(a);
    return a;
}

// --- girth 3: roof and hanging triangles ----------------------------------------

namespace {

ReductionArtifact attach_along_edges(Lemma lemma, const SourceInstance& src, const Graph& h, Vertex ha, Vertex hb,
                                     const std::vector<Vertex>& x, bool both_orientations)
{
    ReductionArtifact a = start(lemma, src, h);
    const Graph& g = src.graph;
    Assembly as(0);
    as.graph = GraphBuilder(g);
    std::vector<Vertex> removed = x;
    const std::vector<Vertex> fresh = complement_of(h.vertex_count(), removed);
    for (const Edge& e : g.edges())
        for (int i = 0; i <= src.budget; ++i) {
            as.place(h, fresh, {{ha, e.u}, {hb, e.v}}, "R", arc_anchor(e.u, e.v));
            if (both_orientations)
                as.place(h, fresh, {{ha, e.v}, {hb, e.u}}, "R", arc_anchor(e.v, e.u));
        }
    a.metadata = {{"attachment_a", std::to_string(ha)},
                  {"attachment_b", std::to_string(hb)},
                  {"gadget_size", std::to_string(fresh.size())},
                  {"gadgets", std::to_string(as.blocks.size())}};
    finish(a, as, src.budget);
    once_per_edge_maps(a);
    return a;
}

} // namespace

ReductionArtifact reduce_roof_triangle(const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    check_source(src, SourceProblem::EdgeDeletion, Lemma::Roof);
    auto roof = find_roof_triangle(h);
    require(roof.has_value(), ErrorKind::PatternNotEligible, "pattern has no roof triangle");
    if (opt.enforce_preconditions)
        require(branching_induce_at_most_one_edge(h), ErrorKind::PatternNotEligible,
                "the degree->=3 vertices induce more than one edge");
    std::vector<Vertex> x{roof->a, roof->b};
    for (Vertex c : h.neighbors(roof->a))
        if (c != roof->b && h.has_edge(c, roof->b))
            x.push_back(c);
    std::vector<Vertex> apexes(x.begin() + 2, x.end());
    auto a = attach_along_edges(Lemma::Roof, src, h, roof->a, roof->b, sorted_unique(x), false);
    a.metadata.emplace_back("book_pages", std::to_string(apexes.size()));
    return a;
}

ReductionArtifact reduce_hanging_triangles(const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    check_source(src, SourceProblem::EdgeDeletion, Lemma::Hanging);
    auto pair = find_adjacent_hanging_triangles(h);
    require(pair.has_value(), ErrorKind::PatternNotEligible, "pattern has no hanging triangles with adjacent attachments");
    if (opt.enforce_preconditions) {
        require(!find_roof_triangle(h), ErrorKind::PatternNotEligible, "pattern has a roof triangle");
        require(branching_induce_at_most_one_edge(h), ErrorKind::PatternNotEligible,
                "the degree->=3 vertices induce more than one edge");
    }
    std::vector<Vertex> x{pair->a, pair->b};
    for (const Triangle& t : triangles(h))
        for (Vertex att : {pair->a, pair->b})
            if (std::count(t.begin(), t.end(), att)) {
                int high = 0;
                for (Vertex v : t)
                    high += h.degree(v) >= 3;
                if (high == 1)
                    x.insert(x.end(), t.begin(), t.end());
            }
    return attach_along_edges(Lemma::Hanging, src, h, pair->a, pair->b, sorted_unique(x), true);
}

// --- girth >= 4 -----------------------------------------------------------------

ReductionArtifact reduce_girth4a(const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    check_source(src, SourceProblem::VertexCover, Lemma::Girth4A);
    require(!is_forest(h), ErrorKind::PatternNotEligible, "pattern is a forest");
    if (opt.enforce_preconditions) {
        require(*girth(h).length >= 4, ErrorKind::PatternNotEligible, "pattern has a triangle");
        require(!thm_easy_case(h), ErrorKind::PatternNotEligible, "pattern is covered by the edge-deletion lemmas");
        require(!family_membership(h), ErrorKind::PatternNotEligible,
                "pattern is an induced subgraph of an exceptional family member");
    }
    Vertex c = -1;
    for (Vertex v : shortest_cycle_vertices(h))
        if (h.degree(v) == 2) {
            c = v;
            break;
        }
    require(c >= 0, ErrorKind::PatternNotEligible, "no degree-2 vertex on a shortest cycle");
    const Vertex ha = h.neighbors(c)[0];
    const Vertex hb = h.neighbors(c)[1];

    ReductionArtifact a = start(Lemma::Girth4A, src, h);
    const Graph& g = src.graph;
    const int n = g.vertex_count();
    Assembly as(n + 1);
    const Vertex z = n;
    for (Vertex v = 0; v < n; ++v)
        as.graph.add_edge(z, v);
    const std::vector<Vertex> fresh = complement_of(h.vertex_count(), {c, ha, hb});
    std::vector<std::pair<std::vector<Vertex>, Vertex>> owners;
    const std::vector<Edge> edges = g.edges();
    for (const Edge& e : edges) {
        as.place(h, fresh, {{c, z}, {ha, e.u}, {hb, e.v}}, "X", edge_anchor(e.u, e.v));
        // zu and zv belong to the apex rule, not to the gadget of uv.
        owners.emplace_back(block_vertices(as.blocks.back(), {e.u, e.v}), std::min(e.u, e.v));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const GadgetBlock& bi = as.blocks[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const GadgetBlock& bj = as.blocks[j];
            for (int s = 0; s < bi.size; ++s)
                for (int t = 0; t < bj.size; ++t)
                    as.graph.add_edge(bi.first + s, bj.first + t);
        }
        for (Vertex w = 0; w < n; ++w)
            if (w != edges[i].u && w != edges[i].v)
                for (int s = 0; s < bi.size; ++s)
                    as.graph.add_edge(w, bi.first + s);
    }
    a.metadata = {{"apex", std::to_string(z)},
                  {"c", std::to_string(c)},
                  {"a", std::to_string(ha)},
                  {"b", std::to_string(hb)},
                  {"gadget_size", std::to_string(fresh.size())}};
    finish(a, as, src.budget);
    apex_maps(a, z, std::move(owners));
    return a;
}

namespace {

std::vector<Vertex> lift_to(const CoreResult& core, const SpecialCoreParams& p)
{
    std::vector<Vertex> out;
    for (Vertex s : p.embedding)
        out.push_back(core.to_original[idx(s)]);
    return out;
}

} // namespace

ReductionArtifact reduce_girth4b(const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    check_source(src, SourceProblem::VertexCover, Lemma::Girth4B);
    require(!is_forest(h), ErrorKind::PatternNotEligible, "pattern is a forest");
    if (opt.enforce_preconditions)
        require(!thm_easy_case(h), ErrorKind::PatternNotEligible, "pattern is covered by the edge-deletion lemmas");

    const std::vector<Vertex> scv = shortest_cycle_vertices(h);
    const bool cond1 = is_two_connected(induced_subgraph(h, scv).graph);
    std::optional<SpecialCoreParams> special;
    std::optional<CoreResult> core;
    if (is_connected(h)) {
        core = two_core(h);
        special = recognize_special_core(core->core);
    }
    require(cond1 || special, ErrorKind::PatternNotEligible,
            "shortest-cycle vertices are not 2-connected and the core is not exceptional");

    const Graph& g = src.graph;
    if (girth(g) <= Girth{h.vertex_count()})
        throw Error(ErrorKind::GirthTooSmall, "source girth must exceed " + std::to_string(h.vertex_count()));

    ReductionArtifact a = start(Lemma::Girth4B, src, h);
    const int n = g.vertex_count();
    Assembly as(n + 1);
    const Vertex q = n;
    for (Vertex v = 0; v < n; ++v)
        as.graph.add_edge(q, v);
    std::vector<std::pair<std::vector<Vertex>, Vertex>> owners;

    std::vector<Vertex> std_to_h;
    if (special)
        std_to_h = lift_to(*core, *special);
    const bool hkl = special && special->kind == CoreKind::Hkl;
    const bool case1 = cond1 || (special && special->kind == CoreKind::Htilde) ||
                       (hkl && special->i[0] != 0 && special->i[2] != 0);

    if (case1) {
        Vertex ct = -1;
        std::string why;
        if (cond1) {
            for (Vertex v : scv)
                if (h.degree(v) == 2) {
                    ct = v;
                    break;
                }
            why = "shortest-cycle";
        } else if (special->kind == CoreKind::Htilde) {
            ct = std_to_h[4];
            why = "a1";
        } else {
            // Bundle sizes are normalised to k <= l, so x_{1,1} sits at standard vertex 3.
            ct = std_to_h[3];
            why = "x11";
        }
        require(ct >= 0 && h.degree(ct) == 2, ErrorKind::PatternNotEligible, "no degree-2 choice for the apex vertex");
        const Vertex ha = h.neighbors(ct)[0];
        const Vertex hb = h.neighbors(ct)[1];
        const std::vector<Vertex> fresh = complement_of(h.vertex_count(), {ct, ha, hb});
        for (const Edge& e : g.edges()) {
            as.place(h, fresh, {{ct, q}, {ha, e.u}, {hb, e.v}}, "X", edge_anchor(e.u, e.v), true);
            owners.emplace_back(block_vertices(as.blocks.back(), {e.u, e.v}), std::min(e.u, e.v));
        }
        a.metadata = {{"case", "1"}, {"apex_role", why}, {"ctilde", std::to_string(ct)}};
    } else {
        SpecialCoreParams p = *special;
        const int k = p.k;
        const int l = p.l;
        std::vector<Vertex> bundle1(std_to_h.begin() + 3, std_to_h.begin() + 3 + k);
        std::vector<Vertex> bundle2(std_to_h.begin() + 3 + k, std_to_h.begin() + 3 + k + l);
        Vertex x1 = std_to_h[0], x2 = std_to_h[1], x3 = std_to_h[2];
        int kk = k, ll = l;
        bool mirrored = false;
        if (p.i[2] != 0) {
            std::swap(x1, x3);
            std::swap(bundle1, bundle2);
            std::swap(kk, ll);
            mirrored = true;
        }
        // V1 / V2 split at x2: L is the side of x1 in core - x2.
        std::set<Vertex> core_set(core->to_original.begin(), core->to_original.end());
        std::vector<Vertex> minus_x2 = complement_of(h.vertex_count(), {x2});
        InducedSubgraph hx = induced_subgraph(h, minus_x2);
        std::vector<Vertex> v1{x2}, v2{x2};
        std::vector<Vertex> side_of_x1;
        for (const auto& comp : components(hx.graph)) {
            std::vector<Vertex> vs;
            bool has_x1 = false, has_x3 = false, meets_core = false;
            for (Vertex lv : comp) {
                Vertex v = hx.to_original[idx(lv)];
                vs.push_back(v);
                has_x1 |= v == x1;
                has_x3 |= v == x3;
                meets_core |= core_set.count(v) > 0;
            }
            if (has_x3 && !has_x1)
                v2.insert(v2.end(), vs.begin(), vs.end());
            else if (has_x1 || !meets_core)
                v1.insert(v1.end(), vs.begin(), vs.end());
            else
                throw Error(ErrorKind::Internal, "core component touches neither side of x2");
        }
        v1 = sorted_unique(std::move(v1));
        v2 = sorted_unique(std::move(v2));
        auto degree_two = [&](const std::vector<Vertex>& bundle) {
            for (Vertex v : bundle)
                if (h.degree(v) == 2)
                    return v;
            throw Error(ErrorKind::PatternNotEligible, "every bundle vertex has degree above 2");
        };
        const bool sub21 = kk <= ll;
        // Per ordered pair: the side carrying the apex; per vertex: the other side.
        const std::vector<Vertex>& pair_side = sub21 ? v1 : v2;
        const std::vector<Vertex>& vertex_side = sub21 ? v2 : v1;
        const Vertex apex_role = degree_two(sub21 ? bundle1 : bundle2);
        const Vertex end_role = sub21 ? x1 : x3;

        std::vector<Vertex> pair_fresh;
        for (Vertex v : pair_side)
            if (v != apex_role && v != end_role && v != x2)
                pair_fresh.push_back(v);
        std::vector<Vertex> vertex_fresh;
        for (Vertex v : vertex_side)
            if (v != x2)
                vertex_fresh.push_back(v);

        for (const Edge& e : g.edges())
            for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                as.place(h, pair_fresh, {{apex_role, q}, {end_role, u}, {x2, v}}, "Xuv", arc_anchor(u, v));
                owners.emplace_back(block_vertices(as.blocks.back(), {u, v}), std::min(u, v));
            }
        for (Vertex v = 0; v < n; ++v) {
            as.place(h, vertex_fresh, {{x2, v}}, "Xv", vertex_anchor(v));
            owners.emplace_back(block_vertices(as.blocks.back(), {v}), v);
        }
        a.metadata = {{"case", "2"},
                      {"subcase", sub21 ? "2.1" : "2.2"},
                      {"core", describe(p)},
                      {"mirrored", mirrored ? "yes" : "no"},
                      {"apex_role", std::to_string(apex_role)},
                      {"v1_size", std::to_string(v1.size())},
                      {"v2_size", std::to_string(v2.size())}};
    }
    if (special)
        a.metadata.emplace_back("core_kind", special->kind == CoreKind::Htilde ? "Htilde" : "Hkl");
    finish(a, as, src.budget);
    apex_maps(a, q, std::move(owners));
    return a;
}

// --- trees --------------------------------------------------------------------

namespace {

ReductionArtifact reduce_tree(Lemma lemma, const SourceInstance& src, const Graph& h, int d, int q_max)
{
    TreeProfile prof = tree_branching_profile(h);
    const Vertex u = prof.branching[0];
    const Vertex v = prof.branching[1];
    // The u-v path and the pendant paths hanging off it.
    std::vector<int> du = bfs_distances(h, u);
    std::vector<int> dv = bfs_distances(h, v);
    std::vector<Vertex> path;
    for (Vertex w = 0; w < h.vertex_count(); ++w)
        if (du[idx(w)] + dv[idx(w)] == d)
            path.push_back(w);
    InducedSubgraph rest = induced_subgraph(h, complement_of(h.vertex_count(), path));
    int lambda = 0;
    for (const auto& comp : components(rest.graph))
        lambda = std::max(lambda, static_cast<int>(comp.size()));
    const int c = std::max(h.degree(u), h.degree(v)) - 1;
    const int big_k = d * src.budget;

    ReductionArtifact a = start(lemma, src, h);
    const Graph& g = src.graph;
    Assembly as(0);
    as.graph = GraphBuilder(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (int q = 0; q <= q_max; ++q)
            for (int copy = 0; copy <= big_k; ++copy) {
                Vertex first = as.open("A" + std::to_string(q), vertex_anchor(x), q + c * lambda);
                Vertex prev = x;
                for (int s = 0; s < q; ++s) {
                    as.graph.add_edge(prev, first + s);
                    prev = first + s;
                }
                const Vertex bq = prev;
                Vertex next = first + q;
                for (int leg = 0; leg < c; ++leg) {
                    Vertex p = bq;
                    for (int s = 0; s < lambda; ++s) {
                        as.graph.add_edge(p, next);
                        p = next++;
                    }
                }
            }
    a.metadata = {{"d", std::to_string(d)},
                  {"lambda", std::to_string(lambda)},
                  {"c", std::to_string(c)},
                  {"q_max", std::to_string(q_max)}};
    finish(a, as, big_k);
    const Graph source = g;
    const Graph target = a.target;
    a.forward = [target, d](const SourceWitness& w) {
        return subdivide_each(sorted_unique(w.edges), d, target.vertex_count());
    };
    a.backward = [source, target, d](const SubdivisionSolution& sol) {
        SourceWitness w;
        w.edges = source_edges_subdivided(replay(target, sol), source, d);
        return w;
    };
    return a;
}

int two_branch_distance(const Graph& h)
{
    if (!is_tree(h))
        throw Error(ErrorKind::PatternNotEligible, "pattern is not a tree");
    TreeProfile prof = tree_branching_profile(h);
    if (prof.branching_count != 2)
        throw Error(ErrorKind::PatternNotEligible, "pattern needs exactly two branching vertices");
    return *prof.distance;
}

} // namespace

ReductionArtifact reduce_tree_even(const SourceInstance& src, const Graph& h, const ReduceOptions&)
{
    check_source(src, SourceProblem::P3FreeEdgeDeletion, Lemma::TreeEven);
    const int d = two_branch_distance(h);
    require(d >= 2 && d % 2 == 0, ErrorKind::PatternNotEligible, "branching vertices must be at even distance");
    return reduce_tree(Lemma::TreeEven, src, h, d, d / 2 - 1);
}

ReductionArtifact reduce_tree_odd(const SourceInstance& src, const Graph& h, const ReduceOptions&)
{
    check_source(src, SourceProblem::P4FreeEdgeDeletion, Lemma::TreeOdd);
    const int d = two_branch_distance(h);
    require(d >= 5 && d % 2 == 1, ErrorKind::PatternNotEligible, "branching vertices must be at odd distance >= 5");
    return reduce_tree(Lemma::TreeOdd, src, h, d, (d - 3) / 2);
}

ReductionArtifact reduce(Lemma lemma, const SourceInstance& src, const Graph& h, const ReduceOptions& opt)
{
    if (h.empty())
        throw Error(ErrorKind::EmptyPattern, "pattern has no vertices");
    switch (lemma) {
    case Lemma::EdgeDelEq:
        return reduce_edge_deletion_equiv(src, h, opt);
    case Lemma::Degree3:
        return reduce_degree3(src, h, opt);
    case Lemma::Roof:
        return reduce_roof_triangle(src, h, opt);
    case Lemma::Hanging:
        return reduce_hanging_triangles(src, h, opt);
    case Lemma::Girth4A:
        return reduce_girth4a(src, h, opt);
    case Lemma::Girth4B:
        return reduce_girth4b(src, h, opt);
    case Lemma::TreeEven:
        return reduce_tree_even(src, h, opt);
    case Lemma::TreeOdd:
        return reduce_tree_odd(src, h, opt);
    }
    throw Error(ErrorKind::Internal, "unknown lemma");
}

// --- source side ----------------------------------------------------------------

VerifyReport verify_source_witness(const SourceInstance& src, const Graph& source_pattern, const SourceWitness& w)
{
    const Graph& g = src.graph;
    if (src.problem == SourceProblem::VertexCover) {
        std::vector<Vertex> y = sorted_unique(w.vertices);
        if (y.size() != w.vertices.size())
            return {false, "repeated vertex"};
        if (static_cast<int>(y.size()) > src.budget)
            return {false, "cover larger than budget"};
        for (Vertex v : y)
            if (!g.contains(v))
                return {false, "vertex " + std::to_string(v) + " out of range"};
        for (const Edge& e : g.edges())
            if (!std::binary_search(y.begin(), y.end(), e.u) && !std::binary_search(y.begin(), y.end(), e.v))
                return {false, "edge " + to_string(e) + " uncovered"};
        return {true, ""};
    }
    std::vector<Edge> f = sorted_unique(w.edges);
    if (f.size() != w.edges.size())
        return {false, "repeated edge"};
    if (static_cast<int>(f.size()) > src.budget)
        return {false, "more deletions than budget"};
    for (const Edge& e : f)
        if (!g.contains(e.u) || !g.contains(e.v) || !g.has_edge(e.u, e.v))
            return {false, "edge " + to_string(e) + " not in graph"};
    if (!is_h_free(remove_edges(g, f), source_pattern))
        return {false, "pattern survives the deletions"};
    return {true, ""};
}

OracleResult source_oracle(const SourceInstance& src, const Graph& source_pattern, const OracleOptions& opt)
{
    if (src.problem == SourceProblem::VertexCover)
        return oracle_vertex_cover(src.graph, src.budget, opt);
    return oracle_edge_deletion(src.graph, source_pattern, src.budget, opt);
}

SourceWitness witness_of(const OracleResult& r)
{
    return SourceWitness{r.deleted_edges, r.cover};
}

SourceInstance sample_source(SourceProblem problem, int size, std::optional<int> girth_requirement, std::uint64_t seed,
                             int budget)
{
    if (size < 1)
        throw Error(ErrorKind::Infeasible, "source needs at least one vertex");
    Rng rng(seed);
    SourceInstance s{problem, Graph(size), budget, girth_requirement};
    if (!girth_requirement) {
        double p = problem == SourceProblem::VertexCover ? 0.4 : 0.5;
        s.graph = random_graph(size, p, rng);
        return s;
    }
    const int need = *girth_requirement;
    if (need > size)
        throw Error(ErrorKind::Infeasible,
                    "no cycle of length >= " + std::to_string(need) + " fits on " + std::to_string(size) + " vertices");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < size; ++u)
        for (Vertex v = u + 1; v < size; ++v)
            pairs.emplace_back(u, v);
    for (int attempt = 0; attempt < 200; ++attempt) {
        rng.shuffle(pairs);
        const int target_edges = rng.between(size, size + size / 2);
        GraphBuilder b(size);
        int added = 0;
        for (const Edge& e : pairs) {
            if (added == target_edges)
                break;
            // Adding uv closes cycles of length dist(u,v)+1.
            std::optional<int> d = dist(b.build(), e.u, e.v);
            if (!d || *d + 1 >= need) {
                b.add_edge(e.u, e.v);
                ++added;
            }
        }
        Graph g = b.build();
        if (!girth(g).infinite()) {
            s.graph = std::move(g);
            return s;
        }
    }
    throw Error(ErrorKind::Infeasible, "rejection sampling found no graph of girth >= " + std::to_string(need));
}

const char* to_string(Lemma lemma)
{
    switch (lemma) {
    case Lemma::EdgeDelEq: return "edge-del-eq";
    case Lemma::Degree3: return "degree3";
    case Lemma::Roof: return "roof";
    case Lemma::Hanging: return "hanging";
    case Lemma::Girth4A: return "girth4a";
    case Lemma::Girth4B: return "girth4b";
    case Lemma::TreeEven: return "tree-even";
    case Lemma::TreeOdd: return "tree-odd";
    }
    return "?";
}

const char* to_string(SourceProblem p)
{
    switch (p) {
    case SourceProblem::VertexCover: return "vertex-cover";
    case SourceProblem::EdgeDeletion: return "edge-deletion";
    case SourceProblem::P3FreeEdgeDeletion: return "p3-free-edge-deletion";
    case SourceProblem::P4FreeEdgeDeletion: return "p4-free-edge-deletion";
    }
    return "?";
}

std::optional<Lemma> parse_lemma(const std::string& s)
{
    for (Lemma l : {Lemma::EdgeDelEq, Lemma::Degree3, Lemma::Roof, Lemma::Hanging, Lemma::Girth4A, Lemma::Girth4B,
                    Lemma::TreeEven, Lemma::TreeOdd})
        if (s == to_string(l))
            return l;
    return std::nullopt;
}

std::optional<SourceProblem> parse_source_problem(const std::string& s)
{
    for (SourceProblem p : {SourceProblem::VertexCover, SourceProblem::EdgeDeletion, SourceProblem::P3FreeEdgeDeletion,
                            SourceProblem::P4FreeEdgeDeletion})
        if (s == to_string(p))
            return p;
    return std::nullopt;
}

std::string metadata_text(const ReductionArtifact& a)
{
    std::ostringstream out;
    for (const auto& [key, value] : a.metadata)
        out << key << '=' << value << '\n';
    for (const GadgetBlock& b : a.blocks)
        out << "block=" << b.kind << ':' << b.anchor << ':' << b.first << ':' << b.size << '\n';
    return out.str();
}

} // namespace hfs
