#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hfs {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// One edge subdivision. The fresh vertex gets id = vertex_count of the graph it is applied to.
struct SubdivisionStep {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const SubdivisionStep&) const = default;
};

using SubdivisionSolution = std::vector<SubdivisionStep>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const Edge> edges);
    Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adj_.empty(); }

    /// Sorted neighbour list.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

    /// Lexicographically sorted edge list.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

/// Mutable accumulator used to assemble a Graph; duplicate edges are merged.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count)) {}
    explicit GraphBuilder(const Graph& g);

    Vertex add_vertex();
    /// Appends `count` vertices and returns the id of the first.
    Vertex add_vertices(int count);
    void add_edge(Vertex u, Vertex v);
    /// Adds a copy of `g` with vertex i placed at `offset + i`; vertices must already exist.
    void add_graph(const Graph& g, Vertex offset);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    bool has_edge(Vertex u, Vertex v) const;

    Graph build() const;

private:
    std::vector<std::vector<Vertex>> adj_;
};

// --- subdivision -------------------------------------------------------------

Graph subdivide(const Graph& g, SubdivisionStep step);

/// Folds subdivide over `sol`; MissingEdge carries the index of the first bad step.
Graph apply_solution(const Graph& g, std::span<const SubdivisionStep> sol);

// --- structure ---------------------------------------------------------------

/// Girth of a graph; nullopt stands for an acyclic graph (infinite girth).
struct Girth {
    std::optional<int> length;

    bool infinite() const noexcept { return !length.has_value(); }
    auto operator<=>(const Girth& o) const
    {
        if (infinite() || o.infinite())
            return infinite() == o.infinite() ? std::strong_ordering::equal
                   : infinite()              ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
        return *length <=> *o.length;
    }
    bool operator==(const Girth& o) const { return length == o.length; }
};

Girth girth(const Graph& g);

/// Vertices that lie on at least one cycle of length girth(g). Throws Acyclic on forests.
std::vector<Vertex> shortest_cycle_vertices(const Graph& g);

/// Number of cycles of the given length (each cycle counted once).
long long count_cycles(const Graph& g, int length);

struct CoreResult {
    Graph core;
    /// core vertex i corresponds to original vertex to_original[i]
    std::vector<Vertex> to_original;
};

/// Repeated leaf deletion. Trees shrink to a single vertex. Throws NotConnected.
CoreResult two_core(const Graph& g);

bool is_two_connected(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

std::optional<int> dist(const Graph& g, Vertex u, Vertex v);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

int min_degree(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;
};

/// Subgraph induced by `vertices`, relabelled in the given order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

/// E(X1, X2): edges with one endpoint in each of the two disjoint sets.
std::vector<Edge> edges_between(const Graph& g, std::span<const Vertex> x1, std::span<const Vertex> x2);

Graph remove_edges(const Graph& g, std::span<const Edge> edges);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

std::vector<Vertex> vertices_with_min_degree(const Graph& g, int degree);

// --- isomorphism -------------------------------------------------------------

inline constexpr int kDefaultCanonicalBound = 16;
inline constexpr int kMaxCanonicalBound = 32;

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
/// Throws TooLarge above `bound` vertices.
std::string canonical_form(const Graph& g, int bound = kDefaultCanonicalBound);

bool are_isomorphic(const Graph& a, const Graph& b, int bound = kDefaultCanonicalBound);

std::string to_string(const Edge& e);
std::string to_string(const Graph& g);

} // namespace hfs
