#pragma once

#include "hfs/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hfs {

/// mapping[p] is the host vertex that pattern vertex p is sent to.
struct InducedEmbedding {
    std::vector<Vertex> mapping;

    /// Host vertices used, sorted.
    std::vector<Vertex> vertex_set() const;
    /// Host edges that are images of pattern edges, sorted.
    std::vector<Edge> image_edges(const Graph& pattern) const;
};

/// First embedding in the backtracking order, or nullopt.
std::optional<InducedEmbedding> find_induced_copy(const Graph& host, const Graph& pattern);

bool is_h_free(const Graph& host, const Graph& pattern);

/// Number of vertex subsets of `host` inducing a copy of `pattern`.
long long count_induced_copies(const Graph& host, const Graph& pattern);

/// Calls `visit` for every embedding until it returns false.
void for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                const std::function<bool(const std::vector<Vertex>&)>& visit);

long long automorphism_count(const Graph& g);

/// An isomorphism a -> b when one exists; works beyond the canonical-form bound.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

} // namespace hfs
