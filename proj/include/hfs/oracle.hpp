#pragma once

#include "hfs/graph.hpp"
#include "hfs/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfs {

struct OracleOptions {
    /// Refuse instances whose worst-case number of states exceeds this. Default from HFS_STATE_CAP or 1e6.
    long long state_cap = default_state_cap();
    /// Largest graph the canonical-form search handles. Default from HFS_CANONICAL_BOUND or 16.
    int canonical_bound = default_canonical_bound();
    /// Deduplicate reachable graphs by canonical form (the search is exhaustive either way).
    bool dedupe = true;

    static long long default_state_cap();
    static int default_canonical_bound();
};

struct OracleResult {
    Answer answer = Answer::No;
    SubdivisionSolution subdivision_witness;
    std::vector<Edge> deleted_edges;
    std::vector<Vertex> cover;
    long long states_visited = 0;
    std::string mode; ///< "canonical-bfs", "count-vectors", "subsets"
};

/// Number of ways to distribute at most k subdivisions over m edges: C(m+k, k), saturating.
long long subdivision_state_estimate(int edges, int k);

/// Exhaustive search over everything reachable with at most k subdivisions. Throws TooLarge.
OracleResult oracle_subdivision(const Graph& g, const Graph& h, int k, const OracleOptions& opt = {});

/// For every pattern, the least number of subdivisions that makes g free of it, or nullopt if more than kmax are needed.
std::vector<std::optional<int>> oracle_min_subdivisions(const Graph& g, const std::vector<Graph>& patterns, int kmax,
                                                        const OracleOptions& opt = {});

OracleResult oracle_edge_deletion(const Graph& g, const Graph& h, int k, const OracleOptions& opt = {});
OracleResult oracle_vertex_cover(const Graph& g, int p, const OracleOptions& opt = {});

/// Graph (and its replay sequence) obtained by subdividing original edge i exactly counts[i] times.
std::pair<Graph, SubdivisionSolution> subdivide_by_counts(const Graph& g, const std::vector<int>& counts);

} // namespace hfs
