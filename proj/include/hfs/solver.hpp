#pragma once

#include "hfs/graph.hpp"

#include <string>

namespace hfs {

enum class Answer { No, Yes };

const char* to_string(Answer a);

struct SolveOptions {
    /// Delegate to the polynomial procedures when the pattern allows it.
    bool fast_paths = true;
    /// Remember failed states (keyed by per-edge subdivision counts) within each top-level branch.
    bool memo = false;
    /// Worker threads for the top-level branches; results do not depend on it.
    int jobs = 1;
};

struct SolveResult {
    Answer answer = Answer::No;
    SubdivisionSolution solution;
    long long nodes_explored = 0;
    std::string method; ///< "branching", "star" or "bistar"
};

/// Decides whether at most k subdivisions make g free of induced copies of h. Throws EmptyPattern.
SolveResult solve(const Graph& g, const Graph& h, int k, const SolveOptions& options = {});

/// Every component of h is a subdivided star: such copies can never be destroyed.
SolveResult solve_poly_star(const Graph& g, const Graph& h, int k);

/// h has exactly one subdivided-bistar component and all others are subdivided stars.
SolveResult solve_poly_bistar(const Graph& g, const Graph& h, int k);

/// sum_{j=0..k} |E(h)|^j, saturating at LLONG_MAX.
long long branching_node_bound(int pattern_edges, int k);

struct VerifyReport {
    bool ok = false;
    std::string reason; ///< empty when ok
};

VerifyReport verify_solution(const Graph& g, const Graph& h, int k, const SubdivisionSolution& sol);

} // namespace hfs
