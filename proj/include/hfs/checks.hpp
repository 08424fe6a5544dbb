#pragma once

// The small-instance property suite behind `hfsub selftest` and the acceptance runner.
// Every check emits one record line per case in a fixed order, whatever the job count.

#include "hfs/graph.hpp"
#include "hfs/reductions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfs::checks {

struct Report {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> records = {};
    std::vector<std::string> failure_details = {}; ///< at most a handful

    bool ok() const { return cases > 0 && failures == 0; }
    /// FNV-1a over the records, newline separated.
    std::uint64_t digest() const;
    /// `check=<name> cases=<n> failures=<f> digest=<hex>`
    std::string summary() const;
};

struct RunOptions {
    int jobs = 1;
    std::uint64_t seed = 1;
};

struct NamedPattern {
    std::string name;
    Graph graph;
};

/// P3, P4, K3, K1,3, C4, C5, paw, diamond and the 7-vertex bistar.
std::vector<NamedPattern> solver_patterns();

struct SolverChecks {
    Report agreement;  ///< solve == oracle_subdivision
    Report node_bound; ///< nodes_explored <= sum_j |E(h)|^j
};

/// Every graph up to `max_host` vertices plus `random_hosts` seeded graphs on `random_size` vertices,
/// against every solver pattern and every k in 0..kmax.
SolverChecks solver_vs_oracle(int max_host, int random_hosts, int random_size, int kmax, const RunOptions& opt);

/// oracle_subdivision == oracle_edge_deletion for K3, K4 and the diamond on every host up to `max_host`.
Report edge_deletion_equivalence(int max_host, int kmax, const RunOptions& opt);

struct Scenario {
    Lemma lemma;
    std::string name;
    Graph pattern;
    int min_size, max_size;
    int max_budget;
    std::optional<int> girth;
    double density = 0.5;
    /// Plant the source pattern on every other instance so both answers occur.
    bool plant = false;
};

std::vector<Scenario> reduction_scenarios();
SourceInstance scenario_instance(const Scenario& s, int i);

struct EquivalenceOutcome {
    bool source_yes = false;
    bool target_yes = false;
    bool forward_ok = true;  ///< vacuous on a No source
    bool backward_ok = true; ///< vacuous on a No target
    std::string decider;
    std::string detail;

    bool ok() const { return source_yes == target_yes && forward_ok && backward_ok; }
};

/// Decides source and target exhaustively and pushes a witness through each certificate map.
EquivalenceOutcome reduction_equivalence(Lemma lemma, const SourceInstance& src, const Graph& h);

/// One report per lemma, `per_scenario` instances for each of its scenarios.
std::vector<Report> reduction_checks(int per_scenario, const RunOptions& opt);

/// Connected non-forest girth>=4 family members outside the edge-deletion lemmas have a 2-connected
/// shortest-cycle set or a special core.
Report girth4_all_sweep(int max_vertices, const RunOptions& opt);

/// Every `*.g` file in `dir` carries an `expect:` header whose key=value tokens the verdict must contain.
/// Throws Parse on a missing directory, an unreadable file or a missing header.
Report classifier_corpus(const std::string& dir);

/// Random host with a planted induced subdivided star; one random subdivision never destroys the copy.
Report indestructibility(int trials, int max_vertices, const RunOptions& opt);

} // namespace hfs::checks
