#pragma once

#include "hfs/graph.hpp"
#include "hfs/oracle.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hfs {

enum class SourceProblem { VertexCover, EdgeDeletion, P3FreeEdgeDeletion, P4FreeEdgeDeletion };

enum class Lemma { EdgeDelEq, Degree3, Roof, Hanging, Girth4A, Girth4B, TreeEven, TreeOdd };

struct SourceInstance {
    SourceProblem problem = SourceProblem::VertexCover;
    Graph graph;
    int budget = 0;
    std::optional<int> girth_requirement;
};

/// Edge set for the edge-deletion problems, vertex set for Vertex Cover.
struct SourceWitness {
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
};

/// Contiguous id range [first, first + size) of one gadget in the target graph.
struct GadgetBlock {
    std::string kind;
    std::string anchor; ///< e.g. "3" for a vertex, "1-4" for an edge, "1>4" for an ordered pair
    Vertex first = 0;
    int size = 0;
};

struct ReductionArtifact {
    Lemma lemma = Lemma::EdgeDelEq;
    SourceInstance source;
    /// The pattern forbidden in the source problem (H', P3, P4); empty for Vertex Cover.
    Graph source_pattern;
    Graph pattern;
    Graph target;
    int target_budget = 0;
    std::vector<GadgetBlock> blocks;
    std::vector<std::pair<std::string, std::string>> metadata;

    std::function<SubdivisionSolution(const SourceWitness&)> forward;
    /// Never throws on bad input: steps are replayed up to the first invalid one.
    std::function<SourceWitness(const SubdivisionSolution&)> backward;
};

struct ReduceOptions {
    /// Reject patterns outside the lemma's hypotheses. Only tests of raw construction arithmetic turn this off.
    bool enforce_preconditions = true;
};

SourceProblem source_problem_for(Lemma lemma);
/// H' for the edge-deletion lemmas, P3 / P4 for the tree lemmas, the empty graph for Vertex Cover.
Graph source_pattern_for(Lemma lemma, const Graph& h);

ReductionArtifact reduce_edge_deletion_equiv(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_degree3(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_roof_triangle(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_hanging_triangles(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_girth4a(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_girth4b(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_tree_even(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});
ReductionArtifact reduce_tree_odd(const SourceInstance& src, const Graph& h, const ReduceOptions& = {});

ReductionArtifact reduce(Lemma lemma, const SourceInstance& src, const Graph& h, const ReduceOptions& = {});

/// Budget, membership and freeness checks for a source witness.
VerifyReport verify_source_witness(const SourceInstance& src, const Graph& source_pattern, const SourceWitness& w);

/// Exhaustive decision of the source instance.
OracleResult source_oracle(const SourceInstance& src, const Graph& source_pattern, const OracleOptions& opt = {});
SourceWitness witness_of(const OracleResult& r);

/// Deterministic pseudo-random source instance; throws Infeasible when the girth cannot be met.
SourceInstance sample_source(SourceProblem problem, int size, std::optional<int> girth_requirement, std::uint64_t seed,
                             int budget = 1);

const char* to_string(Lemma lemma);
const char* to_string(SourceProblem p);
std::optional<Lemma> parse_lemma(const std::string& s);
std::optional<SourceProblem> parse_source_problem(const std::string& s);

/// Metadata sidecar: one key=value per line, blocks as "block=<kind>:<anchor>:<first>:<size>".
std::string metadata_text(const ReductionArtifact& a);

} // namespace hfs
