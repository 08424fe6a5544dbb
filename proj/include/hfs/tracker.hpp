#pragma once

#include "hfs/graph.hpp"

#include <map>
#include <vector>

namespace hfs {

/// Replays subdivisions while remembering which original edge every current edge descends from.
class SubdivisionTracker {
public:
    explicit SubdivisionTracker(Graph original);

    /// Throws MissingEdge if the step does not name a current edge.
    void apply(SubdivisionStep step);
    void apply_all(std::span<const SubdivisionStep> steps);

    const Graph& original() const noexcept { return original_; }
    const Graph& current() const noexcept { return current_; }

    /// Index into original().edges() of the edge `e` descends from; e must be a current edge.
    int origin_index(Edge e) const;
    Edge origin(Edge e) const { return original_edges_[static_cast<std::size_t>(origin_index(e))]; }

    /// Per original edge (in original().edges() order), how many times it has been subdivided.
    const std::vector<int>& counts() const noexcept { return counts_; }
    int count(Edge original_edge) const;

    /// Original edges subdivided at least `times` times, sorted.
    std::vector<Edge> subdivided_at_least(int times) const;
    std::size_t steps() const noexcept { return steps_; }

private:
    Graph original_;
    Graph current_;
    std::vector<Edge> original_edges_;
    std::map<Edge, int> origin_;
    std::vector<int> counts_;
    std::size_t steps_ = 0;
};

} // namespace hfs
