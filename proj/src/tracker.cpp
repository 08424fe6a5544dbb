#include "hfs/tracker.hpp"

#include "hfs/error.hpp"

#include <algorithm>

namespace hfs {

SubdivisionTracker::SubdivisionTracker(Graph original)
    : original_(std::move(original)), current_(original_), original_edges_(original_.edges()),
      counts_(original_edges_.size(), 0)
{
    for (std::size_t i = 0; i < original_edges_.size(); ++i)
        origin_.emplace(original_edges_[i], static_cast<int>(i));
}

void SubdivisionTracker::apply(SubdivisionStep step)
{
    auto it = current_.has_edge(step.u, step.v) ? origin_.find(Edge(step.u, step.v)) : origin_.end();
    if (it == origin_.end())
        throw Error(ErrorKind::MissingEdge,
                    "no edge " + std::to_string(step.u) + "-" + std::to_string(step.v) + " to subdivide", steps_);
    int index = it->second;
    origin_.erase(it);
    Vertex w = current_.vertex_count();
    current_ = subdivide(current_, step);
    origin_.emplace(Edge(step.u, w), index);
    origin_.emplace(Edge(step.v, w), index);
    ++counts_[static_cast<std::size_t>(index)];
    ++steps_;
}

void SubdivisionTracker::apply_all(std::span<const SubdivisionStep> steps)
{
    for (const auto& s : steps)
        apply(s);
}

int SubdivisionTracker::origin_index(Edge e) const
{
    auto it = origin_.find(e);
    if (it == origin_.end())
        throw Error(ErrorKind::MissingEdge, "edge " + to_string(e) + " is not present");
    return it->second;
}

int SubdivisionTracker::count(Edge original_edge) const
{
    auto it = std::lower_bound(original_edges_.begin(), original_edges_.end(), original_edge);
    if (it == original_edges_.end() || *it != original_edge)
        throw Error(ErrorKind::MissingEdge, "edge " + to_string(original_edge) + " is not an original edge");
    return counts_[static_cast<std::size_t>(it - original_edges_.begin())];
}

std::vector<Edge> SubdivisionTracker::subdivided_at_least(int times) const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < original_edges_.size(); ++i)
        if (counts_[i] >= times)
            out.push_back(original_edges_[i]);
    return out;
}

} // namespace hfs
