#pragma once

#include "hfs/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hfs {

/// Vertices of degree at least 3.
std::vector<Vertex> branching_vertices(const Graph& h);

bool is_subdivided_star(const Graph& h);
bool is_subdivided_bistar(const Graph& h);

/// Every component is a subdivided star or bistar, and at most one is a bistar.
bool obs1_polynomial(const Graph& h);

enum class EasyCase { Case1, Case2 };

/// Case1: min degree >= 2 and every degree-2 vertex has adjacent neighbours.
/// Case2: the branching vertices induce at least two edges. Case1 wins when both hold.
std::optional<EasyCase> thm_easy_case(const Graph& h);

using Triangle = std::array<Vertex, 3>;

/// All triangles, each sorted, in lexicographic order.
std::vector<Triangle> triangles(const Graph& h);

struct RoofTriangle {
    Vertex a = -1; ///< attachment, a < b
    Vertex b = -1; ///< attachment
    Vertex apex = -1;
};

std::optional<RoofTriangle> find_roof_triangle(const Graph& h);

struct HangingTrianglePair {
    Vertex a = -1; ///< attachment of `first`
    Vertex b = -1; ///< attachment of `second`, adjacent to a
    Triangle first{};
    Triangle second{};
};

std::optional<HangingTrianglePair> find_adjacent_hanging_triangles(const Graph& h);

bool has_unique_triangle(const Graph& h);

struct TreeProfile {
    int branching_count = 0;
    std::vector<Vertex> branching;
    /// Distance between the two branching vertices when there are exactly two.
    std::optional<int> distance;
};

/// Throws NotATree.
TreeProfile tree_branching_profile(const Graph& h);

} // namespace hfs
