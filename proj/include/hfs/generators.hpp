#pragma once

#include "hfs/graph.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace hfs {

/// mt19937_64 with portable bounded draws (the standard distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
/// Two adjacent centres 0 and 1 carrying `left` and `right` leaves.
Graph bistar(int left, int right);
/// Star whose legs are paths of the given lengths.
Graph spider(const std::vector<int>& legs);
/// Tree with branching vertices joined by a path of length `distance`; each carries `leaves` pendant vertices.
Graph two_branch_tree(int distance, int leaves_left = 2, int leaves_right = 2);
Graph paw();
Graph diamond();
Graph petersen();
Graph bowtie();

/// Vertex layout: x1=0, x2=1, x3=2, then x_{1,1..k}, x_{2,1..l}, the s_j with i_j=2 in order of j, then y.
Graph hkl_graph(int k, int l, std::array<int, 3> i);
/// Vertex layout: x=0, y=1, z=2, t=3, a1=4, a2=5, b1=6, b2=7.
Graph htilde_graph();

Graph random_graph(int n, double p, Rng& rng);

/// All graphs on exactly n vertices up to isomorphism (n <= 8), in a deterministic order.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

} // namespace hfs
