#include "hfs/error.hpp"
#include "hfs/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hfs {

namespace {

using Mask = std::uint32_t;

struct Search {
    int n = 0;
    std::vector<Mask> adj;
    std::string best;

    // Refines `colour` to the coarsest stable colouring it admits. Colours stay dense 0..k-1
    // and the relabelling depends only on colour-level information.
    void refine(std::vector<int>& colour) const
    {
        int classes = *std::max_element(colour.begin(), colour.end()) + 1;
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (;;) {
            for (int v = 0; v < n; ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s.assign(1, colour[static_cast<std::size_t>(v)]);
                for (int w = 0; w < n; ++w)
                    if (adj[static_cast<std::size_t>(v)] >> w & 1U)
                        s.push_back(colour[static_cast<std::size_t>(w)]);
                std::sort(s.begin() + 1, s.end());
            }
            std::vector<std::vector<int>> distinct(sig);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int v = 0; v < n; ++v)
                colour[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
                    distinct.begin());
            if (static_cast<int>(distinct.size()) == classes)
                return;
            classes = static_cast<int>(distinct.size());
        }
    }

    std::string leaf_code(const std::vector<int>& colour) const
    {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            order[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] = v;
        std::string bits;
        unsigned char acc = 0;
        int filled = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = static_cast<unsigned char>(acc << 1 |
                                                 (adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                                                      order[static_cast<std::size_t>(j)] &
                                                  1U));
                if (++filled == 8) {
                    bits.push_back(static_cast<char>(acc));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            bits.push_back(static_cast<char>(acc << (8 - filled)));
        return bits;
    }

    bool twins(int v, int w) const
    {
        Mask bv = adj[static_cast<std::size_t>(v)] & ~(Mask{1} << w);
        Mask bw = adj[static_cast<std::size_t>(w)] & ~(Mask{1} << v);
        return bv == bw;
    }

    void explore(std::vector<int> colour)
    {
        refine(colour);
        std::vector<int> size(static_cast<std::size_t>(n), 0);
        for (int c : colour)
            ++size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[static_cast<std::size_t>(c)] > 1 &&
                (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)]))
                target = c;
        if (target < 0) {
            std::string code = leaf_code(colour);
            if (code > best)
                best = std::move(code);
            return;
        }
        std::vector<int> explored;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != target)
                continue;
            bool redundant = std::any_of(explored.begin(), explored.end(), [&](int w) { return twins(v, w); });
            if (redundant)
                continue;
            explored.push_back(v);
            // Individualise v: it keeps a colour just below the rest of its cell.
            std::vector<int> next(colour.size());
            for (int u = 0; u < n; ++u)
                next[static_cast<std::size_t>(u)] = 2 * colour[static_cast<std::size_t>(u)] + (u == v ? 0 : 1);
            explore(std::move(next));
        }
    }
};

} // namespace

std::string canonical_form(const Graph& g, int bound)
{
    bound = std::min(bound, kMaxCanonicalBound);
    if (g.vertex_count() > bound)
        throw Error(ErrorKind::TooLarge, "canonical form limited to " + std::to_string(bound) + " vertices, got " +
                                             std::to_string(g.vertex_count()));
    Search s;
    s.n = g.vertex_count();
    s.adj.assign(static_cast<std::size_t>(s.n), 0);
    for (const Edge& e : g.edges()) {
        s.adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        s.adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    std::string out(1, static_cast<char>(s.n));
    if (s.n > 0) {
        s.explore(std::vector<int>(static_cast<std::size_t>(s.n), 0));
        out += s.best;
    }
    return out;
}

bool are_isomorphic(const Graph& a, const Graph& b, int bound)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a, bound) == canonical_form(b, bound);
}

} // namespace hfs
