#include "hfs/special_core.hpp"

#include "hfs/error.hpp"
#include "hfs/generators.hpp"
#include "hfs/induced.hpp"

#include <algorithm>

namespace hfs {

Graph SpecialCoreParams::standard_graph() const
{
    return kind == CoreKind::Htilde ? htilde_graph() : hkl_graph(k, l, i);
}

bool hkl_is_core_shaped(std::array<int, 3> i)
{
    int nonzero = static_cast<int>(std::count_if(i.begin(), i.end(), [](int t) { return t != 0; }));
    return nonzero != 1;
}

namespace {

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

std::optional<std::vector<Vertex>> match(const Graph& standard, const Graph& c)
{
    if (standard.vertex_count() != c.vertex_count() || standard.edge_count() != c.edge_count() ||
        degree_sequence(standard) != degree_sequence(c))
        return std::nullopt;
    if (c.vertex_count() <= kMaxCanonicalBound && !are_isomorphic(standard, c, kMaxCanonicalBound))
        return std::nullopt;
    return find_isomorphism(standard, c);
}

} // namespace

std::optional<SpecialCoreParams> recognize_special_core(const Graph& c)
{
    if (c.empty() || !is_connected(c) || (c.vertex_count() > 1 && min_degree(c) < 2))
        throw Error(ErrorKind::Malformed, "special-core recognition expects a connected graph of minimum degree 2");
    const int n = c.vertex_count();
    const int m = c.edge_count();
    if (n == 8 && m == 10)
        if (auto emb = match(htilde_graph(), c))
            return SpecialCoreParams{CoreKind::Htilde, 0, 0, {}, std::move(*emb)};

    for (int k = 2; 3 + 2 * k <= n; ++k)
        for (int l = k; 3 + k + l <= n; ++l)
            for (int i1 = 0; i1 < 3; ++i1)
                for (int i2 = 0; i2 < 3; ++i2)
                    for (int i3 = 0; i3 < 3; ++i3) {
                        std::array<int, 3> i{i1, i2, i3};
                        if (!hkl_is_core_shaped(i) || i == std::array{1, 1, 0} || i == std::array{0, 1, 1})
                            continue;
                        if (k == l && std::array{i3, i2, i1} < i)
                            continue;
                        int extra = 0;
                        int extra_edges = 0;
                        for (int t : i) {
                            extra += t == 2;
                            extra_edges += t;
                        }
                        if (i != std::array{0, 0, 0})
                            ++extra;
                        if (3 + k + l + extra != n || 2 * (k + l) + extra_edges != m)
                            continue;
                        if (auto emb = match(hkl_graph(k, l, i), c))
                            return SpecialCoreParams{CoreKind::Hkl, k, l, i, std::move(*emb)};
                    }
    return std::nullopt;
}

std::string describe(const SpecialCoreParams& p)
{
    if (p.kind == CoreKind::Htilde)
        return "core=Htilde";
    return "core=Hkl k=" + std::to_string(p.k) + " l=" + std::to_string(p.l) + " i=" + std::to_string(p.i[0]) + "," +
           std::to_string(p.i[1]) + "," + std::to_string(p.i[2]);
}

} // namespace hfs
