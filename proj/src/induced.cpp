#include "hfs/induced.hpp"

#include <algorithm>
#include <cstdint>

namespace hfs {

namespace {

class AdjacencyTest {
public:
    explicit AdjacencyTest(const Graph& g) : g_(g), n_(g.vertex_count())
    {
        if (n_ > kDenseLimit)
            return;
        words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
        for (const Edge& e : g.edges()) {
            set(e.u, e.v);
            set(e.v, e.u);
        }
    }

    bool operator()(Vertex u, Vertex v) const
    {
        if (bits_.empty())
            return g_.has_edge(u, v);
        return bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64) & 1U;
    }

private:
    static constexpr int kDenseLimit = 4096;

    void set(Vertex u, Vertex v)
    {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }

    const Graph& g_;
    int n_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Highest degree first, then greedily the vertex with the most already-ordered neighbours.
std::vector<Vertex> pattern_order(const Graph& p)
{
    const int n = p.vertex_count();
    std::vector<Vertex> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    while (static_cast<int>(order.size()) < n) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            if (best < 0)
                best = v;
            else {
                auto key = [&](Vertex x) { return std::pair(placed_nbrs[static_cast<std::size_t>(x)], p.degree(x)); };
                if (key(v) > key(best))
                    best = v;
            }
        }
        used[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (Vertex y : p.neighbors(best))
            ++placed_nbrs[static_cast<std::size_t>(y)];
    }
    return order;
}

class Matcher {
public:
    Matcher(const Graph& host, const Graph& pattern, const std::function<bool(const std::vector<Vertex>&)>& visit)
        : host_(host), pattern_(pattern), adj_(host), visit_(visit), order_(pattern_order(pattern)),
          map_(static_cast<std::size_t>(pattern.vertex_count()), -1),
          used_(static_cast<std::size_t>(host.vertex_count()), 0)
    {
        // For each position, the earliest-ordered neighbour (its image seeds the candidates).
        std::vector<int> position(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i)
            position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        anchor_.assign(order_.size(), -1);
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (Vertex y : pattern.neighbors(order_[i]))
                if (position[static_cast<std::size_t>(y)] < static_cast<int>(i) &&
                    (anchor_[i] < 0 || position[static_cast<std::size_t>(y)] < position[static_cast<std::size_t>(anchor_[i])]))
                    anchor_[i] = y;
    }

    void run()
    {
        if (pattern_.vertex_count() > host_.vertex_count())
            return;
        extend(0);
    }

private:
    bool consistent(std::size_t depth, Vertex p, Vertex c) const
    {
        if (used_[static_cast<std::size_t>(c)] || host_.degree(c) < pattern_.degree(p))
            return false;
        for (std::size_t i = 0; i < depth; ++i) {
            Vertex q = order_[i];
            if (pattern_.has_edge(p, q) != adj_(c, map_[static_cast<std::size_t>(q)]))
                return false;
        }
        return true;
    }

    // Returns false once the visitor asked to stop.
    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return visit_(map_);
        Vertex p = order_[depth];
        auto attempt = [&](Vertex c) {
            if (!consistent(depth, p, c))
                return true;
            map_[static_cast<std::size_t>(p)] = c;
            used_[static_cast<std::size_t>(c)] = 1;
            bool go_on = extend(depth + 1);
            used_[static_cast<std::size_t>(c)] = 0;
            map_[static_cast<std::size_t>(p)] = -1;
            return go_on;
        };
        if (Vertex a = anchor_[depth]; a >= 0) {
            for (Vertex c : host_.neighbors(map_[static_cast<std::size_t>(a)]))
                if (!attempt(c))
                    return false;
        } else {
            for (Vertex c = 0; c < host_.vertex_count(); ++c)
                if (!attempt(c))
                    return false;
        }
        return true;
    }

    const Graph& host_;
    const Graph& pattern_;
    AdjacencyTest adj_;
    const std::function<bool(const std::vector<Vertex>&)>& visit_;
    std::vector<Vertex> order_;
    std::vector<Vertex> anchor_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

} // namespace

std::vector<Vertex> InducedEmbedding::vertex_set() const
{
    std::vector<Vertex> out(mapping);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> InducedEmbedding::image_edges(const Graph& pattern) const
{
    std::vector<Edge> out;
    for (const Edge& e : pattern.edges())
        out.emplace_back(mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)]);
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                const std::function<bool(const std::vector<Vertex>&)>& visit)
{
    Matcher(host, pattern, visit).run();
}

std::optional<InducedEmbedding> find_induced_copy(const Graph& host, const Graph& pattern)
{
    std::optional<InducedEmbedding> found;
    for_each_induced_embedding(host, pattern, [&](const std::vector<Vertex>& m) {
        found = InducedEmbedding{m};
        return false;
    });
    return found;
}

bool is_h_free(const Graph& host, const Graph& pattern)
{
    return !find_induced_copy(host, pattern).has_value();
}

long long automorphism_count(const Graph& g)
{
    long long n = 0;
    for_each_induced_embedding(g, g, [&](const std::vector<Vertex>&) {
        ++n;
        return true;
    });
    return n;
}

long long count_induced_copies(const Graph& host, const Graph& pattern)
{
    long long embeddings = 0;
    for_each_induced_embedding(host, pattern, [&](const std::vector<Vertex>&) {
        ++embeddings;
        return true;
    });
    return embeddings == 0 ? 0 : embeddings / automorphism_count(pattern);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    auto copy = find_induced_copy(b, a);
    if (!copy)
        return std::nullopt;
    return copy->mapping;
}

} // namespace hfs
