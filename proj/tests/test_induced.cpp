#include "doctest.h"

#include "hfs/generators.hpp"
#include "hfs/induced.hpp"
#include "support/brute.hpp"

using namespace hfs;

namespace {

bool is_induced_embedding(const Graph& host, const Graph& pattern, const std::vector<Vertex>& map)
{
    for (Vertex a = 0; a < pattern.vertex_count(); ++a)
        for (Vertex b = a + 1; b < pattern.vertex_count(); ++b) {
            if (map[a] == map[b])
                return false;
            if (pattern.has_edge(a, b) != host.has_edge(map[a], map[b]))
                return false;
        }
    return true;
}

const Graph two_triangles_joined(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});

} // namespace

TEST_SUITE("induced")
{
    TEST_CASE("basic containment")
    {
        CHECK(find_induced_copy(cycle_graph(5), path_graph(3)).has_value());
        CHECK_FALSE(find_induced_copy(complete_graph(4), cycle_graph(4)).has_value());
        CHECK_FALSE(find_induced_copy(two_triangles_joined, disjoint_union(complete_graph(3), complete_graph(3))));
        CHECK(is_h_free(cycle_graph(5), complete_graph(3)));
        CHECK_FALSE(is_h_free(complete_graph(3), complete_graph(3)));
        CHECK(is_h_free(subdivide(cycle_graph(4), {0, 1}), cycle_graph(4)));
    }

    TEST_CASE("counting is by vertex subset")
    {
        CHECK(count_induced_copies(complete_graph(4), complete_graph(3)) == 4);
        CHECK(count_induced_copies(cycle_graph(6), path_graph(4)) == 6);
        CHECK(count_induced_copies(complete_graph(4), cycle_graph(4)) == 0);
        CHECK(count_induced_copies(cycle_graph(6), path_graph(4)) == brute::count_copies(cycle_graph(6), path_graph(4)));
    }

    TEST_CASE("automorphisms and isomorphisms")
    {
        CHECK(automorphism_count(cycle_graph(5)) == 10);
        CHECK(automorphism_count(complete_graph(4)) == 24);
        CHECK(automorphism_count(petersen()) == 120);
        auto iso = find_isomorphism(cycle_graph(5), Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
        REQUIRE(iso.has_value());
        CHECK_FALSE(find_isomorphism(path_graph(4), star_graph(3)).has_value());
    }

    TEST_CASE("embeddings found are induced")
    {
        Rng rng(21);
        std::vector<Graph> patterns{path_graph(3), complete_graph(3), cycle_graph(4), paw(), diamond(), bistar(2, 2),
                                    disjoint_union(path_graph(2), path_graph(2))};
        for (int trial = 0; trial < 200; ++trial) {
            Graph host = random_graph(rng.between(3, 9), 0.45, rng);
            const Graph& p = patterns[rng.below(patterns.size())];
            auto e = find_induced_copy(host, p);
            CHECK(e.has_value() == brute::contains(host, p));
            if (e)
                CHECK(is_induced_embedding(host, p, e->mapping));
        }
    }

    TEST_CASE("counts agree with subset enumeration")
    {
        Rng rng(22);
        std::vector<Graph> patterns{path_graph(3), path_graph(4), complete_graph(3), star_graph(3), cycle_graph(4),
                                    disjoint_union(path_graph(2), Graph(1)), Graph(2)};
        for (int trial = 0; trial < 150; ++trial) {
            Graph host = random_graph(rng.between(2, 9), 0.4, rng);
            const Graph& p = patterns[rng.below(patterns.size())];
            CHECK(count_induced_copies(host, p) == brute::count_copies(host, p));
        }
    }

    TEST_CASE("a copy survives subdivisions that avoid its edges")
    {
        Rng rng(23);
        std::vector<Graph> patterns{path_graph(4), complete_graph(3), cycle_graph(4), paw(), bistar(2, 2)};
        for (int trial = 0; trial < 200; ++trial) {
            Graph host = random_graph(rng.between(4, 10), 0.4, rng);
            const Graph& p = patterns[rng.below(patterns.size())];
            auto e = find_induced_copy(host, p);
            if (!e)
                continue;
            std::vector<Edge> inside = e->image_edges(p);
            for (const Edge& edge : host.edges()) {
                if (std::binary_search(inside.begin(), inside.end(), edge))
                    continue;
                Graph s = subdivide(host, {edge.u, edge.v});
                CHECK(is_induced_embedding(s, p, e->mapping));
            }
        }
    }
}
