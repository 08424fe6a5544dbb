#include "doctest.h"

#include "hfs/error.hpp"
#include "hfs/generators.hpp"
#include "hfs/induced.hpp"
#include "hfs/oracle.hpp"
#include "support/brute.hpp"

#include <limits>

using namespace hfs;

namespace {

bool covers(const Graph& g, const std::vector<Vertex>& cover)
{
    for (const Edge& e : g.edges())
        if (std::find(cover.begin(), cover.end(), e.u) == cover.end() &&
            std::find(cover.begin(), cover.end(), e.v) == cover.end())
            return false;
    return true;
}

} // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("subdivision examples")
    {
        CHECK(oracle_subdivision(complete_graph(3), complete_graph(3), 1).answer == Answer::Yes);
        CHECK(oracle_subdivision(complete_graph(4), complete_graph(3), 1).answer == Answer::No);
        OracleResult r = oracle_subdivision(complete_graph(4), complete_graph(3), 2);
        CHECK(r.answer == Answer::Yes);
        CHECK(verify_solution(complete_graph(4), complete_graph(3), 2, r.subdivision_witness).ok);
        CHECK(oracle_subdivision(cycle_graph(5), complete_graph(3), 0).answer == Answer::Yes);
    }

    TEST_CASE("edge deletion examples")
    {
        CHECK(oracle_edge_deletion(path_graph(3), path_graph(3), 1).answer == Answer::Yes);
        // K3 has no induced P3 at all; deleting one edge would create one.
        OracleResult k3 = oracle_edge_deletion(complete_graph(3), path_graph(3), 1);
        CHECK(k3.answer == Answer::Yes);
        CHECK(k3.deleted_edges.empty());
        CHECK_FALSE(is_h_free(remove_edges(complete_graph(3), std::vector<Edge>{{0, 1}}), path_graph(3)));
        CHECK(oracle_edge_deletion(path_graph(4), path_graph(3), 0).answer == Answer::No);
        CHECK(oracle_edge_deletion(path_graph(4), path_graph(3), 1).answer == Answer::Yes);
        OracleResult r = oracle_edge_deletion(cycle_graph(4), cycle_graph(4), 1);
        CHECK(r.answer == Answer::Yes);
        CHECK(r.deleted_edges.size() == 1);
        CHECK(is_h_free(remove_edges(cycle_graph(4), r.deleted_edges), cycle_graph(4)));
    }

    TEST_CASE("vertex cover examples")
    {
        CHECK(oracle_vertex_cover(complete_graph(3), 1).answer == Answer::No);
        CHECK(oracle_vertex_cover(complete_graph(3), 2).answer == Answer::Yes);
        CHECK(oracle_vertex_cover(cycle_graph(5), 2).answer == Answer::No);
        OracleResult r = oracle_vertex_cover(cycle_graph(5), 3);
        CHECK(r.answer == Answer::Yes);
        CHECK(covers(cycle_graph(5), r.cover));
    }

    TEST_CASE("state estimate")
    {
        CHECK(subdivision_state_estimate(3, 0) == 1);
        CHECK(subdivision_state_estimate(3, 2) == 10);
        CHECK(subdivision_state_estimate(10, 3) == 286);
        CHECK(subdivision_state_estimate(2000, 40) == std::numeric_limits<long long>::max());
    }

    TEST_CASE("size guards")
    {
        OracleOptions tight;
        tight.state_cap = 5;
        CHECK_THROWS_AS(oracle_subdivision(complete_graph(5), complete_graph(3), 3, tight), Error);
        CHECK_THROWS_AS(oracle_subdivision(Graph(), Graph(), 0), Error);
    }

    TEST_CASE("subdivide_by_counts")
    {
        auto [g, steps] = subdivide_by_counts(complete_graph(3), {2, 0, 1});
        CHECK(g.vertex_count() == 6);
        CHECK(steps.size() == 3);
        CHECK(brute::isomorphic(g, cycle_graph(6)));
        CHECK(apply_solution(complete_graph(3), steps).edge_count() == 6);
    }

    TEST_CASE("minimum subdivisions per pattern")
    {
        auto mins = oracle_min_subdivisions(complete_graph(4), {complete_graph(3), cycle_graph(4), path_graph(3)}, 3);
        REQUIRE(mins.size() == 3);
        CHECK(mins[0] == 2);
        CHECK(mins[1] == 0);
        CHECK(mins[2] == 0);
        auto star = oracle_min_subdivisions(cycle_graph(5), {path_graph(3)}, 3);
        CHECK_FALSE(star[0].has_value());
    }
}

TEST_SUITE("oracle-properties")
{
    TEST_CASE("subdivision oracle against exhaustive sequences")
    {
        const std::vector<Graph> patterns{path_graph(3), complete_graph(3), cycle_graph(4), paw(), star_graph(3)};
        for (int n = 1; n <= 5; ++n)
            for (const Graph& g : all_graphs(n))
                for (const Graph& h : patterns)
                    for (int k = 0; k <= 2; ++k) {
                        OracleResult r = oracle_subdivision(g, h, k);
                        CHECK((r.answer == Answer::Yes) == brute::subdivision_yes(g, h, k));
                        if (r.answer == Answer::Yes)
                            CHECK(verify_solution(g, h, k, r.subdivision_witness).ok);
                    }
    }

    TEST_CASE("edge deletion and vertex cover against naive enumeration")
    {
        Rng rng(4);
        const std::vector<Graph> patterns{path_graph(3), complete_graph(3), cycle_graph(4), disjoint_union(path_graph(2), path_graph(2))};
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = random_graph(rng.between(2, 7), 0.5, rng);
            const Graph& h = patterns[rng.below(patterns.size())];
            int k = rng.between(0, 3);
            OracleResult r = oracle_edge_deletion(g, h, k);
            CHECK((r.answer == Answer::Yes) == brute::edge_deletion_yes(g, h, k));
            if (r.answer == Answer::Yes) {
                CHECK(static_cast<int>(r.deleted_edges.size()) <= k);
                CHECK(is_h_free(remove_edges(g, r.deleted_edges), h));
            }
            OracleResult c = oracle_vertex_cover(g, k);
            CHECK((c.answer == Answer::Yes) == brute::vertex_cover_yes(g, k));
            if (c.answer == Answer::Yes) {
                CHECK(static_cast<int>(c.cover.size()) <= k);
                CHECK(covers(g, c.cover));
            }
        }
    }

    TEST_CASE("budget monotonicity")
    {
        Rng rng(6);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_graph(rng.between(3, 6), 0.6, rng);
            Graph h = trial % 2 ? complete_graph(3) : cycle_graph(4);
            bool sub = false;
            bool del = false;
            for (int k = 0; k <= 3; ++k) {
                bool s = oracle_subdivision(g, h, k).answer == Answer::Yes;
                bool d = oracle_edge_deletion(g, h, k).answer == Answer::Yes;
                CHECK((!sub || s));
                CHECK((!del || d));
                sub = s;
                del = d;
            }
        }
    }

    TEST_CASE("deduplication does not change answers")
    {
        Rng rng(15);
        OracleOptions raw;
        raw.dedupe = false;
        for (int trial = 0; trial < 80; ++trial) {
            Graph g = random_graph(rng.between(3, 6), 0.5, rng);
            Graph h = trial % 3 == 0 ? paw() : trial % 3 == 1 ? complete_graph(3) : path_graph(4);
            int k = rng.between(0, 2);
            CHECK(oracle_subdivision(g, h, k).answer == oracle_subdivision(g, h, k, raw).answer);
        }
    }

    TEST_CASE("subdivision and edge deletion coincide for triangle-saturated patterns")
    {
        for (const Graph& h : {complete_graph(3), diamond()})
            for (int n = 1; n <= 5; ++n)
                for (const Graph& g : all_graphs(n))
                    for (int k = 0; k <= 2; ++k)
                        CHECK(oracle_subdivision(g, h, k).answer == oracle_edge_deletion(g, h, k).answer);
    }
}
