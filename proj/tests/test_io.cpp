#include "doctest.h"

#include "hfs/error.hpp"
#include "hfs/generators.hpp"
#include "hfs/io.hpp"

#include <sstream>

using namespace hfs;

TEST_SUITE("io")
{
    TEST_CASE("graph text is sorted and exact")
    {
        Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
        CHECK(graph_to_text(g) == "p sub 4 3\ne 0 1\ne 0 2\ne 1 3\n");
    }

    TEST_CASE("comments are skipped and collected")
    {
        std::vector<std::string> comments;
        std::istringstream in("# expect: status=NPHard\np sub 3 3\n# inside\ne 0 1\ne 1 2\ne 0 2\n");
        Graph g = parse_graph(in, &comments);
        CHECK(g == complete_graph(3));
        REQUIRE(comments.size() == 2);
        CHECK(comments[0] == "expect: status=NPHard");
        CHECK(comments[1] == "inside");
    }

    TEST_CASE("malformed graph text is rejected")
    {
        for (const char* bad : {"", "p sub 2 1\n", "p sub 2 1\ne 0 2\n", "p sub 2 1\ne 1 1\n", "p sub 3 2\ne 0 1\ne 1 0\n",
                                "q sub 2 0\n", "p sub 2 1\ne 0 x\n", "p sub -1 0\n"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(graph_from_text(bad), Error);
        }
    }

    TEST_CASE("solutions, edge sets and vertex sets round trip")
    {
        SubdivisionSolution sol{{0, 1}, {0, 3}, {2, 4}};
        std::ostringstream out;
        write_solution(out, sol);
        CHECK(out.str() == "s 3\nd 0 1\nd 0 3\nd 2 4\n");
        std::istringstream in(out.str());
        CHECK(parse_solution(in) == sol);

        std::ostringstream eo;
        write_edge_set(eo, {{3, 2}, {0, 1}});
        CHECK(eo.str() == "f 2\ne 0 1\ne 2 3\n");
        std::istringstream ei(eo.str());
        CHECK(parse_edge_set(ei) == std::vector<Edge>{{0, 1}, {2, 3}});

        std::ostringstream vo;
        write_vertex_set(vo, {4, 1});
        CHECK(vo.str() == "y 2\nv 1\nv 4\n");
        std::istringstream vi(vo.str());
        CHECK(parse_vertex_set(vi) == std::vector<Vertex>{1, 4});
    }

    TEST_CASE("random graphs survive a text round trip id for id")
    {
        Rng rng(3);
        for (int i = 0; i < 50; ++i) {
            Graph g = random_graph(rng.between(0, 12), 0.3, rng);
            CHECK(graph_from_text(graph_to_text(g)) == g);
        }
    }
}
