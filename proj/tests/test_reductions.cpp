#include "doctest.h"

#include "hfs/checks.hpp"
#include "hfs/error.hpp"
#include "hfs/generators.hpp"
#include "hfs/induced.hpp"
#include "hfs/pattern.hpp"
#include "hfs/reductions.hpp"
#include "support/brute.hpp"

#include <map>

using namespace hfs;

namespace {

SourceInstance edge_deletion(Graph g, int k) { return {SourceProblem::EdgeDeletion, std::move(g), k, std::nullopt}; }
SourceInstance vertex_cover(Graph g, int p) { return {SourceProblem::VertexCover, std::move(g), p, std::nullopt}; }

const Graph roof_pattern(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
const Graph bridged_squares(8, {{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}});

std::string meta(const ReductionArtifact& a, const std::string& key)
{
    for (const auto& [k, v] : a.metadata)
        if (k == key)
            return v;
    return "";
}

std::map<std::string, int> block_kinds(const ReductionArtifact& a)
{
    std::map<std::string, int> out;
    for (const GadgetBlock& b : a.blocks)
        ++out[b.kind];
    return out;
}

void blocks_are_contiguous(const ReductionArtifact& a)
{
    Vertex next = a.source.graph.vertex_count();
    if (a.lemma == Lemma::Girth4A || a.lemma == Lemma::Girth4B)
        ++next; // apex
    for (const GadgetBlock& b : a.blocks) {
        CHECK(b.first == next);
        next += b.size;
    }
    CHECK(next == a.target.vertex_count());
}

} // namespace

TEST_SUITE("reductions")
{
    TEST_CASE("edge deletion equivalence keeps the instance")
    {
        ReductionArtifact a = reduce_edge_deletion_equiv(edge_deletion(complete_graph(4), 1), complete_graph(3));
        CHECK(a.target == complete_graph(4));
        CHECK(a.target_budget == 1);
        CHECK(a.forward({{Edge(0, 1)}, {}}) == SubdivisionSolution{{0, 1}});
        CHECK(a.forward({}).empty());
        CHECK(a.backward({{0, 1}, {0, 4}}).edges == std::vector<Edge>{{0, 1}});
        CHECK_THROWS_AS(reduce_edge_deletion_equiv(edge_deletion(complete_graph(4), 1), cycle_graph(4)), Error);
    }

    TEST_CASE("degree-3 construction sizes")
    {
        Graph h(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
        ReductionArtifact a = reduce_degree3(edge_deletion(complete_graph(5), 1), h);
        CHECK(a.target.vertex_count() == 10);
        CHECK(a.target_budget == 1);
        CHECK(a.source_pattern == complete_graph(4));
        CHECK(meta(a, "components_one_attachment") == "1");
        blocks_are_contiguous(a);

        // An isolated C4 off X gets k+1 disjoint copies.
        Graph with_c4 = disjoint_union(disjoint_union(bistar(2, 2), bistar(2, 2)), cycle_graph(4));
        ReductionArtifact b = reduce_degree3(edge_deletion(path_graph(3), 2), with_c4);
        CHECK(meta(b, "components_isolated") == "1");
        int isolated = 0;
        for (const GadgetBlock& blk : b.blocks)
            if (blk.kind.ends_with(":isolated")) {
                ++isolated;
                CHECK(blk.size == 4);
            }
        CHECK(isolated == 3);
        blocks_are_contiguous(b);
        CHECK_THROWS_AS(reduce_degree3(edge_deletion(path_graph(3), 1), bistar(2, 2)), Error);
    }

    TEST_CASE("degree-3 two-attachment cases")
    {
        // X = {0,1,2,3} inducing two edges; a path 4-5 joins 0 and 2, a single vertex 6 joins 1 and 3.
        Graph h(11, {{0, 1}, {2, 3}, {0, 4}, {4, 5}, {5, 2}, {1, 6}, {6, 3}, {0, 7}, {1, 8}, {2, 9}, {3, 10}});
        REQUIRE(branching_vertices(h) == std::vector<Vertex>{0, 1, 2, 3});
        const int n = 3;
        const int k = 1;
        ReductionArtifact a = reduce_degree3(edge_deletion(path_graph(n), k), h);
        CHECK(meta(a, "components_two_attachments") == "1");
        CHECK(meta(a, "components_single_vertex_two_attachments") == "1");
        // bridges: unordered pairs with repetition; hinges: pairs of distinct vertices.
        auto kinds = block_kinds(a);
        CHECK(kinds["S4:bridge"] == (k + 1) * n * (n + 1) / 2);
        CHECK(kinds["S6:hinge"] == (k + 1) * n * (n - 1) / 2);
        blocks_are_contiguous(a);
    }

    TEST_CASE("roof triangle construction sizes")
    {
        ReductionArtifact a = reduce_roof_triangle(edge_deletion(complete_graph(3), 1), roof_pattern);
        CHECK(a.target.vertex_count() == 15);
        CHECK(a.source_pattern == complete_graph(3));
        blocks_are_contiguous(a);
        // A book whose gadget is empty leaves the source untouched.
        ReductionArtifact d = reduce_roof_triangle(edge_deletion(complete_graph(4), 1), diamond());
        CHECK(d.target == complete_graph(4));
        CHECK_THROWS_AS(reduce_roof_triangle(edge_deletion(complete_graph(3), 1), cycle_graph(4)), Error);
    }

    TEST_CASE("hanging triangles emit both orientations")
    {
        Graph sym(8, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {0, 6}, {1, 7}});
        for (int k = 0; k <= 2; ++k) {
            ReductionArtifact a = reduce_hanging_triangles(edge_deletion(cycle_graph(4), k), sym);
            CHECK(a.blocks.size() == static_cast<std::size_t>(2 * (k + 1) * 4));
            blocks_are_contiguous(a);
        }
        CHECK_THROWS_AS(reduce_hanging_triangles(edge_deletion(complete_graph(3), 1), roof_pattern), Error);
    }

    TEST_CASE("girth-4-a construction sizes")
    {
        ReduceOptions raw;
        raw.enforce_preconditions = false;
        ReductionArtifact a = reduce_girth4a(vertex_cover(path_graph(3), 1), cycle_graph(6), raw);
        CHECK(a.target.vertex_count() == 10);
        CHECK(a.target_budget == 1);
        REQUIRE(a.blocks.size() == 2);
        int join = 0;
        for (int s = 0; s < a.blocks[0].size; ++s)
            for (int t = 0; t < a.blocks[1].size; ++t)
                join += a.target.has_edge(a.blocks[0].first + s, a.blocks[1].first + t);
        CHECK(join == 9);
        CHECK(a.forward({{}, {1}}) == SubdivisionSolution{{1, 3}});
        // C6 lies in the second family, so the checked entry point refuses it.
        CHECK_THROWS_AS(reduce_girth4a(vertex_cover(path_graph(3), 1), cycle_graph(6)), Error);
        ReductionArtifact b = reduce_girth4a(vertex_cover(path_graph(3), 1), bridged_squares);
        CHECK(b.target.vertex_count() == 3 + 1 + 2 * 5);
        blocks_are_contiguous(b);
    }

    TEST_CASE("girth-4-b construction sizes and the girth guard")
    {
        SourceInstance c7 = vertex_cover(cycle_graph(7), 3);
        ReductionArtifact a = reduce_girth4b(c7, cycle_graph(4));
        CHECK(a.target.vertex_count() == 15);
        CHECK(a.target_budget == 3);
        blocks_are_contiguous(a);
        CHECK_THROWS_AS(reduce_girth4b(vertex_cover(cycle_graph(4), 2), cycle_graph(4)), Error);
        try {
            reduce_girth4b(vertex_cover(cycle_graph(5), 2), cycle_graph(5));
            FAIL("no error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::GirthTooSmall);
        }
        CHECK_THROWS_AS(reduce_girth4b(c7, bridged_squares), Error);
    }

    TEST_CASE("girth-4-b second case splits at x2")
    {
        Graph h = hkl_graph(2, 3, {0, 0, 0});
        ReductionArtifact a = reduce_girth4b(vertex_cover(cycle_graph(9), 4), h);
        CHECK(meta(a, "case") == "2");
        auto kinds = block_kinds(a);
        CHECK(kinds.size() == 2);
        blocks_are_contiguous(a);
    }

    TEST_CASE("tree gadgets")
    {
        SourceInstance p3{SourceProblem::P3FreeEdgeDeletion, path_graph(4), 1, std::nullopt};
        ReductionArtifact a = reduce_tree_even(p3, two_branch_tree(2));
        CHECK(meta(a, "lambda") == "1");
        CHECK(meta(a, "c") == "2");
        CHECK(a.target_budget == 2);
        CHECK(block_kinds(a) == std::map<std::string, int>{{"A0", 4 * 3}});
        for (const GadgetBlock& b : a.blocks) {
            // The anchor plus its block is a 3-vertex tree.
            std::vector<Vertex> vs{static_cast<Vertex>(std::stoi(b.anchor))};
            for (int s = 0; s < b.size; ++s)
                vs.push_back(b.first + s);
            CHECK(brute::isomorphic(induced_subgraph(a.target, vs).graph, path_graph(3)));
        }
        p3.budget = 2;
        CHECK(reduce_tree_even(p3, two_branch_tree(4)).target_budget == 8);

        SourceInstance p4{SourceProblem::P4FreeEdgeDeletion, path_graph(4), 1, std::nullopt};
        ReductionArtifact o = reduce_tree_odd(p4, two_branch_tree(5));
        CHECK(o.target_budget == 5);
        auto kinds = block_kinds(o);
        CHECK(kinds.size() == 2);
        CHECK(kinds["A0"] == 4 * 6);
        CHECK(kinds["A1"] == 4 * 6);
        CHECK(a.forward({{Edge(0, 1)}, {}}).size() == 2);
        CHECK(o.forward({{Edge(0, 1)}, {}}).size() == 5);
        CHECK_THROWS_AS(reduce_tree_odd(p4, two_branch_tree(3)), Error);
        CHECK_THROWS_AS(reduce_tree_even(p3, two_branch_tree(5)), Error);
    }

    TEST_CASE("wrong source problems and empty patterns are refused")
    {
        CHECK_THROWS_AS(reduce(Lemma::Girth4A, edge_deletion(path_graph(3), 1), bridged_squares), Error);
        CHECK_THROWS_AS(reduce(Lemma::Roof, vertex_cover(path_graph(3), 1), roof_pattern), Error);
        CHECK_THROWS_AS(reduce(Lemma::EdgeDelEq, edge_deletion(path_graph(3), 1), Graph()), Error);
    }

    TEST_CASE("backward maps tolerate junk")
    {
        ReductionArtifact a = reduce_roof_triangle(edge_deletion(complete_graph(3), 1), roof_pattern);
        SourceWitness w = a.backward({{0, 1}, {40, 41}, {1, 2}});
        CHECK(w.edges == std::vector<Edge>{{0, 1}});
        ReductionArtifact b = reduce_girth4b(vertex_cover(cycle_graph(7), 3), cycle_graph(4));
        CHECK_NOTHROW(b.backward({{0, 5}, {7, 0}}));
    }

    TEST_CASE("names and sidecar text")
    {
        for (Lemma l : {Lemma::EdgeDelEq, Lemma::Degree3, Lemma::Roof, Lemma::Hanging, Lemma::Girth4A, Lemma::Girth4B,
                        Lemma::TreeEven, Lemma::TreeOdd})
            CHECK(parse_lemma(to_string(l)) == l);
        CHECK_FALSE(parse_lemma("girth4c").has_value());
        CHECK(parse_source_problem("vertex-cover") == SourceProblem::VertexCover);
        ReductionArtifact a = reduce_roof_triangle(edge_deletion(complete_graph(3), 1), roof_pattern);
        std::string text = metadata_text(a);
        CHECK(text.starts_with("lemma=roof\n"));
        CHECK(text.find("target_vertices=15\n") != std::string::npos);
        CHECK(text.find("block=R:0>1:3:2\n") != std::string::npos);
    }

    TEST_CASE("sampling")
    {
        SourceInstance a = sample_source(SourceProblem::VertexCover, 7, 5, 1);
        CHECK(girth(a.graph).length >= 5);
        CHECK_FALSE(girth(a.graph).infinite());
        CHECK(a.graph == sample_source(SourceProblem::VertexCover, 7, 5, 1).graph);
        CHECK(sample_source(SourceProblem::P3FreeEdgeDeletion, 5, std::nullopt, 2).graph.vertex_count() == 5);
        CHECK_THROWS_AS(sample_source(SourceProblem::VertexCover, 4, 5, 1), Error);
        CHECK_THROWS_AS(sample_source(SourceProblem::VertexCover, 0, std::nullopt, 1), Error);
    }
}

TEST_SUITE("reductions-equivalence")
{
    TEST_CASE("a few sampled instances per scenario")
    {
        for (const checks::Scenario& s : checks::reduction_scenarios())
            for (int i = 0; i < 6; ++i) {
                SourceInstance src = checks::scenario_instance(s, i);
                CAPTURE(s.name);
                CAPTURE(to_string(src.graph));
                CAPTURE(src.budget);
                checks::EquivalenceOutcome o = checks::reduction_equivalence(s.lemma, src, s.pattern);
                CHECK_MESSAGE(o.ok(), o.detail);
            }
    }

    TEST_CASE("named small instances")
    {
        // C7 needs four cover vertices.
        checks::EquivalenceOutcome o = checks::reduction_equivalence(Lemma::Girth4B, vertex_cover(cycle_graph(7), 4), cycle_graph(4));
        CHECK_MESSAGE(o.ok(), o.detail);
        CHECK(o.source_yes);
        o = checks::reduction_equivalence(Lemma::Girth4B, vertex_cover(cycle_graph(7), 3), cycle_graph(4));
        CHECK_MESSAGE(o.ok(), o.detail);
        CHECK_FALSE(o.source_yes);
        o = checks::reduction_equivalence(Lemma::Degree3, edge_deletion(complete_graph(5), 1), Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}));
        CHECK_MESSAGE(o.ok(), o.detail);
    }
}
