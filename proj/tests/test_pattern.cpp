#include "doctest.h"

#include "hfs/classify.hpp"
#include "hfs/error.hpp"
#include "hfs/families.hpp"
#include "hfs/generators.hpp"
#include "hfs/induced.hpp"
#include "hfs/pattern.hpp"
#include "hfs/special_core.hpp"
#include "support/brute.hpp"
#include "support/family_check.hpp"

#include <map>
#include <tuple>

using namespace hfs;

namespace {

const Graph roof_example(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
const Graph hanging_pair(7, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {0, 6}});
const Graph triangle_with_tail(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});

struct HklKey {
    int k, l;
    std::array<int, 3> i;
    auto operator<=>(const HklKey&) const = default;
};

} // namespace

TEST_SUITE("pattern")
{
    TEST_CASE("subdivided stars and bistars")
    {
        CHECK(is_subdivided_star(path_graph(5)));
        CHECK(is_subdivided_star(spider({2, 1, 1})));
        CHECK_FALSE(is_subdivided_star(bistar(2, 2)));
        CHECK(is_subdivided_bistar(bistar(2, 2)));
        CHECK_FALSE(is_subdivided_bistar(two_branch_tree(2)));
        CHECK_FALSE(is_subdivided_bistar(star_graph(3)));
    }

    TEST_CASE("polynomial frontier")
    {
        CHECK(obs1_polynomial(disjoint_union(path_graph(3), star_graph(3))));
        CHECK_FALSE(obs1_polynomial(disjoint_union(bistar(2, 2), bistar(2, 2))));
        CHECK_FALSE(obs1_polynomial(complete_graph(3)));
        CHECK(obs1_polynomial(Graph(1)));
        CHECK(obs1_polynomial(Graph(3)));
    }

    TEST_CASE("easy cases")
    {
        CHECK(thm_easy_case(complete_graph(3)) == EasyCase::Case1);
        CHECK(thm_easy_case(complete_graph(4)) == EasyCase::Case1);
        CHECK_FALSE(thm_easy_case(cycle_graph(5)).has_value());
        // Two adjacent degree-3 vertices each carrying a further degree-3 neighbour.
        Graph chain = bistar(2, 2);
        GraphBuilder b(chain);
        Vertex x = b.add_vertices(3);
        b.add_edge(2, x);
        b.add_edge(2, x + 1);
        b.add_edge(2, x + 2);
        CHECK(thm_easy_case(b.build()) == EasyCase::Case2);
    }

    TEST_CASE("roof and hanging triangles")
    {
        auto roof = find_roof_triangle(roof_example);
        REQUIRE(roof.has_value());
        CHECK(roof->a == 0);
        CHECK(roof->b == 1);
        CHECK(roof->apex == 2);
        CHECK_FALSE(find_roof_triangle(triangle_with_tail).has_value());
        CHECK_FALSE(find_roof_triangle(cycle_graph(4)).has_value());

        auto pair = find_adjacent_hanging_triangles(hanging_pair);
        REQUIRE(pair.has_value());
        CHECK(pair->a == 0);
        CHECK(pair->b == 1);
        CHECK_FALSE(find_adjacent_hanging_triangles(bowtie()).has_value());
        CHECK_FALSE(find_adjacent_hanging_triangles(complete_graph(4)).has_value());
    }

    TEST_CASE("unique triangle")
    {
        CHECK(has_unique_triangle(triangle_with_tail));
        CHECK_FALSE(has_unique_triangle(complete_graph(4)));
        CHECK_FALSE(has_unique_triangle(cycle_graph(4)));
    }

    TEST_CASE("tree profiles")
    {
        TreeProfile p = tree_branching_profile(bistar(2, 2));
        CHECK(p.branching_count == 2);
        CHECK(p.distance == 1);
        p = tree_branching_profile(star_graph(3));
        CHECK(p.branching_count == 1);
        CHECK_FALSE(p.distance.has_value());
        CHECK(tree_branching_profile(two_branch_tree(2)).distance == 2);
        CHECK_THROWS_AS(tree_branching_profile(cycle_graph(3)), Error);
    }
}

TEST_SUITE("special-core")
{
    TEST_CASE("named examples")
    {
        CHECK_FALSE(recognize_special_core(cycle_graph(4)).has_value());
        auto p = recognize_special_core(hkl_graph(2, 4, {1, 1, 1}));
        REQUIRE(p.has_value());
        CHECK(p->kind == CoreKind::Hkl);
        CHECK(std::tie(p->k, p->l) == std::tuple{2, 4});
        CHECK(p->i == std::array{1, 1, 1});
        auto t = recognize_special_core(htilde_graph());
        REQUIRE(t.has_value());
        CHECK(t->kind == CoreKind::Htilde);
        CHECK_THROWS_AS(recognize_special_core(path_graph(3)), Error);
    }

    TEST_CASE("every small H_{k,l} is recognised with consistent normalised parameters")
    {
        std::map<std::string, HklKey> seen;
        for (int k = 2; k <= 4; ++k)
            for (int l = 2; l <= 4; ++l)
                for (int i1 = 0; i1 < 3; ++i1)
                    for (int i2 = 0; i2 < 3; ++i2)
                        for (int i3 = 0; i3 < 3; ++i3) {
                            std::array<int, 3> i{i1, i2, i3};
                            if (!hkl_is_core_shaped(i))
                                continue;
                            CAPTURE(k);
                            CAPTURE(l);
                            CAPTURE(i1 * 100 + i2 * 10 + i3);
                            Graph g = hkl_graph(k, l, i);
                            std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
                            for (int v = 0; v < g.vertex_count(); ++v)
                                perm[static_cast<std::size_t>(v)] = g.vertex_count() - 1 - v;
                            Graph shuffled = permute(g, perm);
                            auto p = recognize_special_core(shuffled);
                            REQUIRE(p.has_value());
                            CHECK(p->kind == CoreKind::Hkl);
                            CHECK(p->k <= p->l);
                            CHECK(p->i != std::array{1, 1, 0});
                            CHECK(p->i != std::array{0, 1, 1});
                            Graph standard = p->standard_graph();
                            CHECK(canonical_form(standard) == canonical_form(g));
                            // The embedding maps the standard graph onto the input.
                            for (const Edge& e : standard.edges())
                                CHECK(shuffled.has_edge(p->embedding[static_cast<std::size_t>(e.u)],
                                                        p->embedding[static_cast<std::size_t>(e.v)]));
                            CHECK(standard.edge_count() == shuffled.edge_count());
                            // Isomorphic inputs receive identical parameters.
                            HklKey key{p->k, p->l, p->i};
                            auto [it, fresh] = seen.emplace(canonical_form(g), key);
                            CHECK(it->second == key);
                        }
        CHECK(seen.size() > 50);
    }

    TEST_CASE("cycles and the Petersen graph are not special")
    {
        for (int n = 3; n <= 12; ++n)
            CHECK_FALSE(recognize_special_core(cycle_graph(n)).has_value());
        CHECK_FALSE(recognize_special_core(petersen()).has_value());
        CHECK_FALSE(recognize_special_core(complete_bipartite(2, 3)).has_value());
    }
}

TEST_SUITE("families")
{
    TEST_CASE("named examples")
    {
        auto k23 = family_membership(complete_bipartite(2, 3));
        REQUIRE(k23.has_value());
        CHECK(famcheck::check(complete_bipartite(2, 3), *k23) == "");
        CHECK(family_membership_in(complete_bipartite(2, 3), Family::H2).has_value());
        auto c4 = family_membership(cycle_graph(4));
        REQUIRE(c4.has_value());
        CHECK(famcheck::check(cycle_graph(4), *c4) == "");
        CHECK_FALSE(family_membership(petersen()).has_value());
    }

    TEST_CASE("the six-cycle is a member through subdivided x-edges")
    {
        auto w = family_membership(cycle_graph(6));
        REQUIRE(w.has_value());
        CHECK(famcheck::check(cycle_graph(6), *w) == "");
    }

    TEST_CASE("search refuses large patterns")
    {
        CHECK_THROWS_AS(family_membership(cycle_graph(15)), Error);
    }

    TEST_CASE("witnesses re-verify on every connected graph up to six vertices")
    {
        int members = 0;
        for (int n = 1; n <= 6; ++n)
            for (const Graph& g : all_connected_graphs(n))
                for (Family f : {Family::H1, Family::H2, Family::H3})
                    if (auto w = family_membership_in(g, f)) {
                        ++members;
                        CHECK(w->family == f);
                        CHECK(famcheck::check(g, *w) == "");
                    }
        CHECK(members > 0);
    }

    TEST_CASE("membership is closed under vertex deletion")
    {
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : all_connected_graphs(n)) {
                if (!family_membership(g))
                    continue;
                for (Vertex v = 0; v < g.vertex_count(); ++v) {
                    std::vector<Vertex> keep;
                    for (Vertex u = 0; u < g.vertex_count(); ++u)
                        if (u != v)
                            keep.push_back(u);
                    CHECK(family_membership(induced_subgraph(g, keep).graph).has_value());
                }
            }
    }
}

TEST_SUITE("classify")
{
    TEST_CASE("named verdicts")
    {
        CHECK(verdict_record(classify(complete_graph(3))) == "status=NPHard rule=ThmEasy-1 case=1");
        CHECK(classify(complete_graph(4)).rule == Rule::ThmEasy1);
        CHECK(verdict_record(classify(cycle_graph(5))) == "status=NPHard rule=Girth4-B1 X=0,1,2,3,4");
        CHECK(classify(roof_example).rule == Rule::RoofTriangle);
        CHECK(classify(hanging_pair).rule == Rule::AdjacentHangingTriangles);
        CHECK(classify(triangle_with_tail).rule == Rule::Girth4B1);
        CHECK(classify(two_branch_tree(2)).rule == Rule::TreeEven);
        CHECK(classify(two_branch_tree(5)).rule == Rule::TreeOdd);
        PatternVerdict open = classify(two_branch_tree(3));
        CHECK(open.status == Status::Open);
        CHECK(open.rule == Rule::None);
        CHECK(classify(bistar(2, 3)).status == Status::Polynomial);
        CHECK(classify(disjoint_union(bistar(2, 2), bistar(2, 2))).rule == Rule::ThmEasy2);
        CHECK(classify(hkl_graph(2, 2, {0, 0, 0})).rule == Rule::Girth4B2core);
        CHECK(classify(htilde_graph()).rule == Rule::Girth4B2core);
        CHECK_THROWS_AS(classify(Graph()), Error);
    }

    TEST_CASE("trivial patterns are polynomial")
    {
        CHECK(classify(Graph(1)).status == Status::Polynomial);
        CHECK(classify(path_graph(2)).status == Status::Polynomial);
        CHECK(classify(Graph(3)).status == Status::Polynomial);
    }

    TEST_CASE("diagnostics list every applicable rule in order")
    {
        PatternVerdict v = classify(complete_graph(4), true);
        CHECK(v.rule == Rule::ThmEasy1);
        REQUIRE(v.applicable.size() >= 2);
        CHECK(v.applicable[0] == Rule::ThmEasy1);
        CHECK(v.applicable[1] == Rule::ThmEasy2);
        PatternVerdict t = classify(triangle_with_tail, true);
        CHECK(std::find(t.applicable.begin(), t.applicable.end(), Rule::UniqueTriangle) != t.applicable.end());
    }

    TEST_CASE("status is polynomial exactly on the polynomial frontier")
    {
        for (int n = 1; n <= 6; ++n)
            for (const Graph& g : all_graphs(n))
                CHECK((classify(g).status == Status::Polynomial) == obs1_polynomial(g));
    }

    TEST_CASE("open girth-three patterns have only non-adjacent hanging triangles")
    {
        for (int n = 3; n <= 7; ++n)
            for (const Graph& g : all_connected_graphs(n)) {
                if (girth(g).length != 3 || classify(g).status != Status::Open)
                    continue;
                CAPTURE(to_string(g));
                CHECK_FALSE(thm_easy_case(g).has_value());
                CHECK_FALSE(find_roof_triangle(g).has_value());
                CHECK_FALSE(find_adjacent_hanging_triangles(g).has_value());
                CHECK_FALSE(has_unique_triangle(g));
                std::vector<Triangle> ts = triangles(g);
                CHECK(ts.size() >= 2);
                std::vector<Vertex> attach;
                for (const Triangle& t : ts) {
                    int high = 0;
                    for (Vertex v : t)
                        if (g.degree(v) >= 3) {
                            ++high;
                            attach.push_back(v);
                        }
                    CHECK(high == 1);
                }
                for (std::size_t i = 0; i < attach.size(); ++i)
                    for (std::size_t j = i + 1; j < attach.size(); ++j)
                        CHECK_FALSE(g.has_edge(attach[i], attach[j]));
            }
    }

    TEST_CASE("triangles agree with cycle enumeration")
    {
        Rng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_graph(rng.between(3, 8), 0.5, rng);
            std::size_t threes = 0;
            for (const auto& [len, vs] : brute::cycles(g))
                threes += len == 3;
            CHECK(triangles(g).size() == threes);
        }
    }
}
