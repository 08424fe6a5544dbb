#include "hfs/classify.hpp"

#include "hfs/error.hpp"
#include "hfs/families.hpp"
#include "hfs/pattern.hpp"
#include "hfs/special_core.hpp"

#include <optional>

namespace hfs {

namespace {

std::string join(const std::vector<Vertex>& vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out.empty() ? "-" : out;
}

using Witness = std::vector<std::pair<std::string, std::string>>;

struct Collector {
    bool diagnostics;
    PatternVerdict verdict;
    bool decided = false;

    // Records an applicable rule; the first one decides the verdict. Returns true when the
    // caller may stop evaluating further rules.
    bool hit(Status s, Rule r, Witness w)
    {
        verdict.applicable.push_back(r);
        if (!decided) {
            decided = true;
            verdict.status = s;
            verdict.rule = r;
            verdict.witness = std::move(w);
        }
        return !diagnostics;
    }
};

std::optional<std::vector<Vertex>> two_connected_cycle_set(const Graph& h)
{
    if (is_forest(h))
        return std::nullopt;
    auto x = shortest_cycle_vertices(h);
    if (!is_two_connected(induced_subgraph(h, x).graph))
        return std::nullopt;
    return x;
}

} // namespace

PatternVerdict classify(const Graph& h, bool diagnostics)
{
    if (h.empty())
        throw Error(ErrorKind::EmptyPattern, "pattern has no vertices");
    Collector out{diagnostics, {}};
    auto& notes = out.verdict.notes;

    if (h.vertex_count() <= 2)
        notes.push_back("trivial_pattern");
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 0) {
            notes.push_back("isolated_vertices");
            break;
        }

    if (obs1_polynomial(h)) {
        int bistars = 0;
        for (const auto& comp : components(h))
            bistars += is_subdivided_bistar(induced_subgraph(h, comp).graph);
        out.hit(Status::Polynomial, Rule::Obs1, {{"bistars", std::to_string(bistars)}});
        return out.verdict;
    }

    auto easy = thm_easy_case(h);
    if (easy == EasyCase::Case1 && out.hit(Status::NPHard, Rule::ThmEasy1, {{"case", "1"}}))
        return out.verdict;
    if (induced_subgraph(h, branching_vertices(h)).graph.edge_count() >= 2 &&
        out.hit(Status::NPHard, Rule::ThmEasy2, {{"case", "2"}, {"X", join(branching_vertices(h))}}))
        return out.verdict;

    if (auto r = find_roof_triangle(h))
        if (out.hit(Status::NPHard, Rule::RoofTriangle,
                    {{"attach", join({r->a, r->b})}, {"apex", std::to_string(r->apex)}}))
            return out.verdict;
    if (auto p = find_adjacent_hanging_triangles(h))
        if (out.hit(Status::NPHard, Rule::AdjacentHangingTriangles, {{"attach", join({p->a, p->b})}}))
            return out.verdict;

    // A unique triangle is a 2-connected shortest-cycle set, so it is reported under that rule.
    if (has_unique_triangle(h)) {
        out.verdict.applicable.push_back(Rule::UniqueTriangle);
        notes.push_back("unique_triangle");
    }
    if (auto x = two_connected_cycle_set(h))
        if (out.hit(Status::NPHard, Rule::Girth4B1, {{"X", join(*x)}}))
            return out.verdict;

    const bool forest = is_forest(h);
    const Girth g = girth(h);
    if (!forest && g.length >= 4 && !easy) {
        if (is_connected(h)) {
            CoreResult core = two_core(h);
            if (auto params = recognize_special_core(core.core)) {
                Witness w{{"core", params->kind == CoreKind::Htilde ? "Htilde" : "Hkl"}};
                if (params->kind == CoreKind::Hkl) {
                    w.emplace_back("k", std::to_string(params->k));
                    w.emplace_back("l", std::to_string(params->l));
                    w.emplace_back("i", join({params->i[0], params->i[1], params->i[2]}));
                }
                if (out.hit(Status::NPHard, Rule::Girth4B2core, std::move(w)))
                    return out.verdict;
            }
        }
        std::optional<FamilyWitness> fam;
        bool budget_hit = false;
        try {
            fam = family_membership(h);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
            budget_hit = true;
            notes.push_back("family_search_budget_exceeded");
        }
        if (!budget_hit && !fam) {
            if (out.hit(Status::NPHard, Rule::Girth4A, {{"family", "none"}}))
                return out.verdict;
        } else if (budget_hit && is_connected(h) && !out.decided) {
            // Connected family members satisfy one of the two rules above, so h is outside the families.
            notes.push_back("family_excluded_by_structure");
            if (out.hit(Status::NPHard, Rule::Girth4A, {{"family", "excluded"}}))
                return out.verdict;
        } else if (fam) {
            notes.push_back(std::string("family_member=") + to_string(fam->family));
        }
    }

    if (forest && is_tree(h)) {
        TreeProfile p = tree_branching_profile(h);
        if (p.branching_count == 2 && p.distance) {
            int d = *p.distance;
            Witness w{{"branching", join(p.branching)}, {"d", std::to_string(d)}};
            if (d % 2 == 0 && d >= 2 && out.hit(Status::NPHard, Rule::TreeEven, std::move(w)))
                return out.verdict;
            if (d % 2 == 1 && d >= 5 && out.hit(Status::NPHard, Rule::TreeOdd, std::move(w)))
                return out.verdict;
            if (d == 3)
                notes.push_back("branching_distance_3");
        }
    }
    if (forest && !is_tree(h))
        notes.push_back("forest_beyond_observation");
    return out.verdict;
}

const char* to_string(Status s)
{
    switch (s) {
    case Status::Polynomial: return "Polynomial";
    case Status::NPHard: return "NPHard";
    case Status::Open: return "Open";
    }
    return "?";
}

const char* to_string(Rule r)
{
    switch (r) {
    case Rule::None: return "none";
    case Rule::Obs1: return "Obs1";
    case Rule::ThmEasy1: return "ThmEasy-1";
    case Rule::ThmEasy2: return "ThmEasy-2";
    case Rule::RoofTriangle: return "RoofTriangle";
    case Rule::AdjacentHangingTriangles: return "AdjacentHangingTriangles";
    case Rule::UniqueTriangle: return "UniqueTriangle";
    case Rule::Girth4A: return "Girth4-A";
    case Rule::Girth4B1: return "Girth4-B1";
    case Rule::Girth4B2core: return "Girth4-B2core";
    case Rule::TreeEven: return "TreeEven";
    case Rule::TreeOdd: return "TreeOdd";
    }
    return "?";
}

std::string verdict_record(const PatternVerdict& v)
{
    std::string out = std::string("status=") + to_string(v.status) + " rule=" + to_string(v.rule);
    for (const auto& [key, value] : v.witness)
        out += " " + key + "=" + value;
    return out;
}

} // namespace hfs
