#include "hfs/families.hpp"

#include "hfs/error.hpp"

#include <algorithm>
#include <array>

namespace hfs {

namespace {

enum class Rel { Forbidden, Required, Optional, Link };

constexpr int kRoles = 9;

struct Rules {
    std::vector<Role> roles; // roles usable in this family (S covers S and S')
    std::array<std::array<Rel, kRoles>, kRoles> rel{};
    std::array<bool, kRoles> target{};

    void set(Role p, Role q, Rel r)
    {
        rel[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = r;
        rel[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = r;
    }
    Rel get(Role p, Role q) const { return rel[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }
    bool is_target(Role r) const { return target[static_cast<std::size_t>(r)]; }
    void link(std::initializer_list<Role> targets)
    {
        for (Role t : targets) {
            target[static_cast<std::size_t>(t)] = true;
            set(Role::S, t, Rel::Link);
            set(Role::x, t, Rel::Optional);
        }
    }
};

Rules rules_for(Family f)
{
    using enum Role;
    Rules r;
    for (auto& row : r.rel)
        row.fill(Rel::Forbidden);
    r.set(x, S, Rel::Required);
    switch (f) {
    case Family::H1:
        r.roles = {A, B, a, b, c, x, S};
        r.set(A, B, Rel::Required);
        r.set(A, a, Rel::Required);
        r.set(B, b, Rel::Required);
        r.set(c, B, Rel::Optional);
        r.link({a, b, c});
        break;
    case Family::H2:
        r.roles = {A, B, a, b, x, S};
        r.set(A, B, Rel::Required);
        r.set(a, A, Rel::Optional);
        r.set(b, A, Rel::Optional);
        r.link({B, a, b});
        break;
    case Family::H3:
        r.roles = {A, B, a, b, c, d, x, S};
        r.set(A, B, Rel::Required);
        r.set(a, B, Rel::Required);
        r.set(c, B, Rel::Required);
        r.set(b, A, Rel::Required);
        r.set(d, A, Rel::Required);
        r.link({a, b, c, d});
        break;
    }
    return r;
}

bool singleton(Role r)
{
    return r != Role::A && r != Role::B && r != Role::S && r != Role::Sprime;
}

class RoleSearch {
public:
    RoleSearch(const Graph& h, Family f) : h_(h), rules_(rules_for(f)), role_(static_cast<std::size_t>(h.vertex_count()))
    {
        order_.resize(static_cast<std::size_t>(h.vertex_count()));
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex p, Vertex q) { return h.degree(p) > h.degree(q); });
    }

    std::optional<std::vector<Role>> run()
    {
        assigned_.assign(role_.size(), false);
        if (!assign(0))
            return std::nullopt;
        return role_;
    }

private:
    bool fits(Vertex v, Role r) const
    {
        if (r == Role::S && h_.degree(v) > 2)
            return false;
        if (singleton(r))
            for (Vertex w = 0; w < h_.vertex_count(); ++w)
                if (assigned_[static_cast<std::size_t>(w)] && role_[static_cast<std::size_t>(w)] == r)
                    return false;
        for (Vertex w = 0; w < h_.vertex_count(); ++w) {
            if (!assigned_[static_cast<std::size_t>(w)])
                continue;
            bool adjacent = h_.has_edge(v, w);
            switch (rules_.get(r, role_[static_cast<std::size_t>(w)])) {
            case Rel::Forbidden:
                if (adjacent)
                    return false;
                break;
            case Rel::Required:
                if (!adjacent)
                    return false;
                break;
            case Rel::Optional:
            case Rel::Link:
                break;
            }
        }
        return true;
    }

    // Link bookkeeping over the assigned vertices: every S has at most one target neighbour,
    // every target at most one S neighbour, and a target with an S neighbour is not adjacent to x.
    bool links_ok() const
    {
        Vertex x = -1;
        for (Vertex w = 0; w < h_.vertex_count(); ++w)
            if (assigned_[static_cast<std::size_t>(w)] && role_[static_cast<std::size_t>(w)] == Role::x)
                x = w;
        for (Vertex w = 0; w < h_.vertex_count(); ++w) {
            if (!assigned_[static_cast<std::size_t>(w)])
                continue;
            Role r = role_[static_cast<std::size_t>(w)];
            bool is_s = r == Role::S;
            bool is_t = rules_.is_target(r);
            if (!is_s && !is_t)
                continue;
            int partners = 0;
            for (Vertex y : h_.neighbors(w)) {
                if (!assigned_[static_cast<std::size_t>(y)])
                    continue;
                Role ry = role_[static_cast<std::size_t>(y)];
                if ((is_s && rules_.is_target(ry)) || (is_t && ry == Role::S))
                    ++partners;
            }
            if (partners > 1)
                return false;
            if (is_t && partners == 1 && x >= 0 && h_.has_edge(w, x))
                return false;
        }
        return true;
    }

    bool assign(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        Vertex v = order_[depth];
        for (Role r : rules_.roles) {
            if (!fits(v, r))
                continue;
            role_[static_cast<std::size_t>(v)] = r;
            assigned_[static_cast<std::size_t>(v)] = true;
            if (links_ok() && assign(depth + 1))
                return true;
            assigned_[static_cast<std::size_t>(v)] = false;
        }
        return false;
    }

    const Graph& h_;
    Rules rules_;
    std::vector<Vertex> order_;
    std::vector<Role> role_;
    std::vector<bool> assigned_;
};

} // namespace

std::optional<FamilyWitness> family_membership_in(const Graph& h, Family family)
{
    auto roles = RoleSearch(h, family).run();
    if (!roles)
        return std::nullopt;
    FamilyWitness w{family, std::move(*roles)};
    const Rules rules = rules_for(family);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (w.roles[static_cast<std::size_t>(v)] != Role::S)
            continue;
        bool linked = std::any_of(h.neighbors(v).begin(), h.neighbors(v).end(),
                                  [&](Vertex y) { return rules.is_target(w.roles[static_cast<std::size_t>(y)]); });
        if (!linked)
            w.roles[static_cast<std::size_t>(v)] = Role::Sprime;
    }
    return w;
}

std::optional<FamilyWitness> family_membership(const Graph& h, int limit)
{
    if (h.vertex_count() > limit)
        throw Error(ErrorKind::BudgetExceeded, "family search is limited to " + std::to_string(limit) + " vertices");
    for (Family f : {Family::H1, Family::H2, Family::H3})
        if (auto w = family_membership_in(h, f))
            return w;
    return std::nullopt;
}

const char* to_string(Family f)
{
    switch (f) {
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::H3: return "H3";
    }
    return "?";
}

const char* to_string(Role r)
{
    switch (r) {
    case Role::A: return "A";
    case Role::B: return "B";
    case Role::S: return "S";
    case Role::Sprime: return "S'";
    case Role::a: return "a";
    case Role::b: return "b";
    case Role::c: return "c";
    case Role::d: return "d";
    case Role::x: return "x";
    }
    return "?";
}

} // namespace hfs
