#pragma once

#include "hfs/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfs {

enum class Family { H1, H2, H3 };

/// S vertices hang between x and one link target; S' vertices touch only x.
enum class Role { A, B, S, Sprime, a, b, c, d, x };

struct FamilyWitness {
    Family family = Family::H1;
    std::vector<Role> roles; ///< roles[v] for every vertex of h
};

inline constexpr int kFamilySearchLimit = 14;

/// A role assignment showing h is an induced subgraph of a member of one of the three families.
/// Throws BudgetExceeded above `limit` vertices.
std::optional<FamilyWitness> family_membership(const Graph& h, int limit = kFamilySearchLimit);
std::optional<FamilyWitness> family_membership_in(const Graph& h, Family family);

const char* to_string(Family f);
const char* to_string(Role r);

} // namespace hfs
