#pragma once

#include "hfs/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hfs {

enum class CoreKind { Hkl, Htilde };

struct SpecialCoreParams {
    CoreKind kind = CoreKind::Hkl;
    int k = 0;
    int l = 0;
    std::array<int, 3> i{};
    /// embedding[s] is the input vertex playing standard vertex s of hkl_graph / htilde_graph.
    std::vector<Vertex> embedding;

    Graph standard_graph() const;
};

/// Parameters are normalised to k <= l (and the smaller of i, reversed i when k == l).
/// The shapes [1,1,0] and [0,1,1] never appear: they are H_{k+1,l}[0,0,0].
/// Throws Malformed unless c is connected with minimum degree >= 2 or a single vertex.
std::optional<SpecialCoreParams> recognize_special_core(const Graph& c);

/// Whether hkl_graph(k,l,i) has a vertex of degree below 2, which rules it out as a core.
bool hkl_is_core_shaped(std::array<int, 3> i);

std::string describe(const SpecialCoreParams& p);

} // namespace hfs
