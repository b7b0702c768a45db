#pragma once

#include <array>
#include <optional>
#include <vector>

#include "triwidth/skeleton.hpp"
#include "triwidth/tdecomp.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth::apps {

// Edge slots of a tetrahedron in the order 01 02 03 12 13 23.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
// Type t in {1,2,3} puts pi on opposite edges 01/23, 02/13, 03/12.
inline constexpr std::array<std::array<int, 2>, 3> kTautPiSlots{{{0, 5}, {1, 4}, {2, 3}}};

// Per tetrahedron, the edge id of each slot.
std::vector<std::array<int, 6>> tet_edge_ids(const Skeleton& sk);

// Types per tetrahedron, each in {1,2,3}.
using TautWitness = std::vector<int>;

// Every edge must receive pi exactly twice, counted over all its tetrahedron slots.
bool taut_check(const Skeleton& sk, const TautWitness& w);

// First witness in lexicographic order over all 3^n assignments. Throws DimensionError unless d = 3.
std::optional<TautWitness> taut_bruteforce(const Triangulation& t, const Skeleton& sk, int jobs = 1);

// Dynamic programme over a decomposition of the dual graph. Throws ValidationError on an invalid one.
std::optional<TautWitness> taut_dp(const Triangulation& t, const Skeleton& sk, const TreeDecomposition& td);

}  // namespace triwidth::apps
