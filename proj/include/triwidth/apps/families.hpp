#pragma once

#include <cstdint>
#include <random>

#include "triwidth/graphs.hpp"
#include "triwidth/tdecomp.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth::apps {

// Closed 3-dimensional ring: facets 0,1 of tetrahedron k meet facets 2,3 of k+1 (mod n).
Triangulation layered_ring(int n);
// Path decomposition of its dual graph with bags {0, k, k+1}; width 2.
TreeDecomposition layered_ring_decomposition(int n);

// Each facet slot is glued with probability `glue` to a random free slot; closed = pair every slot.
Triangulation random_triangulation(int d, int n, double glue, std::mt19937_64& rng);
Triangulation random_closed(int d, int n, std::mt19937_64& rng);

EdgeColouredGraph random_coloured_graph(int n, int k, double density, std::mt19937_64& rng);

}  // namespace triwidth::apps
