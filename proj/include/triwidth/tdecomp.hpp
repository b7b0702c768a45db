#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triwidth/graphs.hpp"
#include "triwidth/skeleton.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth {

struct HasseDiagram;

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted
  std::vector<std::pair<int, int>> links;

  int width() const;
  std::vector<std::vector<int>> adjacency() const;
};

struct DecompositionCheck {
  bool ok = true;
  std::string condition;  // tree | range | coverage | arc | connectivity
  std::string witness;
};

// Loops only need coverage; parallel arcs collapse.
DecompositionCheck validate_decomposition(int n, const std::vector<std::pair<int, int>>& arcs,
                                          const TreeDecomposition& td);

enum class DecomposeMode { Heuristic, Exact };
inline constexpr int kExactCap = 14;

TreeDecomposition decompose(int n, const std::vector<std::pair<int, int>>& arcs, DecomposeMode mode);
int exact_treewidth(int n, const std::vector<std::pair<int, int>>& arcs);
// Bags from an elimination ordering; forests are joined into one tree.
TreeDecomposition from_elimination_order(int n, const std::vector<std::pair<int, int>>& arcs,
                                         const std::vector<int>& order);

TreeDecomposition lift_to_encoded(const TreeDecomposition& td, const EdgeColouredGraph& g, const EncodedGraph& enc);
TreeDecomposition lift_to_hasse(const TreeDecomposition& td, const Triangulation& t, const Skeleton& sk,
                                const HasseDiagram& h);

// Children lists and a post-order (children before parents) of a valid decomposition.
struct RootedDecomposition {
  int root = 0;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> post_order;
};
RootedDecomposition root_decomposition(const TreeDecomposition& td, int root = 0);

// `bag <id> : <nodes...>` and `link <id1> <id2>`; ids are renumbered in order of appearance.
TreeDecomposition parse_decomposition(std::string_view text);
std::string to_text(const TreeDecomposition& td);

}  // namespace triwidth
