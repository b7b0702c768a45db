#pragma once

#include <string>
#include <vector>

#include "triwidth/graphs.hpp"
#include "triwidth/skeleton.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth {

// "-" first, then by length, then lexicographic: d=2 gives -,0,1,01,02,10,12,20,21.
std::vector<std::string> hasse_colours(int d);
// 1-based position of a colour in hasse_colours(d), or 0.
int hasse_colour_index(int d, const std::string& colour);

struct HasseDiagram {
  static constexpr int kEmptyLevel = -1;

  struct NodeInfo {
    int level;  // face dimension, or kEmptyLevel for the empty face
    int face;   // face id within its level
  };

  int dim = 0;
  EdgeColouredGraph graph;  // arcs oriented lower -> upper; colours from hasse_colours(dim)
  std::vector<NodeInfo> nodes;
  std::vector<int> offset;  // first node of each level

  int node(int level, int face) const { return offset[level] + face; }
  int empty_node() const { return static_cast<int>(nodes.size()) - 1; }
  long long size() const { return graph.size(); }
};

HasseDiagram build_hasse(const Triangulation& t, const Skeleton& sk);
long long hasse_size_bound(int d, long long n);  // 2^d (d+3) n

}  // namespace triwidth
