#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "triwidth/graphs.hpp"
#include "triwidth/mso/formula.hpp"
#include "triwidth/skeleton.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth::mso {

// Interpretation of either signature; elements of each sort are 0..carrier-1.
class Structure {
 public:
  static Structure from_graph(const SimpleGraph& g);
  static Structure from_graph(const EdgeColouredGraph& g);
  static Structure from_triangulation(const Triangulation& t, const Skeleton& sk);

  const Signature& signature() const { return sig_; }
  int carrier(Sort s) const;  // element or set sort

  bool adj(int u, int v) const { return bit(adj_, u, v); }
  bool inc(int e, int v) const { return arc_u_[e] == v || arc_v_[e] == v; }
  bool col(int i, int e) const { return arc_colour_[e] == i; }
  bool adjc(int i, int u, int v) const { return bit(adjc_[i], u, v); }
  // For a label sequence pi, the face f with f <=_pi s for each simplex s, or -1.
  const std::vector<int>& sub_table(const std::string& pi) const;

 private:
  bool bit(const std::vector<std::uint64_t>& m, int u, int v) const { return m[u * words_ + v / 64] >> (v % 64) & 1u; }
  void set_bit(std::vector<std::uint64_t>& m, int u, int v) { m[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  Signature sig_;
  int n_ = 0, words_ = 0;
  std::vector<int> arc_u_, arc_v_, arc_colour_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<std::uint64_t>> adjc_;  // [colour]
  std::vector<int> faces_;                        // per dimension
  std::map<std::string, std::vector<int>> sub_;
};

}  // namespace triwidth::mso
