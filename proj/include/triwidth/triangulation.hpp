#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace triwidth {

// Image list of a permutation of {0..d}.
using Perm = std::vector<int>;

Perm inverse(const Perm& p);

struct Gluing {
  int s1, f1, s2, f2;
  Perm map;  // map[f1] == f2

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

// Facet f of a simplex is the face opposite vertex f.
class Triangulation {
 public:
  static constexpr int kMaxDim = 9;

  Triangulation() = default;
  // Reverse records may be present if they agree; throws ValidationError otherwise.
  Triangulation(int dim, int n, const std::vector<Gluing>& gluings);

  int dim() const { return dim_; }
  int size() const { return n_; }

  // One record per glued pair, oriented so that (s1,f1) < (s2,f2), sorted.
  const std::vector<Gluing>& gluings() const { return gluings_; }

  bool glued(int s, int f) const { return slots_[slot(s, f)].s >= 0; }
  // Partner of (s,f) and the map carrying simplex s's vertices to the partner's.
  int partner_simplex(int s, int f) const { return slots_[slot(s, f)].s; }
  int partner_facet(int s, int f) const { return slots_[slot(s, f)].f; }
  const Perm& partner_map(int s, int f) const { return slots_[slot(s, f)].map; }

  int boundary_facets() const;
  bool closed() const { return boundary_facets() == 0; }

 private:
  struct Slot {
    int s = -1, f = -1;
    Perm map;
  };
  int slot(int s, int f) const { return s * (dim_ + 1) + f; }

  int dim_ = 0, n_ = 0;
  std::vector<Gluing> gluings_;
  std::vector<Slot> slots_;
};

Triangulation parse_triangulation(std::string_view text);
Triangulation load_triangulation(const std::string& path);
std::string to_text(const Triangulation& t);

// (1, d+1) move: simplex s becomes d+1 simplices around a new interior vertex.
// New simplex j replaces vertex j by the centre; j=0 keeps index s, the rest are appended.
Triangulation subdivide_simplex(const Triangulation& t, int s);

struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // loops and parallel arcs allowed

  std::vector<int> degrees() const;  // a loop adds 2
};

MultiGraph dual_graph(const Triangulation& t);

std::string read_file(const std::string& path);

}  // namespace triwidth
