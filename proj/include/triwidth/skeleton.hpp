#pragma once

#include <cstdint>
#include <vector>

#include "triwidth/triangulation.hpp"

namespace triwidth {

struct Instance {
  int simplex;
  std::vector<int> emb;  // face label k sits at simplex vertex emb[k]
};

struct Face {
  int dim = 0;
  int id = 0;
  std::vector<Instance> instances;
  int canonical = 0;  // ascending tuple on the least (simplex, subset)
};

class Skeleton {
 public:
  explicit Skeleton(const Triangulation& t);

  int dim() const { return dim_; }
  int simplices() const { return n_; }
  const std::vector<Face>& faces(int i) const { return faces_[i]; }
  const Face& face(int i, int id) const { return faces_[i][id]; }
  std::vector<int> f_vector() const;
  int total_faces() const;
  long long euler_characteristic() const;
  bool self_identified() const { return self_identified_; }

  // The i-face containing the vertex subset `mask` of simplex s.
  int face_of(int i, int s, unsigned mask) const;
  // Face whose instance is exactly (s, emb), or -1.
  int face_with_instance(int s, const std::vector<int>& emb) const;
  bool has_instance(int i, int f, int s, const std::vector<int>& emb) const;

  // Existential over instances of g. Throws DimensionError on malformed input.
  bool subface_holds(int i, int f, const std::vector<int>& pi, int j, int g) const;

 private:
  static std::uint64_t code(int s, const std::vector<int>& emb);

  int dim_, n_;
  bool self_identified_ = false;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::vector<int>> face_of_;              // [i][s * 2^(d+1) + mask]
  std::vector<std::vector<std::uint64_t>> inst_codes_;  // [i][f], sorted
  std::vector<std::vector<std::size_t>> inst_begin_;
};

std::vector<int> subset_vertices(unsigned mask);
unsigned mask_of(const std::vector<int>& vertices);

}  // namespace triwidth
