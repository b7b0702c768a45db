#pragma once

#include <set>
#include <string>
#include <vector>

#include "triwidth/mso/formula.hpp"

namespace triwidth::mso {

struct Translation {
  F formula;
  std::vector<VarDecl> free;
};

// Fresh variable names that avoid every name in `taken`.
class NameGen {
 public:
  explicit NameGen(std::set<std::string> taken = {}) : taken_(std::move(taken)) {}
  std::string fresh(const std::string& stem);

 private:
  std::set<std::string> taken_;
  int next_ = 0;
};

// Coloured-graph sentence over k colours -> plain simple-graph sentence on the encoding.
Translation translate_coloured(const F& phi, int k, const std::vector<VarDecl>& free = {});
// Triangulation formula in dimension d -> coloured-graph formula on the Hasse diagram.
Translation translate_triangulation(const F& phi, int d, const std::vector<VarDecl>& free = {});

// Helper predicates on the encoded graph, free in x.
F in_clique(const std::string& x, int m, NameGen& names);
F is_col(int i, const std::string& x, NameGen& names);
F is_arc(const std::string& x, NameGen& names);
F is_node(const std::string& x, int k, NameGen& names);

// Helper predicate on the Hasse graph, free in x.
F is_face(int i, const std::string& x, int d, NameGen& names);

// One disjunct per labelling of the intermediate faces along a fixed vertex chain.
std::vector<F> subface_chains(int i, const std::string& pi, int d, const std::string& f, const std::string& s,
                              NameGen& names);
F expand_subface_relation(int i, const std::string& pi, int d, const std::string& f, const std::string& s,
                          NameGen& names);

}  // namespace triwidth::mso
