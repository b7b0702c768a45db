#pragma once

#include <memory>
#include <string>
#include <vector>

namespace triwidth::mso {

struct Sort {
  enum class Kind { Node, Arc, NodeSet, ArcSet, Face, FaceSet };
  Kind kind = Kind::Node;
  int dim = 0;  // faces only

  bool is_set() const { return kind == Kind::NodeSet || kind == Kind::ArcSet || kind == Kind::FaceSet; }
  Sort element() const;
  Sort set_of() const;
  std::string str() const;

  static Sort node() { return {Kind::Node, 0}; }
  static Sort arc() { return {Kind::Arc, 0}; }
  static Sort nodeset() { return {Kind::NodeSet, 0}; }
  static Sort arcset() { return {Kind::ArcSet, 0}; }
  static Sort face(int i) { return {Kind::Face, i}; }
  static Sort faceset(int i) { return {Kind::FaceSet, i}; }

  friend bool operator==(const Sort&, const Sort&) = default;
};

struct Formula;
using F = std::shared_ptr<const Formula>;

struct Formula {
  enum class Op { True, False, Not, And, Or, Implies, Forall, Exists, Eq, In, Inc, Adj, Col, AdjC, Sub };

  Op op;
  std::vector<F> kids;
  std::string var;                // bound variable
  Sort sort;                      // bound variable sort
  std::vector<std::string> args;  // atom arguments
  int index = 0;                  // colour index of col/adjc
  std::string pi;                 // label sequence of sub

  bool is_atom() const { return op >= Op::Eq; }
  bool is_quantifier() const { return op == Op::Forall || op == Op::Exists; }
};

struct VarDecl {
  std::string name;
  Sort sort;
  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct Signature {
  enum class Kind { Graph, Tri };
  Kind kind = Kind::Graph;
  int k = 0;  // colours, graph signature
  int d = 0;  // dimension, triangulation signature

  static Signature graph(int k) { return {Kind::Graph, k, 0}; }
  static Signature tri(int d) { return {Kind::Tri, 0, d}; }
};

// Constructors; And/Or with one kid collapse to it, with none to true/false.
F t_true();
F t_false();
F neg(F a);
F conj(std::vector<F> kids);
F disj(std::vector<F> kids);
F implies(F a, F b);
// And/Or/Not/Implies with the given operands, no collapsing.
F connective(Formula::Op op, std::vector<F> kids);
F forall(const std::string& v, Sort s, F body);
F exists(const std::string& v, Sort s, F body);
F eq(const std::string& a, const std::string& b);
F in(const std::string& x, const std::string& set);
F inc(const std::string& e, const std::string& v);
F adj(const std::string& u, const std::string& v);
F col(int i, const std::string& e);
F adjc(int i, const std::string& u, const std::string& v);
F sub(const std::string& pi, const std::string& f, const std::string& s);

std::string print(const F& f);
bool same(const F& a, const F& b);
std::vector<std::string> free_variables(const F& f);
std::size_t formula_size(const F& f);
// Every variable name that occurs, bound or free.
std::vector<std::string> all_names(const F& f);

// Pretty printed formula with its free variables, used by problem files and errors.
std::string print_decls(const std::vector<VarDecl>& decls);

}  // namespace triwidth::mso
