#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "triwidth/error.hpp"
#include "triwidth/mso/evaluate.hpp"

namespace triwidth::mso {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A block of solutions: set members marked -1 may be chosen freely.
struct Cube {
  std::vector<int> elements;                     // per free variable (unused for sets)
  std::vector<std::vector<std::int8_t>> sets;    // per free variable (empty for elements)
  int unknowns() const;
};

// Cubes are pairwise disjoint and together cover every satisfying assignment.
void enumerate_solutions(const Structure& st, const F& f, const std::vector<VarDecl>& free,
                         const std::function<void(const Cube&)>& emit, const EvalOptions& opt = {});
BigInt count_solutions(const Structure& st, const F& f, const std::vector<VarDecl>& free,
                       const EvalOptions& opt = {});

struct ExtremumProblem {
  F formula;
  std::vector<VarDecl> free;  // set variables only
  std::vector<Rational> coeffs;
};

struct ExtremumResult {
  bool feasible = false;
  Rational value;
  Assignment witness;
};

// Minimum of sum coeffs[j] |A_j|; ties broken by the least characteristic vector.
ExtremumResult solve_extremum(const Structure& st, const ExtremumProblem& p, const EvalOptions& opt = {});

enum class EvalMode { Additive, Multiplicative };

template <class R>
struct EvaluationProblem {
  F formula;
  std::vector<VarDecl> free;             // set variables only
  EvalMode mode = EvalMode::Multiplicative;
  std::vector<std::vector<R>> weights;   // weights[j][x] for element x of A_j's carrier
};

void require_set_variables(const std::vector<VarDecl>& free);

template <class R>
R solve_evaluation(const Structure& st, const EvaluationProblem<R>& p, const EvalOptions& opt = {}) {
  require_set_variables(p.free);
  if (p.weights.size() != p.free.size()) throw SortError("one weight table per free set variable expected");
  for (std::size_t j = 0; j < p.free.size(); ++j)
    if (static_cast<int>(p.weights[j].size()) != st.carrier(p.free[j].sort))
      throw SortError("weight table of " + p.free[j].name + " must cover its carrier");
  R total(0);
  enumerate_solutions(
      st, p.formula, p.free,
      [&](const Cube& c) {
        if (p.mode == EvalMode::Multiplicative) {
          R prod(1);
          for (std::size_t j = 0; j < c.sets.size(); ++j)
            for (std::size_t x = 0; x < c.sets[j].size(); ++x) {
              if (c.sets[j][x] == 1) prod *= p.weights[j][x];
              else if (c.sets[j][x] < 0) prod *= R(1) + p.weights[j][x];
            }
          total += prod;
        } else {
          R known(0), loose(0);
          for (std::size_t j = 0; j < c.sets.size(); ++j)
            for (std::size_t x = 0; x < c.sets[j].size(); ++x) {
              if (c.sets[j][x] == 1) known += p.weights[j][x];
              else if (c.sets[j][x] < 0) loose += p.weights[j][x];
            }
          const int u = c.unknowns();
          R scale(1);
          for (int i = 0; i < u; ++i) scale *= R(2);
          total += scale * known;
          if (u > 0) {
            R half(1);
            for (int i = 1; i < u; ++i) half *= R(2);
            total += half * loose;
          }
        }
      },
      opt);
  return total;
}

}  // namespace triwidth::mso
