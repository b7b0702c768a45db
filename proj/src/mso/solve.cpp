#include "triwidth/mso/solve.hpp"

#include <algorithm>

namespace triwidth::mso {

int Cube::unknowns() const {
  int u = 0;
  for (const auto& s : sets) u += static_cast<int>(std::count(s.begin(), s.end(), static_cast<std::int8_t>(-1)));
  return u;
}

void require_set_variables(const std::vector<VarDecl>& free) {
  for (const auto& d : free)
    if (!d.sort.is_set()) throw SortError("free variable " + d.name + " must be a set variable");
}

namespace {

struct Enumerator {
  Evaluator& ev;
  const std::vector<VarDecl>& free;
  const std::function<void(const Cube&)>& emit;
  Cube cube;

  void sets_rec() {
    Evaluator::Result r = ev.run();
    if (r.v == Evaluator::kFalse) return;
    if (r.v == Evaluator::kTrue) {
      for (std::size_t s = 0; s < free.size(); ++s)
        if (free[s].sort.is_set()) cube.sets[s] = ev.set_state(static_cast<int>(s));
      emit(cube);
      return;
    }
    auto& state = ev.set_state(r.slot);
    state[r.elem] = 0;
    sets_rec();
    state[r.elem] = 1;
    sets_rec();
    state[r.elem] = -1;
  }

  void elements_rec(std::size_t s) {
    if (s == free.size()) return sets_rec();
    if (free[s].sort.is_set()) return elements_rec(s + 1);
    for (int x = 0; x < ev.carrier(static_cast<int>(s)); ++x) {
      ev.set_element(static_cast<int>(s), x);
      cube.elements[s] = x;
      elements_rec(s + 1);
    }
  }
};

}  // namespace

void enumerate_solutions(const Structure& st, const F& f, const std::vector<VarDecl>& free,
                         const std::function<void(const Cube&)>& emit, const EvalOptions& opt) {
  Evaluator ev(st, f, free, opt);
  Enumerator e{ev, free, emit, {}};
  e.cube.elements.assign(free.size(), -1);
  e.cube.sets.resize(free.size());
  e.elements_rec(0);
}

BigInt count_solutions(const Structure& st, const F& f, const std::vector<VarDecl>& free, const EvalOptions& opt) {
  BigInt total = 0;
  enumerate_solutions(
      st, f, free, [&](const Cube& c) { total += BigInt(1) << c.unknowns(); }, opt);
  return total;
}

ExtremumResult solve_extremum(const Structure& st, const ExtremumProblem& p, const EvalOptions& opt) {
  require_set_variables(p.free);
  if (p.coeffs.size() != p.free.size()) throw SortError("one objective coefficient per free set variable expected");
  ExtremumResult best;
  std::vector<std::int8_t> best_vec;
  enumerate_solutions(
      st, p.formula, p.free,
      [&](const Cube& c) {
        Rational value = 0;
        std::vector<std::int8_t> vec;
        for (std::size_t j = 0; j < c.sets.size(); ++j)
          for (std::int8_t s : c.sets[j]) {
            std::int8_t bit = s >= 0 ? s : (p.coeffs[j] < 0 ? 1 : 0);
            vec.push_back(bit);
            if (bit) value += p.coeffs[j];
          }
        if (!best.feasible || value < best.value || (value == best.value && vec < best_vec)) {
          best.feasible = true;
          best.value = value;
          best_vec = std::move(vec);
        }
      },
      opt);
  if (best.feasible) {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < p.free.size(); ++j) {
      auto& members = best.witness.sets[p.free[j].name];
      for (int x = 0; x < st.carrier(p.free[j].sort); ++x)
        if (best_vec[pos++]) members.push_back(x);
    }
  }
  return best;
}

}  // namespace triwidth::mso
