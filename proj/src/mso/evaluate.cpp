#include "triwidth/mso/evaluate.hpp"

#include <algorithm>

#include "triwidth/error.hpp"
#include "triwidth/mso/parser.hpp"

namespace triwidth::mso {

using Op = Formula::Op;

Evaluator::Evaluator(const Structure& st, const F& f, const std::vector<VarDecl>& free, const EvalOptions& opt)
    : st_(st), budget_(opt.budget) {
  check_sorts(f, st.signature(), free);
  std::map<std::string, std::vector<int>> scope;
  for (const auto& d : free) {
    int slot = static_cast<int>(slot_carrier_.size());
    slot_carrier_.push_back(st.carrier(d.sort));
    slot_is_set_.push_back(d.sort.is_set());
    scope[d.name].push_back(slot);
  }
  std::vector<int> free_slots;
  bool has_set = false;
  root_ = compile(f, scope, free_slots, has_set);
  elem_.assign(slot_carrier_.size(), 0);
  sets_.resize(slot_carrier_.size());
  for (std::size_t s = 0; s < slot_carrier_.size(); ++s)
    if (slot_is_set_[s]) sets_[s].assign(slot_carrier_[s], -1);
  memo_.resize(nodes_.size());
}

int Evaluator::compile(const F& f, std::map<std::string, std::vector<int>>& scope, std::vector<int>& free_slots,
                       bool& has_set) {
  Node node{f->op, {}};
  std::vector<int> my_free;
  auto use = [&](const std::string& v) {
    int slot = scope.at(v).back();
    my_free.push_back(slot);
    return slot;
  };
  if (f->is_quantifier()) {
    int slot = static_cast<int>(slot_carrier_.size());
    slot_carrier_.push_back(st_.carrier(f->sort));
    slot_is_set_.push_back(f->sort.is_set());
    node.slot = slot;
    node.set_binder = f->sort.is_set();
    scope[f->var].push_back(slot);
    std::vector<int> inner;
    bool inner_set = false;
    node.kids.push_back(compile(f->kids[0], scope, inner, inner_set));
    scope[f->var].pop_back();
    for (int s : inner)
      if (s != slot) my_free.push_back(s);
  } else {
    for (const auto& k : f->kids) {
      bool ks = false;
      node.kids.push_back(compile(k, scope, my_free, ks));
    }
    switch (f->op) {
      case Op::Eq:
      case Op::In:
      case Op::Inc:
      case Op::Adj:
      case Op::AdjC:
      case Op::Sub:
        node.slot = use(f->args[0]);
        node.slot2 = use(f->args[1]);
        break;
      case Op::Col: node.slot = use(f->args[0]); break;
      default: break;
    }
    node.index = f->index;
    if (f->op == Op::Sub) node.sub = &st_.sub_table(f->pi);
  }
  std::sort(my_free.begin(), my_free.end());
  my_free.erase(std::unique(my_free.begin(), my_free.end()), my_free.end());
  bool any_set = std::any_of(my_free.begin(), my_free.end(), [&](int s) { return slot_is_set_[s]; });
  if (f->is_quantifier() && !any_set && my_free.size() <= 4 &&
      std::all_of(my_free.begin(), my_free.end(), [&](int s) { return slot_carrier_[s] < 65536; })) {
    node.memo = true;
    node.memo_slots = my_free;
  }
  free_slots.insert(free_slots.end(), my_free.begin(), my_free.end());
  has_set = has_set || any_set;
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

Evaluator::Result Evaluator::run() { return eval(root_); }

Evaluator::Result Evaluator::eval(int n) {
  if (++steps_ > budget_) throw BudgetExceeded("evaluation budget of " + std::to_string(budget_) + " steps exceeded");
  const Node& node = nodes_[n];
  auto truth = [](bool b) { return Result{b ? kTrue : kFalse}; };
  switch (node.op) {
    case Op::True: return {kTrue};
    case Op::False: return {kFalse};
    case Op::Not: {
      Result r = eval(node.kids[0]);
      if (r.v != kUnknown) r.v = r.v == kTrue ? kFalse : kTrue;
      return r;
    }
    case Op::And:
    case Op::Or: {
      const std::int8_t stop = node.op == Op::And ? kFalse : kTrue;
      Result pending{static_cast<std::int8_t>(1 - stop)};
      for (int k : node.kids) {
        Result r = eval(k);
        if (r.v == stop) return r;
        if (r.v == kUnknown && pending.v != kUnknown) pending = r;
      }
      return pending;
    }
    case Op::Implies: {
      Result a = eval(node.kids[0]);
      if (a.v == kFalse) return {kTrue};
      Result b = eval(node.kids[1]);
      if (b.v == kTrue || a.v == kTrue) return b;
      return a;
    }
    case Op::Eq: return truth(elem_[node.slot] == elem_[node.slot2]);
    case Op::In: {
      int e = elem_[node.slot];
      std::int8_t s = sets_[node.slot2][e];
      if (s < 0) return {kUnknown, node.slot2, e};
      return truth(s == 1);
    }
    case Op::Inc: return truth(st_.inc(elem_[node.slot], elem_[node.slot2]));
    case Op::Adj: return truth(st_.adj(elem_[node.slot], elem_[node.slot2]));
    case Op::Col: return truth(st_.col(node.index, elem_[node.slot]));
    case Op::AdjC: return truth(st_.adjc(node.index, elem_[node.slot], elem_[node.slot2]));
    case Op::Sub: return truth((*node.sub)[elem_[node.slot2]] == elem_[node.slot]);
    case Op::Forall:
    case Op::Exists: break;
  }

  std::uint64_t key = 0;
  if (node.memo) {
    for (std::size_t i = 0; i < node.memo_slots.size(); ++i)
      key |= static_cast<std::uint64_t>(elem_[node.memo_slots[i]]) << (16 * i);
    if (auto it = memo_[n].find(key); it != memo_[n].end()) return {it->second};
  }
  Result out;
  if (node.set_binder) {
    auto& state = sets_[node.slot];
    state.assign(slot_carrier_[node.slot], -1);
    out = branch(node);
  } else {
    const std::int8_t stop = node.op == Op::Forall ? kFalse : kTrue;
    out = Result{static_cast<std::int8_t>(1 - stop)};
    const int saved = elem_[node.slot];
    for (int x = 0; x < slot_carrier_[node.slot]; ++x) {
      elem_[node.slot] = x;
      Result r = eval(node.kids[0]);
      if (r.v == stop) {
        out = r;
        break;
      }
      if (r.v == kUnknown && out.v != kUnknown) out = r;
    }
    elem_[node.slot] = saved;
  }
  if (node.memo) memo_[n].emplace(key, out.v);
  return out;
}

Evaluator::Result Evaluator::branch(const Node& node) {
  Result r = eval(node.kids[0]);
  if (r.v != kUnknown || r.slot != node.slot) return r;
  const std::int8_t stop = node.op == Op::Forall ? kFalse : kTrue;
  auto& state = sets_[node.slot];
  const int e = r.elem;
  state[e] = 1;
  Result in = branch(node);
  if (in.v == stop) {
    state[e] = -1;
    return in;
  }
  state[e] = 0;
  Result out = branch(node);
  state[e] = -1;
  if (out.v == stop) return out;
  if (in.v == kUnknown) return in;
  return out;
}

bool evaluate(const Structure& st, const F& f, const std::vector<VarDecl>& free, const Assignment& a,
              const EvalOptions& opt) {
  Evaluator ev(st, f, free, opt);
  for (std::size_t s = 0; s < free.size(); ++s) {
    const auto& d = free[s];
    if (d.sort.is_set()) {
      auto it = a.sets.find(d.name);
      if (it == a.sets.end()) throw SortError("no value for free set variable " + d.name);
      auto& state = ev.set_state(static_cast<int>(s));
      std::fill(state.begin(), state.end(), 0);
      for (int x : it->second) {
        if (x < 0 || x >= ev.carrier(static_cast<int>(s))) throw SortError("element out of range in " + d.name);
        state[x] = 1;
      }
    } else {
      auto it = a.elements.find(d.name);
      if (it == a.elements.end()) throw SortError("no value for free variable " + d.name);
      if (it->second < 0 || it->second >= ev.carrier(static_cast<int>(s)))
        throw SortError("element out of range for " + d.name);
      ev.set_element(static_cast<int>(s), it->second);
    }
  }
  Evaluator::Result r = ev.run();
  if (r.v == Evaluator::kUnknown) throw Error("internal: unresolved evaluation");
  return r.v == Evaluator::kTrue;
}

}  // namespace triwidth::mso
