#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "triwidth/mso/formula.hpp"
#include "triwidth/mso/structure.hpp"

namespace triwidth::mso {

struct Assignment {
  std::map<std::string, int> elements;
  std::map<std::string, std::vector<int>> sets;
};

struct EvalOptions {
  std::uint64_t budget = 4'000'000'000ULL;  // node visits
};

bool evaluate(const Structure& st, const F& f, const std::vector<VarDecl>& free = {}, const Assignment& a = {},
              const EvalOptions& opt = {});

// Kleene evaluation over partial set assignments. Set quantifiers branch only on
// elements the body actually queries; an unknown result names one pending element.
class Evaluator {
 public:
  enum : std::int8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };
  struct Result {
    std::int8_t v;
    int slot = -1, elem = -1;
  };

  Evaluator(const Structure& st, const F& f, const std::vector<VarDecl>& free, const EvalOptions& opt = {});

  // Free variables occupy slots 0..free.size()-1 in declaration order.
  void set_element(int slot, int value) { elem_[slot] = value; }
  std::vector<std::int8_t>& set_state(int slot) { return sets_[slot]; }  // -1 unknown, 0 out, 1 in
  int carrier(int slot) const { return slot_carrier_[slot]; }
  Result run();
  std::uint64_t steps() const { return steps_; }

 private:
  struct Node {
    Formula::Op op;
    std::vector<int> kids;
    int slot = -1;  // bound slot, or first argument slot
    int slot2 = -1;
    int index = 0;
    const std::vector<int>* sub = nullptr;
    bool set_binder = false;
    bool memo = false;
    std::vector<int> memo_slots;
  };

  int compile(const F& f, std::map<std::string, std::vector<int>>& scope, std::vector<int>& free_slots,
              bool& has_set);
  Result eval(int n);
  Result branch(const Node& node);

  const Structure& st_;
  std::vector<Node> nodes_;
  std::vector<int> elem_;
  std::vector<std::vector<std::int8_t>> sets_;
  std::vector<int> slot_carrier_;
  std::vector<bool> slot_is_set_;
  std::vector<std::unordered_map<std::uint64_t, std::int8_t>> memo_;
  int root_ = -1;
  std::uint64_t steps_ = 0, budget_;
};

}  // namespace triwidth::mso
