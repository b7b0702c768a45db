#include "triwidth/apps/morse.hpp"

#include <algorithm>
#include <functional>

#include "triwidth/error.hpp"

namespace triwidth::apps {

namespace {

std::string arc_text(const HasseDiagram& h, int a) {
  const auto& arc = h.graph.arcs[a];
  return "arc " + std::to_string(a) + " (" + std::to_string(arc.u) + "-" + std::to_string(arc.v) + " colour " +
         h.graph.colours[arc.colour - 1] + ")";
}

// Arcs are oriented up when matched and down otherwise; a directed cycle is an alternating one.
bool has_cycle(const HasseDiagram& h, const std::vector<char>& in_m, int level, std::string& witness) {
  const int nn = static_cast<int>(h.nodes.size());
  std::vector<std::vector<int>> out(nn);
  for (std::size_t a = 0; a < h.graph.arcs.size(); ++a) {
    const auto& arc = h.graph.arcs[a];
    if (h.nodes[arc.u].level != level || h.nodes[arc.v].level != level + 1) continue;
    if (in_m[a]) out[arc.u].push_back(arc.v);
    else out[arc.v].push_back(arc.u);
  }
  std::vector<int> state(nn, 0);  // 0 new, 1 on stack, 2 done
  for (int s = 0; s < nn; ++s) {
    if (state[s] || out[s].empty()) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      if (i == out[x].size()) {
        state[x] = 2;
        stack.pop_back();
        continue;
      }
      const int y = out[x][i++];
      if (state[y] == 1) {
        witness = "alternating cycle between levels " + std::to_string(level) + " and " + std::to_string(level + 1) +
                  " through node " + std::to_string(y);
        return true;
      }
      if (state[y] == 0) {
        state[y] = 1;
        stack.emplace_back(y, 0);
      }
    }
  }
  return false;
}

}  // namespace

MorseCheck morse_validate(const HasseDiagram& h, const std::vector<int>& matching) {
  const int na = static_cast<int>(h.graph.arcs.size());
  std::vector<char> in_m(na, 0), used(h.nodes.size(), 0);
  for (int a : matching) {
    if (a < 0 || a >= na) return {false, "range", "arc index " + std::to_string(a)};
    if (in_m[a]) return {false, "disjoint", arc_text(h, a) + " listed twice"};
    in_m[a] = 1;
    const auto& arc = h.graph.arcs[a];
    if (arc.v == h.empty_node() || arc.u == h.empty_node()) return {false, "empty", arc_text(h, a)};
    for (int x : {arc.u, arc.v}) {
      if (used[x]) return {false, "disjoint", arc_text(h, a) + " shares node " + std::to_string(x)};
      used[x] = 1;
    }
  }
  for (int i = 0; i < h.dim; ++i) {
    std::string w;
    if (has_cycle(h, in_m, i, w)) return {false, "cycle", w};
  }
  return {};
}

long long morse_critical(const HasseDiagram& h, std::size_t matching_size) {
  return static_cast<long long>(h.nodes.size()) - 1 - 2 * static_cast<long long>(matching_size);
}

namespace {

class MorseSearch {
 public:
  MorseSearch(const HasseDiagram& h, const MorseOptions& opt) : h_(h), opt_(opt) {
    for (std::size_t a = 0; a < h.graph.arcs.size(); ++a)
      if (h.graph.arcs[a].v != h.empty_node()) cand_.push_back(static_cast<int>(a));
    if (static_cast<int>(cand_.size()) > opt.max_arcs)
      throw BudgetExceeded("Hasse diagram has " + std::to_string(cand_.size()) + " arcs, above the cap of " +
                           std::to_string(opt.max_arcs));
    const int nn = static_cast<int>(h.nodes.size());
    down_.resize(nn);
    for (int a : cand_) down_[h.graph.arcs[a].v].push_back(a);
    in_m_.assign(h.graph.arcs.size(), 0);
    mate_arc_.assign(nn, -1);
    seen_.assign(nn, 0);
    free_nodes_ = nn - 1;
  }

  MorseResult run() {
    rec(0);
    MorseResult r;
    r.matching = best_;
    std::sort(r.matching.begin(), r.matching.end());
    r.c_min = morse_critical(h_, best_.size());
    r.nodes = nodes_;
    return r;
  }

 private:
  // Would matching arc a close a directed path from its upper end back to its lower end?
  bool closes_cycle(int a) {
    const auto& arc = h_.graph.arcs[a];
    ++stamp_;
    std::vector<int> stack{arc.v};
    seen_[arc.v] = stamp_;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int b : down_[x]) {
        if (b == a || in_m_[b]) continue;
        const int y = h_.graph.arcs[b].u;
        if (y == arc.u) return true;
        const int up = mate_arc_[y];
        if (up < 0 || h_.graph.arcs[up].u != y) continue;
        const int z = h_.graph.arcs[up].v;
        if (seen_[z] != stamp_) {
          seen_[z] = stamp_;
          stack.push_back(z);
        }
      }
    }
    return false;
  }

  int upper_bound(std::size_t p) const {
    int avail = 0;
    for (std::size_t q = p; q < cand_.size(); ++q) {
      const auto& arc = h_.graph.arcs[cand_[q]];
      if (mate_arc_[arc.u] < 0 && mate_arc_[arc.v] < 0) ++avail;
    }
    return std::min(avail, free_nodes_ / 2);
  }

  void rec(std::size_t p) {
    if (++nodes_ > opt_.budget) throw BudgetExceeded("Morse search exceeded " + std::to_string(opt_.budget) + " nodes");
    if (static_cast<int>(cur_.size()) > best_size_) {
      best_size_ = static_cast<int>(cur_.size());
      best_ = cur_;
    }
    if (p == cand_.size()) return;
    if (static_cast<int>(cur_.size()) + upper_bound(p) <= best_size_) return;
    const int a = cand_[p];
    const auto& arc = h_.graph.arcs[a];
    if (mate_arc_[arc.u] < 0 && mate_arc_[arc.v] < 0 && !closes_cycle(a)) {
      in_m_[a] = 1;
      mate_arc_[arc.u] = mate_arc_[arc.v] = a;
      free_nodes_ -= 2;
      cur_.push_back(a);
      rec(p + 1);
      cur_.pop_back();
      free_nodes_ += 2;
      mate_arc_[arc.u] = mate_arc_[arc.v] = -1;
      in_m_[a] = 0;
    }
    rec(p + 1);
  }

  const HasseDiagram& h_;
  const MorseOptions& opt_;
  std::vector<int> cand_;
  std::vector<std::vector<int>> down_;  // candidate arcs by upper node
  std::vector<char> in_m_;
  std::vector<int> mate_arc_;
  std::vector<int> seen_;
  int stamp_ = 0, free_nodes_ = 0, best_size_ = -1;
  std::vector<int> cur_, best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MorseResult morse_optimal(const HasseDiagram& h, const MorseOptions& opt) { return MorseSearch(h, opt).run(); }

}  // namespace triwidth::apps
