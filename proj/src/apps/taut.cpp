#include "triwidth/apps/taut.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>

#include "triwidth/error.hpp"

namespace triwidth::apps {

std::vector<std::array<int, 6>> tet_edge_ids(const Skeleton& sk) {
  std::vector<std::array<int, 6>> out(sk.simplices());
  for (int s = 0; s < sk.simplices(); ++s)
    for (int k = 0; k < 6; ++k) out[s][k] = sk.face_of(1, s, (1u << kTetEdges[k][0]) | (1u << kTetEdges[k][1]));
  return out;
}

namespace {

void require_dim3(const Triangulation& t) {
  if (t.dim() != 3) throw DimensionError("taut angle structures need a 3-dimensional triangulation");
}

bool check_with(const std::vector<std::array<int, 6>>& edges, std::size_t nedges, const std::vector<int>& types,
                std::vector<int>& count) {
  count.assign(nedges, 0);
  for (std::size_t s = 0; s < edges.size(); ++s)
    for (int slot : kTautPiSlots[types[s] - 1]) ++count[edges[s][slot]];
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
}

}  // namespace

bool taut_check(const Skeleton& sk, const TautWitness& w) {
  if (sk.dim() != 3) throw DimensionError("taut angle structures need a 3-dimensional triangulation");
  if (static_cast<int>(w.size()) != sk.simplices()) return false;
  if (std::any_of(w.begin(), w.end(), [](int x) { return x < 1 || x > 3; })) return false;
  std::vector<int> count;
  return check_with(tet_edge_ids(sk), sk.faces(1).size(), w, count);
}

std::optional<TautWitness> taut_bruteforce(const Triangulation& t, const Skeleton& sk, int jobs) {
  require_dim3(t);
  const int n = t.size();
  if (n > 40) throw BudgetExceeded("brute force over 3^" + std::to_string(n) + " assignments refused");
  const auto edges = tet_edge_ids(sk);
  const std::size_t nedges = sk.faces(1).size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;

  // Contiguous blocks in lexicographic order; the least index found wins.
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::atomic<std::uint64_t> best{total};
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<int> types(n);
    std::uint64_t x = begin;
    for (int i = n - 1; i >= 0; --i) {
      types[i] = static_cast<int>(x % 3) + 1;
      x /= 3;
    }
    std::vector<int> count;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (idx >= best.load(std::memory_order_relaxed)) return;
      if (check_with(edges, nedges, types, count)) {
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
      for (int i = n - 1; i >= 0; --i) {
        if (types[i] < 3) {
          ++types[i];
          break;
        }
        types[i] = 1;
      }
    }
  };
  if (jobs == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t step = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t b = std::min(total, j * step), e = std::min(total, b + step);
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  if (best.load() == total) return std::nullopt;
  TautWitness w(n);
  std::uint64_t x = best.load();
  for (int i = n - 1; i >= 0; --i) {
    w[i] = static_cast<int>(x % 3) + 1;
    x /= 3;
  }
  return w;
}

namespace {

// Partial witness: types fixed when their tetrahedra were forgotten, plus merged branches.
struct Trace {
  std::vector<std::pair<int, int>> fixed;
  std::vector<std::shared_ptr<const Trace>> parts;
};
using TracePtr = std::shared_ptr<const Trace>;

// Key: one type (0..2) per bag tetrahedron, then the pi count contributed by
// already forgotten tetrahedra to each active edge. Counts above 2 are dropped.
using Table = std::map<std::vector<std::uint8_t>, TracePtr>;

struct Frame {
  std::vector<int> bag;    // sorted tetrahedra
  std::vector<int> edges;  // sorted edges touching them
};

class TautDp {
 public:
  TautDp(const Skeleton& sk) : edges_(tet_edge_ids(sk)) {}

  Frame frame(const std::vector<int>& bag) const {
    Frame f{bag, {}};
    for (int s : bag) f.edges.insert(f.edges.end(), edges_[s].begin(), edges_[s].end());
    std::sort(f.edges.begin(), f.edges.end());
    f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
    return f;
  }

  Table convert(const Table& in, const Frame& from, const Frame& to) const {
    const std::size_t nb = from.bag.size(), tb = to.bag.size();
    std::vector<int> edge_pos(from.edges.size(), -1);
    for (std::size_t i = 0; i < from.edges.size(); ++i) {
      auto it = std::lower_bound(to.edges.begin(), to.edges.end(), from.edges[i]);
      if (it != to.edges.end() && *it == from.edges[i]) edge_pos[i] = static_cast<int>(it - to.edges.begin());
    }
    std::vector<int> tet_pos(nb, -1), fresh;
    for (std::size_t i = 0; i < nb; ++i) {
      auto it = std::lower_bound(to.bag.begin(), to.bag.end(), from.bag[i]);
      if (it != to.bag.end() && *it == from.bag[i]) tet_pos[i] = static_cast<int>(it - to.bag.begin());
    }
    for (std::size_t i = 0; i < tb; ++i)
      if (!std::binary_search(from.bag.begin(), from.bag.end(), to.bag[i])) fresh.push_back(static_cast<int>(i));

    Table out;
    std::vector<int> count(from.edges.size());
    for (const auto& [key, trace] : in) {
      for (std::size_t i = 0; i < from.edges.size(); ++i) count[i] = key[nb + i];
      bool alive = true;
      auto forgotten = std::make_shared<Trace>();
      for (std::size_t i = 0; i < nb && alive; ++i) {
        if (tet_pos[i] >= 0) continue;
        forgotten->fixed.emplace_back(from.bag[i], key[i] + 1);
        for (int slot : kTautPiSlots[key[i]]) {
          const int e = edges_[from.bag[i]][slot];
          const auto at = std::lower_bound(from.edges.begin(), from.edges.end(), e) - from.edges.begin();
          if (++count[at] > 2) alive = false;
        }
      }
      if (!alive) continue;
      std::vector<std::uint8_t> next(tb + to.edges.size(), 0);
      for (std::size_t i = 0; i < from.edges.size() && alive; ++i) {
        if (edge_pos[i] >= 0) next[tb + edge_pos[i]] = static_cast<std::uint8_t>(count[i]);
        else if (count[i] != 2) alive = false;  // every tetrahedron on this edge is now forgotten
      }
      if (!alive) continue;
      for (std::size_t i = 0; i < nb; ++i)
        if (tet_pos[i] >= 0) next[tet_pos[i]] = key[i];
      TracePtr t = trace;
      if (!forgotten->fixed.empty()) {
        forgotten->parts.push_back(trace);
        t = forgotten;
      }
      // All type choices for tetrahedra new to this bag.
      std::vector<std::uint8_t> choice(fresh.size(), 0);
      while (true) {
        for (std::size_t j = 0; j < fresh.size(); ++j) next[fresh[j]] = choice[j];
        out.emplace(next, t);
        std::size_t j = 0;
        while (j < choice.size() && choice[j] == 2) choice[j++] = 0;
        if (j == choice.size()) break;
        ++choice[j];
      }
    }
    return out;
  }

  static Table join(const Table& a, const Table& b, std::size_t nb) {
    std::map<std::vector<std::uint8_t>, std::vector<Table::const_iterator>> by_types;
    for (auto it = b.begin(); it != b.end(); ++it) by_types[{it->first.begin(), it->first.begin() + nb}].push_back(it);
    Table out;
    for (const auto& [key, trace] : a) {
      auto g = by_types.find({key.begin(), key.begin() + nb});
      if (g == by_types.end()) continue;
      for (auto it : g->second) {
        std::vector<std::uint8_t> next = key;
        bool alive = true;
        for (std::size_t i = nb; i < key.size() && alive; ++i)
          if ((next[i] = key[i] + it->first[i]) > 2) alive = false;
        if (!alive) continue;
        if (out.count(next)) continue;
        auto t = std::make_shared<Trace>();
        t->parts = {trace, it->second};
        out.emplace(std::move(next), t);
      }
    }
    return out;
  }

 private:
  std::vector<std::array<int, 6>> edges_;
};

}  // namespace

std::optional<TautWitness> taut_dp(const Triangulation& t, const Skeleton& sk, const TreeDecomposition& td) {
  require_dim3(t);
  const MultiGraph dual = dual_graph(t);
  if (auto chk = validate_decomposition(dual.n, dual.arcs, td); !chk.ok)
    throw ValidationError("decomposition invalid (" + chk.condition + "): " + chk.witness);
  if (t.size() == 0) return TautWitness{};

  TautDp dp(sk);
  const auto rooted = root_decomposition(td);
  const Frame empty;
  const Table start{{{}, nullptr}};
  std::vector<Table> tables(td.bags.size());
  for (int node : rooted.post_order) {
    const Frame here = dp.frame(td.bags[node]);
    Table acc;
    bool first = true;
    for (int c : rooted.children[node]) {
      Table conv = dp.convert(tables[c], dp.frame(td.bags[c]), here);
      Table().swap(tables[c]);
      acc = first ? std::move(conv) : TautDp::join(acc, conv, here.bag.size());
      first = false;
    }
    if (first) acc = dp.convert(start, empty, here);
    tables[node] = std::move(acc);
  }
  const Table final = dp.convert(tables[rooted.root], dp.frame(td.bags[rooted.root]), empty);
  if (final.empty()) return std::nullopt;

  TautWitness w(t.size(), 0);
  std::vector<const Trace*> stack{final.begin()->second.get()};
  while (!stack.empty()) {
    const Trace* tr = stack.back();
    stack.pop_back();
    if (!tr) continue;
    for (auto [s, type] : tr->fixed) w[s] = type;
    for (const auto& p : tr->parts) stack.push_back(p.get());
  }
  return w;
}

}  // namespace triwidth::apps
