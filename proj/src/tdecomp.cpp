#include "triwidth/tdecomp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "triwidth/error.hpp"
#include "triwidth/hasse.hpp"

namespace triwidth {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

namespace {

DecompositionCheck fail(std::string condition, std::string witness) {
  return DecompositionCheck{false, std::move(condition), std::move(witness)};
}

std::vector<std::set<int>> adjacency_sets(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : arcs) {
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

}  // namespace

DecompositionCheck validate_decomposition(int n, const std::vector<std::pair<int, int>>& arcs,
                                          const TreeDecomposition& td) {
  const int m = static_cast<int>(td.bags.size());
  if (m == 0) return n == 0 ? DecompositionCheck{} : fail("tree", "no bags");
  if (static_cast<int>(td.links.size()) != m - 1)
    return fail("tree", std::to_string(td.links.size()) + " links for " + std::to_string(m) + " bags");
  for (auto [a, b] : td.links)
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      return fail("tree", "bad link " + std::to_string(a) + "-" + std::to_string(b));
  const auto adj = td.adjacency();
  {
    std::vector<bool> seen(m, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[x])
        if (!seen[y]) seen[y] = true, stack.push_back(y);
    }
    if (count != m) return fail("tree", "bag " + std::to_string(std::find(seen.begin(), seen.end(), false) - seen.begin()) + " unreachable");
  }
  std::vector<std::vector<int>> holders(n);
  for (int b = 0; b < m; ++b)
    for (int v : td.bags[b]) {
      if (v < 0 || v >= n) return fail("range", "bag " + std::to_string(b) + " holds node " + std::to_string(v));
      holders[v].push_back(b);
    }
  for (int v = 0; v < n; ++v)
    if (holders[v].empty()) return fail("coverage", "node " + std::to_string(v));
  for (auto [u, v] : arcs) {
    if (u == v) continue;
    bool shared = false;
    for (int b : holders[u])
      if (std::binary_search(holders[v].begin(), holders[v].end(), b)) {
        shared = true;
        break;
      }
    if (!shared) return fail("arc", std::to_string(u) + "-" + std::to_string(v));
  }
  std::vector<int> mark(m, -1);
  for (int v = 0; v < n; ++v) {
    for (int b : holders[v]) mark[b] = v;
    std::vector<int> stack{holders[v][0]};
    mark[holders[v][0]] = -2 - v;
    std::size_t count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[x])
        if (mark[y] == v) mark[y] = -2 - v, stack.push_back(y);
    }
    if (count != holders[v].size()) return fail("connectivity", "node " + std::to_string(v));
  }
  return {};
}

TreeDecomposition from_elimination_order(int n, const std::vector<std::pair<int, int>>& arcs,
                                         const std::vector<int>& order) {
  auto adj = adjacency_sets(n, arcs);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition td;
  std::vector<int> parent_vertex(n, -1);
  for (int v : order) {
    std::vector<int> higher;
    for (int w : adj[v])
      if (pos[w] > pos[v]) higher.push_back(w);
    for (std::size_t a = 0; a < higher.size(); ++a)
      for (std::size_t b = a + 1; b < higher.size(); ++b) {
        adj[higher[a]].insert(higher[b]);
        adj[higher[b]].insert(higher[a]);
      }
    std::vector<int> bag = higher;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (!higher.empty())
      parent_vertex[v] = *std::min_element(higher.begin(), higher.end(), [&](int a, int b) { return pos[a] < pos[b]; });
  }
  int last_root = -1;
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (parent_vertex[v] >= 0) {
      td.links.emplace_back(i, pos[parent_vertex[v]]);
    } else if (last_root < 0) {
      last_root = i;
    } else {
      td.links.emplace_back(i, last_root);
    }
  }
  return td;
}

namespace {

std::vector<int> min_fill_order(int n, const std::vector<std::pair<int, int>>& arcs) {
  auto adj = adjacency_sets(n, arcs);
  std::vector<bool> gone(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_fill = 0;
    std::size_t best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (best < 0 || fill < best_fill || (fill == best_fill && adj[v].size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = adj[v].size();
      }
    }
    order.push_back(best);
    gone[best] = true;
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (int x : nb) adj[x].erase(best);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    adj[best].clear();
  }
  return order;
}

// Vertices outside S ∪ {v} reachable from v through S.
int q_size(const std::vector<unsigned>& nbr, unsigned s, int v) {
  unsigned seen = 1u << v, frontier = 1u << v, out = 0;
  while (frontier) {
    int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    unsigned next = nbr[x] & ~seen;
    seen |= next;
    out |= next & ~s;
    frontier |= next & s;
  }
  return std::popcount(out);
}

std::vector<int> exact_order(int n, const std::vector<std::pair<int, int>>& arcs, int* width) {
  if (n > kExactCap) throw ValidationError("exact treewidth refused above " + std::to_string(kExactCap) + " nodes");
  std::vector<unsigned> nbr(n, 0);
  for (auto [u, v] : arcs)
    if (u != v) nbr[u] |= 1u << v, nbr[v] |= 1u << u;
  const unsigned full = n == 0 ? 0u : (1u << n) - 1;
  std::vector<int> tw(full + 1, std::numeric_limits<int>::max());
  std::vector<signed char> choice(full + 1, -1);
  tw[0] = -1;
  for (unsigned s = 1; s <= full; ++s)
    for (unsigned rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      unsigned prev = s & ~(1u << v);
      int cand = std::max(tw[prev], q_size(nbr, prev, v));
      if (cand < tw[s]) tw[s] = cand, choice[s] = static_cast<signed char>(v);
    }
  std::vector<int> order(n);
  unsigned s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[s];
    s &= ~(1u << choice[s]);
  }
  if (width) *width = std::max(tw[full], 0);
  return order;
}

}  // namespace

int exact_treewidth(int n, const std::vector<std::pair<int, int>>& arcs) {
  int w = 0;
  exact_order(n, arcs, &w);
  return w;
}

TreeDecomposition decompose(int n, const std::vector<std::pair<int, int>>& arcs, DecomposeMode mode) {
  if (n <= 0) throw ValidationError("cannot decompose an empty graph");
  auto order = mode == DecomposeMode::Exact ? exact_order(n, arcs, nullptr) : min_fill_order(n, arcs);
  return from_elimination_order(n, arcs, order);
}

TreeDecomposition lift_to_encoded(const TreeDecomposition& td, const EdgeColouredGraph& g, const EncodedGraph& enc) {
  if (auto check = validate_decomposition(g.n, g.skeleton_arcs(), td); !check.ok)
    throw ValidationError("decomposition invalid (" + check.condition + ": " + check.witness + ")");
  const auto cliques = enc.clique_nodes();
  TreeDecomposition out;
  for (const auto& bag : td.bags) {
    std::vector<int> b = cliques;
    for (int v : bag) b.push_back(enc.node_image[v]);
    std::sort(b.begin(), b.end());
    out.bags.push_back(std::move(b));
  }
  out.links = td.links;
  for (std::size_t e = 0; e < g.arcs.size(); ++e) {
    const auto& arc = g.arcs[e];
    int host = -1;
    for (std::size_t b = 0; b < td.bags.size() && host < 0; ++b)
      if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), arc.u) &&
          std::binary_search(td.bags[b].begin(), td.bags[b].end(), arc.v))
        host = static_cast<int>(b);
    std::vector<int> leaf = cliques;
    leaf.push_back(enc.arc_image[e]);
    leaf.push_back(enc.node_image[arc.u]);
    leaf.push_back(enc.node_image[arc.v]);
    std::sort(leaf.begin(), leaf.end());
    out.links.emplace_back(host, static_cast<int>(out.bags.size()));
    out.bags.push_back(std::move(leaf));
  }
  return out;
}

TreeDecomposition lift_to_hasse(const TreeDecomposition& td, const Triangulation& t, const Skeleton& sk,
                                const HasseDiagram& h) {
  const MultiGraph dual = dual_graph(t);
  if (auto check = validate_decomposition(dual.n, dual.arcs, td); !check.ok)
    throw ValidationError("decomposition invalid (" + check.condition + ": " + check.witness + ")");
  const int d = t.dim();
  TreeDecomposition out;
  out.links = td.links;
  for (const auto& bag : td.bags) {
    std::set<int> b{h.empty_node()};
    for (int s : bag)
      for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
        int i = std::popcount(mask) - 1;
        b.insert(h.node(i, sk.face_of(i, s, mask)));
      }
    out.bags.emplace_back(b.begin(), b.end());
  }
  return out;
}

RootedDecomposition root_decomposition(const TreeDecomposition& td, int root) {
  const int m = static_cast<int>(td.bags.size());
  RootedDecomposition r;
  r.root = root;
  r.parent.assign(m, -1);
  r.children.resize(m);
  if (m == 0) return r;
  const auto adj = td.adjacency();
  std::vector<int> order{root};
  std::vector<char> seen(m, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : adj[order[i]])
      if (!seen[w]) {
        seen[w] = 1;
        r.parent[w] = order[i];
        r.children[order[i]].push_back(w);
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != m) throw ValidationError("decomposition tree is not connected");
  r.post_order.assign(order.rbegin(), order.rend());
  return r;
}

TreeDecomposition parse_decomposition(std::string_view text) {
  TreeDecomposition td;
  std::map<long long, int> id;
  std::vector<std::tuple<long long, long long, std::size_t>> links;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "bag") {
      long long b;
      std::string colon;
      if (!(ls >> b >> colon) || colon != ":") throw ParseError("expected 'bag <id> : <nodes...>'", lineno, 1);
      if (!id.emplace(b, static_cast<int>(td.bags.size())).second) throw ParseError("duplicate bag id", lineno, 1);
      std::vector<int> nodes;
      long long v;
      while (ls >> v) nodes.push_back(static_cast<int>(v));
      if (!ls.eof()) throw ParseError("non-integer node in bag", lineno, 1);
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      td.bags.push_back(std::move(nodes));
    } else if (key == "link") {
      long long a, b;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("expected 'link <id1> <id2>'", lineno, 1);
      links.emplace_back(a, b, lineno);
    } else {
      throw ParseError("unknown record '" + key + "'", lineno, 1);
    }
  }
  for (auto [a, b, ln] : links) {
    auto x = id.find(a), y = id.find(b);
    if (x == id.end() || y == id.end()) throw ParseError("link references an unknown bag", ln, 1);
    td.links.emplace_back(x->second, y->second);
  }
  return td;
}

std::string to_text(const TreeDecomposition& td) {
  std::ostringstream os;
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    os << "bag " << b << " :";
    for (int v : td.bags[b]) os << ' ' << v;
    os << "\n";
  }
  for (auto [a, b] : td.links) os << "link " << a << ' ' << b << "\n";
  return os.str();
}

}  // namespace triwidth
