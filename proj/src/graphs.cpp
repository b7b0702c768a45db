#include "triwidth/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "triwidth/error.hpp"

namespace triwidth {

SimpleGraph::SimpleGraph(int n_, std::vector<std::pair<int, int>> arcs_) : n(n_), arcs(std::move(arcs_)) {
  for (auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ValidationError("arc endpoint out of range");
    if (u == v) throw ValidationError("simple graphs have no loops");
    if (u > v) std::swap(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw ValidationError("simple graphs have no parallel arcs");
}

void EdgeColouredGraph::validate() const {
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& a : arcs) {
    if (a.u < 0 || a.v < 0 || a.u >= n || a.v >= n) throw ValidationError("arc endpoint out of range");
    if (a.u == a.v) throw ValidationError("loops are not allowed");
    if (a.colour < 1 || a.colour > k()) throw ValidationError("arc colour out of range");
    if (!seen.emplace(std::min(a.u, a.v), std::max(a.u, a.v), a.colour).second)
      throw ValidationError("parallel arcs must have distinct colours");
  }
}

std::vector<std::pair<int, int>> EdgeColouredGraph::skeleton_arcs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : arcs) out.emplace_back(std::min(a.u, a.v), std::max(a.u, a.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> EncodedGraph::clique_nodes() const {
  std::vector<int> out;
  for (const auto& c : clique) out.insert(out.end(), c.begin(), c.end());
  return out;
}

EncodedGraph encode_simple(const EdgeColouredGraph& g) {
  g.validate();
  EncodedGraph e;
  std::vector<std::pair<int, int>> arcs;
  int next = 0;
  for (int i = 1; i <= g.k(); ++i) {
    std::vector<int> members;
    for (int j = 1; j <= i + 2; ++j) {
      members.push_back(next++);
      e.origin.push_back(Origin{Origin::Kind::Clique, i, j});
    }
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) arcs.emplace_back(members[x], members[y]);
    e.clique.push_back(std::move(members));
  }
  for (int v = 0; v < g.n; ++v) {
    e.node_image.push_back(next++);
    e.origin.push_back(Origin{Origin::Kind::Node, v});
  }
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    int x = next++;
    e.arc_image.push_back(x);
    e.origin.push_back(Origin{Origin::Kind::Arc, static_cast<int>(a)});
    const ColouredArc& arc = g.arcs[a];
    arcs.emplace_back(x, e.node_image[arc.u]);
    arcs.emplace_back(x, e.node_image[arc.v]);
    arcs.emplace_back(x, e.clique[arc.colour - 1][0]);
  }
  e.graph = SimpleGraph(next, std::move(arcs));
  return e;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long encoded_size_formula(long long nV, long long nE, int k) { return nV + 4 * nE + binomial(k + 4, 3) - 4; }

EdgeColouredGraph parse_graph(std::string_view text) {
  EdgeColouredGraph g;
  std::map<std::string, int> node_id, colour_id;
  std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, a, b, c, extra;
    if (!(ls >> key)) continue;
    if (key == "node") {
      if (!(ls >> a) || (ls >> extra)) throw ParseError("expected 'node <id>'", lineno, 1);
      if (!node_id.emplace(a, g.n).second) throw ParseError("duplicate node '" + a + "'", lineno, 1);
      g.node_names.push_back(a);
      ++g.n;
    } else if (key == "colour" || key == "color") {
      if (!(ls >> a) || (ls >> extra)) throw ParseError("expected 'colour <name>'", lineno, 1);
      if (!colour_id.emplace(a, static_cast<int>(g.colours.size()) + 1).second)
        throw ParseError("duplicate colour '" + a + "'", lineno, 1);
      g.colours.push_back(a);
    } else if (key == "arc") {
      if (!(ls >> a >> b)) throw ParseError("expected 'arc <u> <v> [<colour>]'", lineno, 1);
      ls >> c;
      if (ls >> extra) throw ParseError("trailing tokens in arc record", lineno, 1);
      pending.emplace_back(a, b, c, lineno);
    } else {
      throw ParseError("unknown record '" + key + "'", lineno, 1);
    }
  }
  for (const auto& [a, b, c, ln] : pending) {
    auto u = node_id.find(a), v = node_id.find(b);
    if (u == node_id.end() || v == node_id.end()) throw ParseError("arc references an undeclared node", ln, 1);
    int colour = 0;
    if (c.empty()) {
      if (!g.colours.empty()) throw ParseError("arc without colour in a coloured graph", ln, 1);
    } else {
      auto it = colour_id.find(c);
      if (it == colour_id.end()) throw ParseError("undeclared colour '" + c + "'", ln, 1);
      colour = it->second;
    }
    g.arcs.push_back(ColouredArc{u->second, v->second, colour});
  }
  // Uncoloured input is a simple graph: arcs carry colour 0 and k() == 0.
  if (!g.colours.empty()) g.validate();
  else {
    std::vector<std::pair<int, int>> raw;
    for (const auto& x : g.arcs) raw.emplace_back(x.u, x.v);
    SimpleGraph check(g.n, raw);
  }
  return g;
}

std::string to_text(const EdgeColouredGraph& g) {
  std::ostringstream os;
  auto name = [&](int v) { return g.node_names.empty() ? std::to_string(v) : g.node_names[v]; };
  for (int v = 0; v < g.n; ++v) os << "node " << name(v) << "\n";
  for (const auto& c : g.colours) os << "colour " << c << "\n";
  for (const auto& a : g.arcs) {
    os << "arc " << name(a.u) << ' ' << name(a.v);
    if (a.colour > 0) os << ' ' << g.colours[a.colour - 1];
    os << "\n";
  }
  return os.str();
}

}  // namespace triwidth
