#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "triwidth/apps/families.hpp"
#include "triwidth/error.hpp"
#include "triwidth/hasse.hpp"

using namespace tsupport;

namespace {

// Treewidth as the least over all elimination orderings of the largest higher neighbourhood.
int treewidth_by_orderings(const SimpleGraph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  int best = g.n - 1;
  do {
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.arcs) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(g.n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (int w = 0; w < g.n; ++w)
        if (!gone[w] && adj[v][w]) nb.push_back(w);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb)
        for (int b : nb)
          if (a != b) adj[a][b] = 1;
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) arcs.emplace_back(u, v);
  return SimpleGraph(n, arcs);
}

TreeDecomposition one_bag(int n) {
  TreeDecomposition td;
  td.bags.emplace_back(n);
  std::iota(td.bags[0].begin(), td.bags[0].end(), 0);
  return td;
}

TreeDecomposition chain7_bags() {
  return parse_decomposition("bag 1 : 0 1 2\nbag 2 : 1 2 3\nbag 3 : 2 3 4\nbag 4 : 4 5 6\n"
                             "link 1 2\nlink 2 3\nlink 3 4\n");
}

bool bags_connected(const TreeDecomposition& td, int x) {
  std::vector<int> holders;
  for (std::size_t b = 0; b < td.bags.size(); ++b)
    if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), x)) holders.push_back(static_cast<int>(b));
  if (holders.empty()) return false;
  const auto adj = td.adjacency();
  std::vector<char> seen(td.bags.size(), 0);
  std::vector<int> stack{holders[0]};
  seen[holders[0]] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    ++count;
    for (int c : adj[b])
      if (!seen[c] && std::binary_search(td.bags[c].begin(), td.bags[c].end(), x)) seen[c] = 1, stack.push_back(c);
  }
  return count == holders.size();
}

}  // namespace

TEST_CASE("validator on the seven-node example") {
  EdgeColouredGraph g = parse_graph(read_file(data_path("chain7.graph")));
  auto arcs = g.skeleton_arcs();
  TreeDecomposition td = chain7_bags();
  CHECK(validate_decomposition(7, arcs, td).ok);
  CHECK(td.width() == 2);
  CHECK(validate_decomposition(7, arcs, one_bag(7)).ok);
  CHECK(one_bag(7).width() == 6);
  CHECK(exact_treewidth(7, arcs) == 2);
}

TEST_CASE("validator names the violated condition") {
  EdgeColouredGraph g = parse_graph(read_file(data_path("chain7.graph")));
  auto arcs = g.skeleton_arcs();
  TreeDecomposition td = chain7_bags();
  td.bags[3] = {4, 5};  // f and g no longer share a bag; g is uncovered
  auto c = validate_decomposition(7, arcs, td);
  CHECK_FALSE(c.ok);
  CHECK(c.condition == "coverage");

  td = chain7_bags();
  td.bags[3] = {4, 5, 6};
  td.bags[2] = {2, 4};  // drops node 3 from the bag shared with 4
  c = validate_decomposition(7, arcs, td);
  CHECK_FALSE(c.ok);
  CHECK(c.condition == "arc");
  CHECK(c.witness == "3-4");

  td = chain7_bags();
  td.bags[3] = {1, 4, 5, 6};
  c = validate_decomposition(7, arcs, td);
  CHECK(c.condition == "connectivity");

  td = chain7_bags();
  td.links.pop_back();
  CHECK(validate_decomposition(7, arcs, td).condition == "tree");
  td = chain7_bags();
  td.bags[0].push_back(9);
  CHECK(validate_decomposition(7, arcs, td).condition == "range");
}

TEST_CASE("loops need coverage only, parallel arcs collapse") {
  TreeDecomposition td = parse_decomposition("bag 0 : 0\nbag 1 : 1\nlink 0 1\n");
  CHECK(validate_decomposition(2, {{0, 0}, {1, 1}}, td).ok);
  CHECK_FALSE(validate_decomposition(2, {{0, 1}, {0, 1}}, td).ok);
  CHECK(validate_decomposition(2, {{0, 1}, {0, 1}}, one_bag(2)).ok);
}

TEST_CASE("trees have width one, complete graphs n-1") {
  for (auto mode : {DecomposeMode::Heuristic, DecomposeMode::Exact}) {
    SimpleGraph p = path_graph(6);
    CHECK(decompose(p.n, p.arcs, mode).width() == 1);
    SimpleGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(decompose(star.n, star.arcs, mode).width() == 1);
  }
  SimpleGraph k5 = complete_graph(5);
  TreeDecomposition td = decompose(5, k5.arcs, DecomposeMode::Exact);
  CHECK(td.width() == 4);
  CHECK(exact_treewidth(5, k5.arcs) == 4);
  CHECK(exact_treewidth(6, cycle_graph(6).arcs) == 2);
}

TEST_CASE("exact mode refuses large graphs") {
  SimpleGraph p = path_graph(kExactCap + 1);
  CHECK_THROWS_AS(decompose(p.n, p.arcs, DecomposeMode::Exact), ValidationError);
  CHECK_NOTHROW(decompose(p.n, p.arcs, DecomposeMode::Heuristic));
  CHECK_THROWS_AS(decompose(0, {}, DecomposeMode::Heuristic), ValidationError);
}

TEST_CASE("exact width matches an ordering oracle; heuristic is valid and no better") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    SimpleGraph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    TreeDecomposition h = decompose(n, g.arcs, DecomposeMode::Heuristic);
    TreeDecomposition e = decompose(n, g.arcs, DecomposeMode::Exact);
    CHECK(validate_decomposition(n, g.arcs, h).ok);
    CHECK(validate_decomposition(n, g.arcs, e).ok);
    CHECK(h.width() >= e.width());
    if (n <= 7) CHECK(e.width() == treewidth_by_orderings(g));
  }
}

TEST_CASE("lift to the encoding: three-node bag with two colours") {
  EdgeColouredGraph g;
  g.n = 3;
  g.colours = {"c1", "c2"};
  g.arcs = {{0, 1, 1}, {1, 2, 2}, {0, 2, 1}};
  EncodedGraph e = encode_simple(g);
  TreeDecomposition td = one_bag(3);
  TreeDecomposition lifted = lift_to_encoded(td, g, e);
  CHECK(lifted.bags[0].size() == 10);
  CHECK(lifted.bags.size() == 1 + g.arcs.size());
  // Each arc leaf holds the arc node, its endpoint images and every clique node.
  for (std::size_t b = 1; b < lifted.bags.size(); ++b) CHECK(lifted.bags[b].size() == 10);
  CHECK(validate_decomposition(e.graph.n, e.graph.arcs, lifted).ok);
}

TEST_CASE("lift to the encoding: arcless, one colour") {
  EdgeColouredGraph g;
  g.n = 4;
  g.colours = {"c"};
  TreeDecomposition td = parse_decomposition("bag 0 : 0 1\nbag 1 : 2\nbag 2 : 3\nlink 0 1\nlink 1 2\n");
  EncodedGraph e = encode_simple(g);
  TreeDecomposition lifted = lift_to_encoded(td, g, e);
  CHECK(lifted.width() == td.width() + 3);
  CHECK(validate_decomposition(e.graph.n, e.graph.arcs, lifted).ok);
}

TEST_CASE("lift to the encoding rejects invalid input decompositions") {
  EdgeColouredGraph g = parse_graph(read_file(data_path("coloured.graph")));
  TreeDecomposition td = parse_decomposition("bag 0 : 0 1\nbag 1 : 2\nlink 0 1\n");
  CHECK_THROWS_AS(lift_to_encoded(td, g, encode_simple(g)), ValidationError);
}

TEST_CASE("lifted decompositions of random coloured graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    EdgeColouredGraph g = apps::random_coloured_graph(1 + static_cast<int>(rng() % 10), k, 0.35, rng);
    auto sk = g.skeleton_arcs();
    TreeDecomposition td = decompose(g.n, sk, trial % 2 ? DecomposeMode::Exact : DecomposeMode::Heuristic);
    EncodedGraph e = encode_simple(g);
    TreeDecomposition lifted = lift_to_encoded(td, g, e);
    CHECK(validate_decomposition(e.graph.n, e.graph.arcs, lifted).ok);
    CHECK(lifted.width() <= td.width() + binomial(k + 3, 2) - 1);
  }
}

TEST_CASE("lift to the Hasse diagram on the fixtures") {
  for (auto [name, nodes] : {std::pair{"klein", 7}, std::pair{"solid_torus", 9}}) {
    Triangulation t = fixture(name);
    Skeleton sk(t);
    HasseDiagram h = build_hasse(t, sk);
    TreeDecomposition td = one_bag(t.size());
    TreeDecomposition lifted = lift_to_hasse(td, t, sk, h);
    REQUIRE(lifted.bags.size() == 1);
    CHECK(static_cast<int>(lifted.bags[0].size()) == nodes);
    CHECK(lifted.width() == nodes - 1);
    CHECK(lifted.width() <= ((1 << (t.dim() + 1)) - 1) * (td.width() + 1));
    CHECK(validate_decomposition(h.graph.n, h.graph.skeleton_arcs(), lifted).ok);
  }
}

TEST_CASE("lifted Hasse decompositions of random triangulations") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 2;
    Triangulation t = apps::random_triangulation(d, 1 + static_cast<int>(rng() % 6), 0.7, rng);
    Skeleton sk(t);
    HasseDiagram h = build_hasse(t, sk);
    MultiGraph dual = dual_graph(t);
    TreeDecomposition td = decompose(dual.n, dual.arcs, DecomposeMode::Heuristic);
    TreeDecomposition lifted = lift_to_hasse(td, t, sk, h);
    CHECK(validate_decomposition(h.graph.n, h.graph.skeleton_arcs(), lifted).ok);
    CHECK(lifted.width() <= ((1 << (d + 1)) - 1) * (td.width() + 1));
    CHECK(lifted.links == td.links);
    for (int x = 0; x < h.graph.n; ++x) CHECK(bags_connected(lifted, x));
  }
}

TEST_CASE("rooting") {
  TreeDecomposition td = chain7_bags();
  RootedDecomposition r = root_decomposition(td, 2);
  CHECK(r.root == 2);
  CHECK(r.parent[2] == -1);
  CHECK(r.post_order.back() == 2);
  CHECK(r.post_order.size() == 4);
  std::vector<int> pos(4);
  for (int i = 0; i < 4; ++i) pos[r.post_order[i]] = i;
  for (int b = 0; b < 4; ++b)
    for (int c : r.children[b]) CHECK(pos[c] < pos[b]);
  td.links.pop_back();
  CHECK_THROWS_AS(root_decomposition(td), ValidationError);
}

TEST_CASE("decomposition text format") {
  TreeDecomposition td = chain7_bags();
  TreeDecomposition back = parse_decomposition(to_text(td));
  CHECK(back.bags == td.bags);
  CHECK(back.links == td.links);
  CHECK_THROWS_AS(parse_decomposition("bag 0 : 1\nlink 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("bag 0 : x\n"), ParseError);
}
