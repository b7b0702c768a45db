#include "triwidth/apps/families.hpp"

#include <algorithm>
#include <numeric>

#include "triwidth/error.hpp"

namespace triwidth::apps {

Triangulation layered_ring(int n) {
  if (n < 1) throw ValidationError("ring needs at least one tetrahedron");
  std::vector<Gluing> g;
  for (int k = 0; k < n; ++k) {
    const int next = (k + 1) % n;
    g.push_back({k, 0, next, 2, {2, 3, 0, 1}});
    g.push_back({k, 1, next, 3, {2, 3, 0, 1}});
  }
  return Triangulation(3, n, g);
}

TreeDecomposition layered_ring_decomposition(int n) {
  TreeDecomposition td;
  if (n <= 3) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    td.bags.push_back(all);
    return td;
  }
  for (int k = 1; k + 1 < n; ++k) {
    td.bags.push_back({0, k, k + 1});
    if (k > 1) td.links.emplace_back(k - 2, k - 1);
  }
  return td;
}

namespace {

Perm random_map(int d, int f1, int f2, std::mt19937_64& rng) {
  std::vector<int> rest;
  for (int v = 0; v <= d; ++v)
    if (v != f2) rest.push_back(v);
  std::shuffle(rest.begin(), rest.end(), rng);
  Perm p(d + 1);
  p[f1] = f2;
  for (int v = 0, j = 0; v <= d; ++v)
    if (v != f1) p[v] = rest[j++];
  return p;
}

Triangulation pair_slots(int d, int n, std::vector<int> slots, std::size_t pairs, std::mt19937_64& rng) {
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<Gluing> g;
  for (std::size_t i = 0; i < pairs; ++i) {
    const int a = slots[2 * i], b = slots[2 * i + 1];
    const int s1 = a / (d + 1), f1 = a % (d + 1), s2 = b / (d + 1), f2 = b % (d + 1);
    g.push_back({s1, f1, s2, f2, random_map(d, f1, f2, rng)});
  }
  return Triangulation(d, n, g);
}

}  // namespace

Triangulation random_triangulation(int d, int n, double glue, std::mt19937_64& rng) {
  std::vector<int> slots(static_cast<std::size_t>(n) * (d + 1));
  std::iota(slots.begin(), slots.end(), 0);
  std::binomial_distribution<std::size_t> count(slots.size() / 2, std::clamp(glue, 0.0, 1.0));
  return pair_slots(d, n, slots, count(rng), rng);
}

Triangulation random_closed(int d, int n, std::mt19937_64& rng) {
  const std::size_t total = static_cast<std::size_t>(n) * (d + 1);
  if (total % 2) throw ValidationError("a closed triangulation needs an even number of facets");
  std::vector<int> slots(total);
  std::iota(slots.begin(), slots.end(), 0);
  return pair_slots(d, n, slots, total / 2, rng);
}

EdgeColouredGraph random_coloured_graph(int n, int k, double density, std::mt19937_64& rng) {
  EdgeColouredGraph g;
  g.n = n;
  for (int c = 1; c <= k; ++c) g.colours.push_back("c" + std::to_string(c));
  std::bernoulli_distribution pick(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int c = 1; c <= k; ++c)
        if (pick(rng)) g.arcs.push_back({u, v, c});
  return g;
}

}  // namespace triwidth::apps
