#include "triwidth/hasse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace triwidth {

std::vector<std::string> hasse_colours(int d) {
  std::vector<std::string> out{"-"};
  for (int len = 1; len <= d; ++len) {
    std::string digits;
    for (int x = 0; x <= len; ++x) digits += static_cast<char>('0' + x);
    // Every length-len arrangement of {0..len}, in lexicographic order.
    std::set<std::string> seqs;
    do seqs.insert(digits.substr(0, len));
    while (std::next_permutation(digits.begin(), digits.end()));
    out.insert(out.end(), seqs.begin(), seqs.end());
  }
  return out;
}

int hasse_colour_index(int d, const std::string& colour) {
  auto all = hasse_colours(d);
  auto it = std::find(all.begin(), all.end(), colour);
  return it == all.end() ? 0 : static_cast<int>(it - all.begin()) + 1;
}

long long hasse_size_bound(int d, long long n) { return (1LL << d) * (d + 3) * n; }

HasseDiagram build_hasse(const Triangulation& t, const Skeleton& sk) {
  HasseDiagram h;
  const int d = t.dim();
  h.dim = d;
  h.graph.colours = hasse_colours(d);
  std::map<std::string, int> colour_index;
  for (std::size_t c = 0; c < h.graph.colours.size(); ++c) colour_index[h.graph.colours[c]] = static_cast<int>(c) + 1;

  for (int i = 0; i <= d; ++i) {
    h.offset.push_back(static_cast<int>(h.nodes.size()));
    for (const Face& f : sk.faces(i)) h.nodes.push_back({i, f.id});
  }
  h.nodes.push_back({HasseDiagram::kEmptyLevel, 0});
  h.graph.n = static_cast<int>(h.nodes.size());

  // (lower node, upper node, colour) triples, deduplicated.
  std::set<std::tuple<int, int, int>> arcs;
  for (int j = 1; j <= d; ++j) {
    const int i = j - 1;
    for (const Face& g : sk.faces(j))
      for (const Instance& inst : g.instances)
        for (int omit = 0; omit <= j; ++omit) {
          std::vector<int> verts;
          for (int x = 0; x <= j; ++x)
            if (x != omit) verts.push_back(inst.emb[x]);
          int f = sk.face_of(i, inst.simplex, mask_of(verts));
          for (const Instance& fi : sk.face(i, f).instances) {
            if (fi.simplex != inst.simplex || mask_of(fi.emb) != mask_of(verts)) continue;
            std::string pi;
            for (int v : fi.emb) {
              int pos = static_cast<int>(std::find(inst.emb.begin(), inst.emb.end(), v) - inst.emb.begin());
              pi += static_cast<char>('0' + pos);
            }
            arcs.emplace(h.node(i, f), h.node(j, g.id), colour_index.at(pi));
          }
        }
  }
  for (const auto& [u, v, c] : arcs) h.graph.arcs.push_back(ColouredArc{u, v, c});
  for (const Face& v : sk.faces(0)) h.graph.arcs.push_back(ColouredArc{h.node(0, v.id), h.empty_node(), 1});
  return h;
}

}  // namespace triwidth
