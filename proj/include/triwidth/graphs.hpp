#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace triwidth {

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // u < v, sorted, no duplicates

  SimpleGraph() = default;
  // Normalises arc orientation and order; throws ValidationError on loops or repeats.
  SimpleGraph(int n, std::vector<std::pair<int, int>> arcs);
  long long size() const { return n + static_cast<long long>(arcs.size()); }
};

// Colours are 1-based indices into `colours`.
struct ColouredArc {
  int u, v, colour;
  friend bool operator==(const ColouredArc&, const ColouredArc&) = default;
};

struct EdgeColouredGraph {
  int n = 0;
  std::vector<std::string> colours;
  std::vector<ColouredArc> arcs;
  std::vector<std::string> node_names;  // optional; empty means ids

  int k() const { return static_cast<int>(colours.size()); }
  long long size() const { return n + static_cast<long long>(arcs.size()); }
  // Throws ValidationError: loops, endpoint range, colour range, same-colour parallels.
  void validate() const;
  std::vector<std::pair<int, int>> skeleton_arcs() const;  // colour dropped, deduplicated
};

struct Origin {
  enum class Kind { Node, Arc, Clique };
  Kind kind;
  int a;      // original node, original arc, or colour index (1-based)
  int b = 0;  // clique member index (1-based) for Clique
};

struct EncodedGraph {
  SimpleGraph graph;
  std::vector<Origin> origin;
  std::vector<int> node_image;                // original node -> encoded node
  std::vector<int> arc_image;                 // original arc -> encoded node
  std::vector<std::vector<int>> clique;       // colour i (0-based) -> its i+3 members
  std::vector<int> clique_nodes() const;
};

// Node order: cliques by colour, then node images, then arc nodes.
EncodedGraph encode_simple(const EdgeColouredGraph& g);
long long encoded_size_formula(long long nV, long long nE, int k);
long long binomial(long long n, long long k);

// `node <id>`, `colour <name>`, `arc <u> <v> [<colour>]`; '#' comments.
EdgeColouredGraph parse_graph(std::string_view text);
std::string to_text(const EdgeColouredGraph& g);

}  // namespace triwidth
