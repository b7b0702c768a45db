#include "triwidth/mso/structure.hpp"

#include "triwidth/error.hpp"

namespace triwidth::mso {

Structure Structure::from_graph(const SimpleGraph& g) {
  EdgeColouredGraph e;
  e.n = g.n;
  for (auto [u, v] : g.arcs) e.arcs.push_back(ColouredArc{u, v, 0});
  return from_graph(e);
}

Structure Structure::from_graph(const EdgeColouredGraph& g) {
  Structure s;
  s.sig_ = Signature::graph(g.k());
  s.n_ = g.n;
  s.words_ = (g.n + 63) / 64;
  s.adj_.assign(static_cast<std::size_t>(g.n) * s.words_, 0);
  s.adjc_.assign(g.k() + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(g.n) * s.words_, 0));
  for (const auto& a : g.arcs) {
    s.arc_u_.push_back(a.u);
    s.arc_v_.push_back(a.v);
    s.arc_colour_.push_back(a.colour);
    if (a.u == a.v) continue;
    s.set_bit(s.adj_, a.u, a.v);
    s.set_bit(s.adj_, a.v, a.u);
    if (a.colour > 0) {
      s.set_bit(s.adjc_[a.colour], a.u, a.v);
      s.set_bit(s.adjc_[a.colour], a.v, a.u);
    }
  }
  return s;
}

Structure Structure::from_triangulation(const Triangulation& t, const Skeleton& sk) {
  Structure s;
  const int d = t.dim();
  s.sig_ = Signature::tri(d);
  s.faces_ = sk.f_vector();
  // Every injective label sequence of length 1..d.
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= d; ++len) {
    std::vector<std::string> next;
    for (const auto& p : frontier)
      for (int x = 0; x <= d; ++x)
        if (p.find(static_cast<char>('0' + x)) == std::string::npos) next.push_back(p + static_cast<char>('0' + x));
    for (const auto& p : next) {
      std::vector<int> emb;
      for (char c : p) emb.push_back(c - '0');
      std::vector<int> row(t.size(), -1);
      for (int simplex = 0; simplex < t.size(); ++simplex) row[simplex] = sk.face_with_instance(simplex, emb);
      s.sub_[p] = std::move(row);
    }
    frontier = std::move(next);
  }
  return s;
}

int Structure::carrier(Sort s) const {
  switch (s.kind) {
    case Sort::Kind::Node:
    case Sort::Kind::NodeSet: return n_;
    case Sort::Kind::Arc:
    case Sort::Kind::ArcSet: return static_cast<int>(arc_u_.size());
    case Sort::Kind::Face:
    case Sort::Kind::FaceSet:
      if (s.dim < 0 || s.dim >= static_cast<int>(faces_.size())) throw SortError("face dimension outside the structure");
      return faces_[s.dim];
  }
  return 0;
}

const std::vector<int>& Structure::sub_table(const std::string& pi) const {
  auto it = sub_.find(pi);
  if (it == sub_.end()) throw SortError("label sequence " + pi + " not valid in this structure");
  return it->second;
}

}  // namespace triwidth::mso
