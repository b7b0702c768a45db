#include "triwidth/mso/translate.hpp"

#include <algorithm>
#include <functional>

#include "triwidth/error.hpp"
#include "triwidth/hasse.hpp"
#include "triwidth/mso/parser.hpp"

namespace triwidth::mso {

using Op = Formula::Op;

std::string NameGen::fresh(const std::string& stem) {
  for (;;) {
    std::string name = "_" + stem + std::to_string(next_++);
    if (taken_.insert(name).second) return name;
  }
}

namespace {

std::set<std::string> names_of(const F& phi, const std::vector<VarDecl>& free) {
  auto all = all_names(phi);
  std::set<std::string> out(all.begin(), all.end());
  for (const auto& d : free) out.insert(d.name);
  return out;
}

// Members of X all satisfy `pred`.
F set_guard(const std::string& set, const std::function<F(const std::string&)>& pred, NameGen& names) {
  std::string y = names.fresh("m");
  return forall(y, Sort::node(), implies(in(y, set), pred(y)));
}

}  // namespace

F in_clique(const std::string& x, int m, NameGen& names) {
  // Nested so that every adjacency is checked as soon as both ends are bound.
  std::vector<std::string> ys;
  for (int j = 1; j < m; ++j) ys.push_back(names.fresh("c"));
  F body = t_true();
  for (int j = m - 2; j >= 0; --j) {
    std::vector<F> parts{adj(x, ys[j])};
    for (int a = 0; a < j; ++a) parts.push_back(adj(ys[a], ys[j]));
    if (j + 1 < m - 1) parts.push_back(body);
    body = exists(ys[j], Sort::node(), conj(std::move(parts)));
  }
  return body;
}

F is_col(int i, const std::string& x, NameGen& names) {
  return conj({in_clique(x, i + 2, names), neg(in_clique(x, i + 3, names))});
}

F is_arc(const std::string& x, NameGen& names) {
  std::string y = names.fresh("a");
  return conj({neg(in_clique(x, 3, names)), exists(y, Sort::node(), conj({adj(x, y), in_clique(y, 3, names)}))});
}

F is_node(const std::string& x, int k, NameGen& names) {
  std::vector<F> parts{neg(is_arc(x, names))};
  for (int i = 1; i <= k; ++i) parts.push_back(neg(is_col(i, x, names)));
  return conj(std::move(parts));
}

namespace {

class ColouredTranslator {
 public:
  ColouredTranslator(int k, NameGen& names) : k_(k), names_(names) {}

  F guard(const std::string& v, Sort s) {
    auto pred = [&](const std::string& y) {
      return s.element() == Sort::arc() ? is_arc(y, names_) : is_node(y, k_, names_);
    };
    return s.is_set() ? set_guard(v, pred, names_) : pred(v);
  }

  static Sort target(Sort s) { return s.is_set() ? Sort::nodeset() : Sort::node(); }

  F go(const F& f) {
    switch (f->op) {
      case Op::True:
      case Op::False:
      case Op::Eq:
      case Op::In: return f;
      case Op::Not: return neg(go(f->kids[0]));
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        std::vector<F> kids;
        for (const auto& k : f->kids) kids.push_back(go(k));
        if (f->op == Op::Implies) return implies(kids[0], kids[1]);
        return connective(f->op, std::move(kids));
      }
      case Op::Forall: return forall(f->var, target(f->sort), implies(guard(f->var, f->sort), go(f->kids[0])));
      case Op::Exists: return exists(f->var, target(f->sort), conj({guard(f->var, f->sort), go(f->kids[0])}));
      case Op::Inc:
        return conj({is_arc(f->args[0], names_), is_node(f->args[1], k_, names_), adj(f->args[0], f->args[1])});
      case Op::Adj: {
        std::string y = names_.fresh("e");
        const auto& u = f->args[0];
        const auto& v = f->args[1];
        return conj({exists(y, Sort::node(), conj({is_arc(y, names_), adj(y, u), adj(y, v)})), neg(eq(u, v))});
      }
      case Op::Col: return colour(f->index, f->args[0]);
      case Op::AdjC: {
        std::string y = names_.fresh("e");
        const auto& u = f->args[0];
        const auto& v = f->args[1];
        return conj({exists(y, Sort::node(), conj({is_arc(y, names_), adj(y, u), adj(y, v), colour(f->index, y)})),
                     neg(eq(u, v))});
      }
      case Op::Sub: throw SortError("subface atom in a graph formula");
    }
    return f;
  }

 private:
  F colour(int i, const std::string& e) {
    std::string y = names_.fresh("k");
    return exists(y, Sort::node(), conj({adj(e, y), is_col(i, y, names_)}));
  }

  int k_;
  NameGen& names_;
};

}  // namespace

Translation translate_coloured(const F& phi, int k, const std::vector<VarDecl>& free) {
  check_sorts(phi, Signature::graph(k), free);
  NameGen names(names_of(phi, free));
  ColouredTranslator tr(k, names);
  Translation out;
  std::vector<F> parts;
  for (const auto& d : free) {
    out.free.push_back({d.name, ColouredTranslator::target(d.sort)});
    parts.push_back(tr.guard(d.name, d.sort));
  }
  parts.push_back(tr.go(phi));
  out.formula = conj(std::move(parts));
  return out;
}

namespace {

std::vector<std::vector<int>> colours_of_length(int d, int len) {
  std::vector<std::vector<int>> out;
  const auto all = hasse_colours(d);
  for (std::size_t c = 0; c < all.size(); ++c) {
    int l = all[c] == "-" ? 0 : static_cast<int>(all[c].size());
    if (l == len) out.push_back({static_cast<int>(c) + 1});
  }
  return out;
}

F has_colour_length(const std::string& x, int d, int len, NameGen& names) {
  std::vector<F> parts;
  std::string y = names.fresh("h");
  for (const auto& c : colours_of_length(d, len)) parts.push_back(adjc(c[0], x, y));
  return exists(y, Sort::node(), disj(std::move(parts)));
}

std::string digits(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

}  // namespace

F is_face(int i, const std::string& x, int d, NameGen& names) {
  if (i == 0) return conj({has_colour_length(x, d, 0, names), has_colour_length(x, d, 1, names)});
  if (i < d) return conj({has_colour_length(x, d, i, names), has_colour_length(x, d, i + 1, names)});
  return conj({has_colour_length(x, d, d, names), neg(has_colour_length(x, d, d - 1, names))});
}

std::vector<F> subface_chains(int i, const std::string& pi, int d, const std::string& f, const std::string& s,
                              NameGen& names) {
  if (static_cast<int>(pi.size()) != i + 1 || i < 0 || i >= d) throw SortError("label sequence must have length i+1 <= d");
  std::vector<int> start;
  unsigned used = 0;
  for (char c : pi) {
    int x = c - '0';
    if (x < 0 || x > d || (used >> x & 1u)) throw SortError("labels must be distinct and at most d");
    used |= 1u << x;
    start.push_back(x);
  }
  // Vertex sets S_{i+1} .. S_{d-1}: add the smallest missing vertex each step.
  std::vector<std::vector<int>> chain_sets;
  std::vector<int> cur = start;
  for (int j = i + 1; j < d; ++j) {
    int add = 0;
    while (std::find(cur.begin(), cur.end(), add) != cur.end()) ++add;
    cur.push_back(add);
    std::vector<int> sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    chain_sets.push_back(sorted);
  }
  const int hops = static_cast<int>(chain_sets.size());
  std::vector<std::string> vars;
  for (int h = 0; h < hops; ++h) vars.push_back(names.fresh("g"));

  auto position_colour = [&](const std::vector<int>& lower, const std::vector<int>& upper) {
    std::vector<int> pos;
    for (int v : lower) pos.push_back(static_cast<int>(std::find(upper.begin(), upper.end(), v) - upper.begin()));
    return hasse_colour_index(d, digits(pos));
  };

  std::vector<F> out;
  std::vector<std::vector<int>> labelling(hops);
  std::function<void(int)> rec = [&](int h) {
    if (h < hops) {
      std::vector<int> perm = chain_sets[h];
      do {
        labelling[h] = perm;
        rec(h + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    // Innermost first: the last hop lands on s, whose labels are simplex vertices.
    std::vector<int> identity(d + 1);
    for (int x = 0; x <= d; ++x) identity[x] = x;
    F body;
    for (int h = hops; h >= 0; --h) {
      const std::vector<int>& lower = h == 0 ? start : labelling[h - 1];
      const std::vector<int>& upper = h == hops ? identity : labelling[h];
      const std::string& a = h == 0 ? f : vars[h - 1];
      const std::string& b = h == hops ? s : vars[h];
      F step = adjc(position_colour(lower, upper), a, b);
      body = body ? conj({step, body}) : step;
      if (h < hops) body = exists(vars[h], Sort::node(), body);
    }
    out.push_back(body);
  };
  rec(0);
  return out;
}

F expand_subface_relation(int i, const std::string& pi, int d, const std::string& f, const std::string& s,
                          NameGen& names) {
  return disj(subface_chains(i, pi, d, f, s, names));
}

namespace {

class TriTranslator {
 public:
  TriTranslator(int d, NameGen& names) : d_(d), names_(names) {}

  F guard(const std::string& v, Sort s) {
    auto pred = [&](const std::string& y) { return is_face(s.dim, y, d_, names_); };
    return s.is_set() ? set_guard(v, pred, names_) : pred(v);
  }

  static Sort target(Sort s) { return s.is_set() ? Sort::nodeset() : Sort::node(); }

  F go(const F& f) {
    switch (f->op) {
      case Op::True:
      case Op::False:
      case Op::Eq:
      case Op::In: return f;
      case Op::Not: return neg(go(f->kids[0]));
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        std::vector<F> kids;
        for (const auto& k : f->kids) kids.push_back(go(k));
        if (f->op == Op::Implies) return implies(kids[0], kids[1]);
        return connective(f->op, std::move(kids));
      }
      case Op::Forall: return forall(f->var, target(f->sort), implies(guard(f->var, f->sort), go(f->kids[0])));
      case Op::Exists: return exists(f->var, target(f->sort), conj({guard(f->var, f->sort), go(f->kids[0])}));
      case Op::Sub:
        return expand_subface_relation(static_cast<int>(f->pi.size()) - 1, f->pi, d_, f->args[0], f->args[1], names_);
      default: throw SortError("graph atom in a triangulation formula");
    }
  }

 private:
  int d_;
  NameGen& names_;
};

}  // namespace

Translation translate_triangulation(const F& phi, int d, const std::vector<VarDecl>& free) {
  check_sorts(phi, Signature::tri(d), free);
  NameGen names(names_of(phi, free));
  TriTranslator tr(d, names);
  Translation out;
  std::vector<F> parts;
  for (const auto& v : free) {
    out.free.push_back({v.name, TriTranslator::target(v.sort)});
    parts.push_back(tr.guard(v.name, v.sort));
  }
  parts.push_back(tr.go(phi));
  out.formula = conj(std::move(parts));
  return out;
}

}  // namespace triwidth::mso
