#include "triwidth/mso/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace triwidth::mso {

Sort Sort::element() const {
  switch (kind) {
    case Kind::NodeSet: return node();
    case Kind::ArcSet: return arc();
    case Kind::FaceSet: return face(dim);
    default: return *this;
  }
}

Sort Sort::set_of() const {
  switch (kind) {
    case Kind::Node: return nodeset();
    case Kind::Arc: return arcset();
    case Kind::Face: return faceset(dim);
    default: return *this;
  }
}

std::string Sort::str() const {
  switch (kind) {
    case Kind::Node: return "node";
    case Kind::Arc: return "arc";
    case Kind::NodeSet: return "nodeset";
    case Kind::ArcSet: return "arcset";
    case Kind::Face: return "face " + std::to_string(dim);
    case Kind::FaceSet: return "faceset " + std::to_string(dim);
  }
  return "?";
}

namespace {

F make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

F atom(Formula::Op op, std::vector<std::string> args) {
  Formula f{op, {}, {}, {}, std::move(args), 0, {}};
  return make(std::move(f));
}

}  // namespace

F t_true() { return make(Formula{Formula::Op::True}); }
F t_false() { return make(Formula{Formula::Op::False}); }
F neg(F a) { return make(Formula{Formula::Op::Not, {std::move(a)}}); }

F conj(std::vector<F> kids) {
  if (kids.empty()) return t_true();
  if (kids.size() == 1) return kids[0];
  return make(Formula{Formula::Op::And, std::move(kids)});
}

F disj(std::vector<F> kids) {
  if (kids.empty()) return t_false();
  if (kids.size() == 1) return kids[0];
  return make(Formula{Formula::Op::Or, std::move(kids)});
}

F implies(F a, F b) { return make(Formula{Formula::Op::Implies, {std::move(a), std::move(b)}}); }

F connective(Formula::Op op, std::vector<F> kids) { return make(Formula{op, std::move(kids)}); }

F forall(const std::string& v, Sort s, F body) {
  return make(Formula{Formula::Op::Forall, {std::move(body)}, v, s});
}

F exists(const std::string& v, Sort s, F body) {
  return make(Formula{Formula::Op::Exists, {std::move(body)}, v, s});
}

F eq(const std::string& a, const std::string& b) { return atom(Formula::Op::Eq, {a, b}); }
F in(const std::string& x, const std::string& set) { return atom(Formula::Op::In, {x, set}); }
F inc(const std::string& e, const std::string& v) { return atom(Formula::Op::Inc, {e, v}); }
F adj(const std::string& u, const std::string& v) { return atom(Formula::Op::Adj, {u, v}); }

F col(int i, const std::string& e) {
  Formula f{Formula::Op::Col, {}, {}, {}, {e}, i, {}};
  return make(std::move(f));
}

F adjc(int i, const std::string& u, const std::string& v) {
  Formula f{Formula::Op::AdjC, {}, {}, {}, {u, v}, i, {}};
  return make(std::move(f));
}

F sub(const std::string& pi, const std::string& f, const std::string& s) {
  Formula x{Formula::Op::Sub, {}, {}, {}, {f, s}, 0, pi};
  return make(std::move(x));
}

namespace {

void print_to(std::ostream& os, const Formula& f) {
  using Op = Formula::Op;
  auto kids = [&](const char* head) {
    os << '(' << head;
    for (const auto& k : f.kids) {
      os << ' ';
      print_to(os, *k);
    }
    os << ')';
  };
  auto args = [&](const char* head) {
    os << '(' << head;
    for (const auto& a : f.args) os << ' ' << a;
    os << ')';
  };
  switch (f.op) {
    case Op::True: os << "true"; break;
    case Op::False: os << "false"; break;
    case Op::Not: kids("not"); break;
    case Op::And: kids("and"); break;
    case Op::Or: kids("or"); break;
    case Op::Implies: kids("implies"); break;
    case Op::Forall:
    case Op::Exists:
      os << '(' << (f.op == Op::Forall ? "forall " : "exists ") << f.sort.str() << ' ' << f.var << ' ';
      print_to(os, *f.kids[0]);
      os << ')';
      break;
    case Op::Eq: args("="); break;
    case Op::In: args("in"); break;
    case Op::Inc: args("inc"); break;
    case Op::Adj: args("adj"); break;
    case Op::Col: os << "(col " << f.index << ' ' << f.args[0] << ')'; break;
    case Op::AdjC: os << "(adjc " << f.index << ' ' << f.args[0] << ' ' << f.args[1] << ')'; break;
    case Op::Sub: os << "(sub " << f.pi << ' ' << f.args[0] << ' ' << f.args[1] << ')'; break;
  }
}

}  // namespace

std::string print(const F& f) {
  std::ostringstream os;
  print_to(os, *f);
  return os.str();
}

bool same(const F& a, const F& b) {
  if (a == b) return true;
  if (a->op != b->op || a->var != b->var || !(a->sort == b->sort) || a->args != b->args || a->index != b->index ||
      a->pi != b->pi || a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!same(a->kids[i], b->kids[i])) return false;
  return true;
}

std::vector<std::string> free_variables(const F& f) {
  std::set<std::string> out;
  std::function<void(const Formula&, std::vector<std::string>&)> walk = [&](const Formula& x,
                                                                            std::vector<std::string>& bound) {
    if (x.is_quantifier()) {
      bound.push_back(x.var);
      walk(*x.kids[0], bound);
      bound.pop_back();
      return;
    }
    for (const auto& a : x.args)
      if (std::find(bound.begin(), bound.end(), a) == bound.end()) out.insert(a);
    for (const auto& k : x.kids) walk(*k, bound);
  };
  std::vector<std::string> bound;
  walk(*f, bound);
  return {out.begin(), out.end()};
}

std::size_t formula_size(const F& f) {
  std::size_t n = 1;
  for (const auto& k : f->kids) n += formula_size(k);
  return n;
}

std::vector<std::string> all_names(const F& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& x) {
    if (x.is_quantifier()) out.insert(x.var);
    out.insert(x.args.begin(), x.args.end());
    for (const auto& k : x.kids) walk(*k);
  };
  walk(*f);
  return {out.begin(), out.end()};
}

std::string print_decls(const std::vector<VarDecl>& decls) {
  std::string s;
  for (const auto& d : decls) {
    if (!s.empty()) s += ", ";
    s += d.name + ":" + d.sort.str();
  }
  return s;
}

}  // namespace triwidth::mso
