#include "triwidth/mso/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "triwidth/error.hpp"

namespace triwidth::mso {

namespace {

struct Token {
  std::string text;
  std::size_t line, col;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == '\n') {
      ++line, col = 1, ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col, ++i;
    } else if (c == ';') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), line, col});
      ++col, ++i;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')' &&
             s[j] != ';')
        ++j;
      out.push_back({std::string(s.substr(i, j - i)), line, col});
      col += j - i;
      i = j;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  F parse_all() {
    F f = formula();
    if (pos_ < toks_.size()) error("unexpected trailing input '" + toks_[pos_].text + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    if (pos_ < toks_.size()) throw ParseError(msg, toks_[pos_].line, toks_[pos_].col);
    std::size_t line = toks_.empty() ? 1 : toks_.back().line;
    std::size_t col = toks_.empty() ? 1 : toks_.back().col + toks_.back().text.size();
    throw ParseError(msg + " at end of input", line, col);
  }

  const std::string& peek() const {
    static const std::string eof;
    return pos_ < toks_.size() ? toks_[pos_].text : eof;
  }

  std::string take(const char* what) {
    if (pos_ >= toks_.size()) error(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  void expect(const char* s) {
    if (peek() != s) error(std::string("expected '") + s + "'");
    ++pos_;
  }

  std::string name() {
    if (peek() == "(" || peek() == ")" || pos_ >= toks_.size()) error("expected a variable name");
    return toks_[pos_++].text;
  }

  int integer(const char* what) {
    std::string t = take(what);
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) {
      --pos_;
      error(std::string("expected ") + what);
    }
    return v;
  }

  Sort sort() {
    std::string s = take("a sort");
    if (s == "node") return Sort::node();
    if (s == "arc") return Sort::arc();
    if (s == "nodeset") return Sort::nodeset();
    if (s == "arcset") return Sort::arcset();
    if (s == "face") return Sort::face(integer("a face dimension"));
    if (s == "faceset") return Sort::faceset(integer("a face dimension"));
    --pos_;
    error("unknown sort '" + s + "'");
  }

  F formula() {
    if (peek() == "true") return ++pos_, t_true();
    if (peek() == "false") return ++pos_, t_false();
    expect("(");
    std::string head = take("an operator");
    F out;
    if (head == "and" || head == "or") {
      std::vector<F> kids;
      while (peek() != ")" && pos_ < toks_.size()) kids.push_back(formula());
      if (kids.empty()) error("'" + head + "' needs at least one operand");
      out = connective(head == "and" ? Formula::Op::And : Formula::Op::Or, std::move(kids));
    } else if (head == "not") {
      out = neg(formula());
    } else if (head == "implies") {
      F a = formula();
      out = implies(a, formula());
    } else if (head == "forall" || head == "exists") {
      Sort s = sort();
      std::string v = name();
      F body = formula();
      out = head == "forall" ? forall(v, s, body) : exists(v, s, body);
    } else if (head == "forall-node" || head == "exists-node") {
      std::string v = name();
      F body = formula();
      out = head == "forall-node" ? forall(v, Sort::node(), body) : exists(v, Sort::node(), body);
    } else if (head == "=") {
      std::string a = name();
      out = eq(a, name());
    } else if (head == "in") {
      std::string a = name();
      out = in(a, name());
    } else if (head == "inc") {
      std::string a = name();
      out = inc(a, name());
    } else if (head == "adj") {
      std::string a = name();
      out = adj(a, name());
    } else if (head == "col") {
      int i = integer("a colour index");
      out = col(i, name());
    } else if (head == "adjc") {
      int i = integer("a colour index");
      std::string a = name();
      out = adjc(i, a, name());
    } else if (head == "sub") {
      std::string pi = take("a label sequence");
      for (char c : pi)
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          --pos_;
          error("label sequence must be digits");
        }
      std::string a = name();
      out = sub(pi, a, name());
    } else {
      --pos_;
      error("unknown operator '" + head + "'");
    }
    expect(")");
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class SortChecker {
 public:
  SortChecker(const Signature& sig, const std::vector<VarDecl>& free) : sig_(sig) {
    for (const auto& d : free) {
      check_sort(d.sort, "free variable " + d.name);
      scope_[d.name].push_back(d.sort);
    }
  }

  void walk(const F& f) {
    using Op = Formula::Op;
    const std::string text = f->is_atom() ? print(f) : std::string();
    auto lookup = [&](const std::string& v) -> Sort {
      auto it = scope_.find(v);
      if (it == scope_.end() || it->second.empty()) throw SortError(text + ": undeclared variable " + v);
      return it->second.back();
    };
    auto want = [&](const std::string& v, Sort s) {
      if (!(lookup(v) == s))
        throw SortError(text + ": " + v + " has sort " + lookup(v).str() + ", expected " + s.str());
    };
    auto graph_only = [&] {
      if (sig_.kind != Signature::Kind::Graph) throw SortError(text + ": graph atom in a triangulation formula");
    };
    switch (f->op) {
      case Op::True:
      case Op::False: return;
      case Op::Not:
      case Op::And:
      case Op::Or:
      case Op::Implies:
        for (const auto& k : f->kids) walk(k);
        return;
      case Op::Forall:
      case Op::Exists:
        check_sort(f->sort, "binder of " + f->var);
        scope_[f->var].push_back(f->sort);
        walk(f->kids[0]);
        scope_[f->var].pop_back();
        return;
      case Op::Eq: {
        Sort a = lookup(f->args[0]), b = lookup(f->args[1]);
        if (a.is_set() || !(a == b)) throw SortError(text + ": '=' needs two elements of one sort");
        return;
      }
      case Op::In: {
        Sort x = lookup(f->args[0]), s = lookup(f->args[1]);
        if (x.is_set() || !s.is_set() || !(s.element() == x))
          throw SortError(text + ": membership needs an element and a set of its sort");
        return;
      }
      case Op::Inc:
        graph_only();
        want(f->args[0], Sort::arc());
        want(f->args[1], Sort::node());
        return;
      case Op::Adj:
        graph_only();
        want(f->args[0], Sort::node());
        want(f->args[1], Sort::node());
        return;
      case Op::Col:
        graph_only();
        colour(f, text);
        want(f->args[0], Sort::arc());
        return;
      case Op::AdjC:
        graph_only();
        colour(f, text);
        want(f->args[0], Sort::node());
        want(f->args[1], Sort::node());
        return;
      case Op::Sub: {
        if (sig_.kind != Signature::Kind::Tri) throw SortError(text + ": subface atom in a graph formula");
        const int len = static_cast<int>(f->pi.size());
        if (len < 1 || len > sig_.d) throw SortError(text + ": label sequence length must be 1.." + std::to_string(sig_.d));
        unsigned used = 0;
        for (char c : f->pi) {
          int x = c - '0';
          if (x > sig_.d || (used >> x & 1u)) throw SortError(text + ": labels must be distinct and at most d");
          used |= 1u << x;
        }
        want(f->args[0], Sort::face(len - 1));
        want(f->args[1], Sort::face(sig_.d));
        return;
      }
    }
  }

 private:
  void colour(const F& f, const std::string& text) {
    if (f->index < 1 || f->index > sig_.k)
      throw SortError(text + ": colour index outside 1.." + std::to_string(sig_.k));
  }

  void check_sort(Sort s, const std::string& who) {
    bool face = s.kind == Sort::Kind::Face || s.kind == Sort::Kind::FaceSet;
    if (sig_.kind == Signature::Kind::Graph && face) throw SortError(who + ": face sort in a graph formula");
    if (sig_.kind == Signature::Kind::Tri && !face) throw SortError(who + ": graph sort in a triangulation formula");
    if (face && (s.dim < 0 || s.dim > sig_.d)) throw SortError(who + ": face dimension outside 0.." + std::to_string(sig_.d));
  }

  Signature sig_;
  std::map<std::string, std::vector<Sort>> scope_;
};

}  // namespace

F parse_syntax(std::string_view text) { return Parser(text).parse_all(); }

void check_sorts(const F& f, const Signature& sig, const std::vector<VarDecl>& free) {
  SortChecker(sig, free).walk(f);
}

F parse_formula(std::string_view text, const Signature& sig, const std::vector<VarDecl>& free) {
  F f = parse_syntax(text);
  check_sorts(f, sig, free);
  return f;
}

Sort parse_sort(std::string_view text) {
  // Reuse the formula tokenizer on "(exists SORT _ true)".
  F f = parse_syntax("(exists " + std::string(text) + " _ true)");
  return f->sort;
}

}  // namespace triwidth::mso
