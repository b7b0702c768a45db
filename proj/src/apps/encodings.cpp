#include "triwidth/apps/encodings.hpp"

#include <algorithm>

#include "triwidth/apps/taut.hpp"
#include "triwidth/error.hpp"

namespace triwidth::apps {

using namespace mso;

namespace {

std::string slot_name(int a, int b) { return {static_cast<char>('0' + a), static_cast<char>('0' + b)}; }

// Injective sequences of length len over 0..top, lexicographic.
std::vector<std::string> sequences(int len, int top) {
  std::vector<std::string> out{""};
  for (int l = 0; l < len; ++l) {
    std::vector<std::string> next;
    for (const auto& p : out)
      for (int x = 0; x <= top; ++x)
        if (p.find(static_cast<char>('0' + x)) == std::string::npos) next.push_back(p + static_cast<char>('0' + x));
    out = std::move(next);
  }
  return out;
}

// Edge e sits at slot {a,b} of tetrahedron s, in either orientation.
F on_slot(const std::string& e, const std::string& s, int a, int b) {
  return disj({sub(slot_name(a, b), e, s), sub(slot_name(b, a), e, s)});
}

F exactly_one_of(const std::string& x, const std::vector<std::string>& sets) {
  std::vector<F> parts;
  std::vector<F> any;
  for (const auto& S : sets) any.push_back(in(x, S));
  parts.push_back(disj(any));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) parts.push_back(neg(conj({in(x, sets[a]), in(x, sets[b])})));
  return conj(parts);
}

F at_least_rec(int k, int m, const Sort& s, const std::function<F(const std::string&, int)>& mk, NameGen& names,
               std::vector<std::pair<std::string, int>>& prev, int from) {
  if (static_cast<int>(prev.size()) == k) return t_true();
  const std::string x = names.fresh("p");
  std::vector<F> options;
  for (int c = from; c < m; ++c) {
    std::vector<F> parts{mk(x, c)};
    for (const auto& [y, cy] : prev)
      if (cy == c) parts.push_back(neg(eq(x, y)));
    prev.emplace_back(x, c);
    parts.push_back(at_least_rec(k, m, s, mk, names, prev, c));
    prev.pop_back();
    options.push_back(conj(parts));
  }
  return exists(x, s, disj(options));
}

}  // namespace

F at_least(int k, int m, const Sort& s, const std::function<F(const std::string&, int)>& mk, NameGen& names) {
  std::vector<std::pair<std::string, int>> prev;
  return at_least_rec(k, m, s, mk, names, prev, 0);
}

F taut_sentence() {
  NameGen names({"T1", "T2", "T3", "s", "f"});
  const std::vector<std::string> types{"T1", "T2", "T3"};
  F partition = forall("s", Sort::face(3), exactly_one_of("s", types));
  // Slot k of a tetrahedron gets pi when the tetrahedron has the type owning that slot.
  auto gets_pi = [&](const std::string& s, int k) {
    const int type = k == 0 || k == 5 ? 0 : k == 1 || k == 4 ? 1 : 2;
    return conj({on_slot("f", s, kTetEdges[k][0], kTetEdges[k][1]), in(s, types[type])});
  };
  F two = at_least(2, 6, Sort::face(3), gets_pi, names);
  F three = at_least(3, 6, Sort::face(3), gets_pi, names);
  F edges = forall("f", Sort::face(1), conj({two, neg(three)}));
  return exists("T1", Sort::faceset(3),
                exists("T2", Sort::faceset(3), exists("T3", Sort::faceset(3), conj({partition, edges}))));
}

std::vector<std::string> morse_colours(int i) { return sequences(i, i); }

namespace {

std::string w_name(int i, const std::string& pi) { return "W" + std::to_string(i) + "_" + pi; }

// u <=_pi v between an (i-1)-face and an i-face, through a top simplex when i < d.
F below(const std::string& u, const std::string& pi, const std::string& v, int i, int d, NameGen& names) {
  if (i == d) return sub(pi, u, v);
  const std::string s = names.fresh("s");
  std::vector<F> options;
  for (const auto& rho : sequences(i + 1, d)) {
    std::string composed;
    for (char c : pi) composed += rho[c - '0'];
    options.push_back(conj({sub(rho, v, s), sub(composed, u, s)}));
  }
  return exists(s, Sort::face(d), disj(options));
}

}  // namespace

ExtremumProblem morse_problem(int d) {
  if (d < 1 || d > 4) throw DimensionError("Morse encoding supports dimensions 1..4");
  ExtremumProblem p;
  std::set<std::string> taken;
  for (int i = 0; i <= d; ++i) {
    p.free.push_back({"V" + std::to_string(i), Sort::faceset(i)});
    p.coeffs.emplace_back(1);
  }
  std::vector<std::vector<std::string>> colours(d + 1);
  for (int i = 1; i <= d; ++i) {
    colours[i] = morse_colours(i);
    for (const auto& pi : colours[i]) {
      p.free.push_back({w_name(i, pi), Sort::faceset(i)});
      p.coeffs.emplace_back(-2);
    }
  }
  for (const auto& v : p.free) taken.insert(v.name);
  NameGen names(taken);
  auto W = [&](int i, int c) { return w_name(i, colours[i][c]); };

  std::vector<F> clauses;
  for (int i = 0; i <= d; ++i) {
    const std::string x = names.fresh("x");
    clauses.push_back(forall(x, Sort::face(i), in(x, "V" + std::to_string(i))));
  }
  for (int i = 1; i <= d; ++i) {
    const int m = static_cast<int>(colours[i].size());
    std::vector<std::string> wsets;
    for (int c = 0; c < m; ++c) wsets.push_back(W(i, c));
    // Matched arcs exist.
    for (int c = 0; c < m; ++c) {
      const std::string v = names.fresh("v"), u = names.fresh("u");
      clauses.push_back(forall(
          v, Sort::face(i), implies(in(v, W(i, c)), exists(u, Sort::face(i - 1), below(u, colours[i][c], v, i, d, names)))));
    }
    // An upper face is matched through at most one colour.
    {
      const std::string v = names.fresh("v");
      std::vector<F> parts;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) parts.push_back(neg(conj({in(v, wsets[a]), in(v, wsets[b])})));
      clauses.push_back(forall(v, Sort::face(i), conj(parts)));
    }
    // A lower face is matched at most once.
    {
      const std::string u = names.fresh("u");
      auto matched_to = [&](const std::string& v, int c) {
        return conj({in(v, W(i, c)), below(u, colours[i][c], v, i, d, names)});
      };
      clauses.push_back(forall(u, Sort::face(i - 1), neg(at_least(2, m, Sort::face(i), matched_to, names))));
    }
    // No face is matched both up and down.
    if (i < d) {
      const std::string x = names.fresh("x"), v = names.fresh("v");
      std::vector<F> down, up;
      for (int c = 0; c < m; ++c) down.push_back(in(x, W(i, c)));
      for (std::size_t c = 0; c < colours[i + 1].size(); ++c)
        up.push_back(conj({in(v, W(i + 1, static_cast<int>(c))), below(x, colours[i + 1][c], v, i + 1, d, names)}));
      clauses.push_back(forall(x, Sort::face(i), neg(conj({disj(down), exists(v, Sort::face(i + 1), disj(up))}))));
    }
    // No alternating cycle between levels i-1 and i: X<pi> marks the unmatched arc of each
    // upper face on the cycle; every lower face on it meets exactly two cycle arcs.
    {
      std::vector<std::string> xsets;
      for (int c = 0; c < m; ++c) xsets.push_back(names.fresh("X" + std::to_string(i) + "_" + colours[i][c] + "_"));
      auto in_x = [&](const std::string& v) {
        std::vector<F> any;
        for (const auto& X : xsets) any.push_back(in(v, X));
        return disj(any);
      };
      std::vector<F> cyc;
      {
        const std::string v = names.fresh("v");
        cyc.push_back(exists(v, Sort::face(i), in_x(v)));
      }
      {
        const std::string v = names.fresh("v");
        std::vector<F> one;
        for (int a = 0; a < m; ++a)
          for (int b = a + 1; b < m; ++b) one.push_back(neg(conj({in(v, xsets[a]), in(v, xsets[b])})));
        std::vector<F> some_w, apart;
        for (int c = 0; c < m; ++c) {
          some_w.push_back(in(v, W(i, c)));
          apart.push_back(neg(conj({in(v, W(i, c)), in(v, xsets[c])})));
        }
        one.push_back(disj(some_w));
        cyc.push_back(forall(v, Sort::face(i), conj({implies(in_x(v), conj(one)), conj(apart)})));
      }
      {
        const std::string u = names.fresh("u");
        auto rel = [&](const std::string& v, int c) {
          return conj({below(u, colours[i][c], v, i, d, names), in_x(v), disj({in(v, W(i, c)), in(v, xsets[c])})});
        };
        F one = at_least(1, m, Sort::face(i), rel, names);
        F two = at_least(2, m, Sort::face(i), rel, names);
        F three = at_least(3, m, Sort::face(i), rel, names);
        cyc.push_back(forall(u, Sort::face(i - 1), disj({neg(one), conj({two, neg(three)})})));
      }
      F body = conj(cyc);
      for (int c = m - 1; c >= 0; --c) body = exists(xsets[c], Sort::faceset(i), body);
      clauses.push_back(neg(body));
    }
  }
  p.formula = conj(clauses);
  return p;
}

EvaluationProblem<Complex> tv_problem(const Triangulation& t, const Skeleton& sk, const TvTable& table) {
  if (t.dim() != 3) throw DimensionError("Turaev-Viro needs a 3-dimensional triangulation");
  if (!t.closed()) throw ValidationError("Turaev-Viro needs a closed triangulation; boundary facets present");
  const int r = table.r;
  EvaluationProblem<Complex> p;
  p.mode = EvalMode::Multiplicative;
  const auto f = sk.f_vector();
  p.free.push_back({"V", Sort::faceset(0)});
  p.weights.emplace_back(f[0], table.alpha);
  std::vector<std::string> esets;
  for (int a = 0; a <= r - 2; ++a) {
    esets.push_back("E" + std::to_string(a));
    p.free.push_back({esets.back(), Sort::faceset(1)});
    p.weights.emplace_back(f[1], table.beta[a]);
  }
  const auto sextuples = admissible_sextuples(r);
  std::vector<std::string> ssets;
  for (const auto& s : sextuples) {
    std::string name = "S";
    for (int x : s) name += "_" + std::to_string(x);
    ssets.push_back(name);
    p.free.push_back({name, Sort::faceset(3)});
    p.weights.emplace_back(f[3], table.gamma_at(s));
  }

  std::vector<F> clauses;
  clauses.push_back(forall("v", Sort::face(0), in("v", "V")));
  clauses.push_back(forall("e", Sort::face(1), exactly_one_of("e", esets)));
  clauses.push_back(forall("s", Sort::face(3), exactly_one_of("s", ssets)));
  std::vector<F> consistent;
  for (std::size_t j = 0; j < sextuples.size(); ++j)
    for (int k = 0; k < 6; ++k)
      consistent.push_back(implies(conj({in("s", ssets[j]), on_slot("e", "s", kTvEdges[k][0], kTvEdges[k][1])}),
                                   in("e", esets[sextuples[j][k]])));
  clauses.push_back(forall("s", Sort::face(3), forall("e", Sort::face(1), conj(consistent))));
  p.formula = conj(clauses);
  return p;
}

}  // namespace triwidth::apps
