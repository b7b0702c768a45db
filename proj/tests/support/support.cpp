#include "support.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "triwidth/apps/encodings.hpp"
#include "triwidth/hasse.hpp"
#include "triwidth/mso/evaluate.hpp"
#include "triwidth/mso/parser.hpp"
#include "triwidth/mso/translate.hpp"

#ifndef TRIWIDTH_DATA_DIR
#error "TRIWIDTH_DATA_DIR must point at the data directory"
#endif

namespace tsupport {

std::string data_path(const std::string& name) { return std::string(TRIWIDTH_DATA_DIR) + "/" + name; }

Triangulation fixture(const std::string& name) { return load_triangulation(data_path(name + ".tri")); }

namespace {

using mso::Formula;
using Op = Formula::Op;

bool naive(const mso::Structure& st, const Formula& f, NaiveEnv& env) {
  auto elem = [&](const std::string& x) { return env.elements.at(x); };
  switch (f.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Not: return !naive(st, *f.kids[0], env);
    case Op::And:
      for (const auto& k : f.kids)
        if (!naive(st, *k, env)) return false;
      return true;
    case Op::Or:
      for (const auto& k : f.kids)
        if (naive(st, *k, env)) return true;
      return false;
    case Op::Implies: return !naive(st, *f.kids[0], env) || naive(st, *f.kids[1], env);
    case Op::Eq: return elem(f.args[0]) == elem(f.args[1]);
    case Op::In: return env.sets.at(f.args[1])[elem(f.args[0])] != 0;
    case Op::Inc: return st.inc(elem(f.args[0]), elem(f.args[1]));
    case Op::Adj: return st.adj(elem(f.args[0]), elem(f.args[1]));
    case Op::Col: return st.col(f.index, elem(f.args[0]));
    case Op::AdjC: return st.adjc(f.index, elem(f.args[0]), elem(f.args[1]));
    case Op::Sub: return st.sub_table(f.pi)[elem(f.args[1])] == elem(f.args[0]);
    case Op::Forall:
    case Op::Exists: break;
  }
  const bool want = f.op == Op::Exists;
  const int n = st.carrier(f.sort);
  if (f.sort.is_set()) {
    if (n > 20) throw std::runtime_error("naive evaluator refuses sets over more than 20 elements");
    auto saved = env.sets.find(f.var) != env.sets.end() ? std::optional(env.sets[f.var]) : std::nullopt;
    bool result = !want;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<char> m(n);
      for (int x = 0; x < n; ++x) m[x] = bits >> x & 1;
      env.sets[f.var] = m;
      if (naive(st, *f.kids[0], env) == want) {
        result = want;
        break;
      }
    }
    if (saved) env.sets[f.var] = *saved;
    else env.sets.erase(f.var);
    return result;
  }
  auto saved = env.elements.find(f.var) != env.elements.end() ? std::optional(env.elements[f.var]) : std::nullopt;
  bool result = !want;
  for (int x = 0; x < n; ++x) {
    env.elements[f.var] = x;
    if (naive(st, *f.kids[0], env) == want) {
      result = want;
      break;
    }
  }
  if (saved) env.elements[f.var] = *saved;
  else env.elements.erase(f.var);
  return result;
}

}  // namespace

bool naive_evaluate(const mso::Structure& st, const mso::F& f, NaiveEnv env) { return naive(st, *f, env); }

mso::F three_colourability() {
  return mso::parse_syntax(R"(
    (exists nodeset V1 (exists nodeset V2 (exists nodeset V3
      (forall node v (forall node w
        (and
          (or (in v V1) (in v V2) (in v V3))
          (not (or (and (in v V1) (in v V2)) (and (in v V2) (in v V3)) (and (in v V1) (in v V3))))
          (implies (adj v w)
            (not (or (and (in v V1) (in w V1)) (and (in v V2) (in w V2)) (and (in v V3) (in w V3))))))))))))");
}

mso::F dominating_set() {
  return mso::parse_syntax("(forall node v (exists node w (or (in v D) (and (in w D) (adj v w)))))");
}

mso::F independent_set() {
  return mso::parse_syntax("(forall node v (forall node w (implies (and (in v A) (in w A)) (not (adj v w)))))");
}

mso::F orientability() {
  // An edge at positions pi of u and rho of v: equal parity of the completed
  // permutations forces opposite orientations, different parity the same one.
  const std::vector<std::string> seqs{"01", "02", "10", "12", "20", "21"};
  auto parity = [](const std::string& s) {
    int p[3] = {s[0] - '0', s[1] - '0', 3 - (s[0] - '0') - (s[1] - '0')};
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inv += p[i] > p[j];
    return inv % 2;
  };
  std::string body = "(and (or (in s Sp) (in s Sm)) (not (and (in s Sp) (in s Sm)))";
  for (const auto& pi : seqs)
    for (const auto& rho : seqs) {
      std::string premise = "(and (sub " + pi + " f u) (sub " + rho + " f v)";
      if (pi == rho) premise += " (not (= u v))";
      premise += ")";
      const std::string opposite = "(or (and (in u Sp) (in v Sm)) (and (in u Sm) (in v Sp)))";
      const std::string same = "(or (and (in u Sp) (in v Sp)) (and (in u Sm) (in v Sm)))";
      body += " (implies " + premise + " " + (parity(pi) == parity(rho) ? opposite : same) + ")";
    }
  body += ")";
  return mso::parse_syntax("(exists faceset 2 Sp (exists faceset 2 Sm (forall face 2 s (forall face 1 f "
                           "(forall face 2 u (forall face 2 v " +
                           body + "))))))");
}

std::vector<std::string> coloured_corpus() {
  return {
      "(forall node v (= v v))",
      "(exists node v (exists node w (adj v w)))",
      "(forall node v (forall node w (implies (adj v w) (adj w v))))",
      "(exists arc e (col 1 e))",
      "(exists arc e (col 2 e))",
      "(forall arc e (or (col 1 e) (col 2 e)))",
      "(forall arc e (exists node v (inc e v)))",
      "(forall arc e (exists node v (exists node w (and (inc e v) (inc e w) (not (= v w))))))",
      "(exists node v (exists node w (and (adjc 1 v w) (adjc 2 v w))))",
      "(forall node u (forall node v (implies (adjc 2 u v) (adj u v))))",
      "(exists node v (forall node w (or (= v w) (adj v w))))",
      print(three_colourability()),
      "(exists nodeset X (forall node v (forall node w (implies (adj v w) "
      "(or (and (in v X) (not (in w X))) (and (in w X) (not (in v X))))))))",
      "(exists arcset M (forall node v (exists arc e (and (in e M) (inc e v)))))",
      "(forall nodeset X (implies (and (exists node v (in v X)) (exists node w (not (in w X)))) "
      "(exists node v (exists node w (and (in v X) (not (in w X)) (adj v w))))))",
      "(exists arc e (exists arc f (and (not (= e f)) (exists node v (and (inc e v) (inc f v))))))",
      "(forall arc e (forall arc f (implies (and (col 1 e) (col 2 f)) (not (= e f)))))",
      "(exists arcset S (and (exists arc e (in e S)) (forall arc e (implies (in e S) (col 1 e)))))",
      "(forall node v (exists nodeset X (and (in v X) (forall node w (implies (in w X) (= v w))))))",
      "(exists node v (forall arc e (implies (col 1 e) (inc e v))))",
  };
}

bool uses_colour_two(const std::string& sentence) {
  return sentence.find("col 2") != std::string::npos || sentence.find("adjc 2") != std::string::npos;
}

std::vector<std::string> triangulation_corpus(int d) {
  if (d == 2)
    return {
        print(orientability()),
        "(forall face 2 s (exists face 1 f (sub 01 f s)))",
        "(exists face 0 v (forall face 2 s (sub 0 v s)))",
        "(forall face 1 e (exists face 2 s (or (sub 01 e s) (sub 12 e s) (sub 20 e s))))",
        "(exists face 1 e (exists face 2 s (and (sub 01 e s) (sub 10 e s))))",
        "(forall face 0 v (forall face 0 w (= v w)))",
        "(exists faceset 1 E (forall face 2 s (exists face 1 e (and (in e E) (sub 02 e s)))))",
        "(forall face 2 s (forall face 2 t (implies (exists face 1 e (and (sub 01 e s) (sub 01 e t))) (= s t))))",
    };
  return {
      print(apps::taut_sentence()),
      "(forall face 3 s (exists face 2 f (sub 012 f s)))",
      "(exists face 1 e (forall face 3 s (sub 01 e s)))",
      "(forall face 0 v (exists face 3 s (sub 3 v s)))",
  };
}

Agreement coloured_translation(const EdgeColouredGraph& g, const std::string& sentence) {
  mso::F f = mso::parse_formula(sentence, mso::Signature::graph(g.k()));
  mso::Translation tr = mso::translate_coloured(f, g.k());
  EncodedGraph e = encode_simple(g);
  return {mso::evaluate(mso::Structure::from_graph(g), f), mso::evaluate(mso::Structure::from_graph(e.graph), tr.formula)};
}

Agreement triangulation_translation(const Triangulation& t, const std::string& sentence) {
  mso::F f = mso::parse_formula(sentence, mso::Signature::tri(t.dim()));
  mso::Translation tr = mso::translate_triangulation(f, t.dim());
  Skeleton sk(t);
  HasseDiagram h = build_hasse(t, sk);
  return {mso::evaluate(mso::Structure::from_triangulation(t, sk), f),
          mso::evaluate(mso::Structure::from_graph(h.graph), tr.formula)};
}

namespace {

// Every solution of f on `source`, as member lists per free set.
std::vector<std::vector<std::vector<int>>> all_solutions(const mso::Structure& source, const mso::F& f,
                                                         const std::vector<mso::VarDecl>& free) {
  std::vector<std::vector<std::vector<int>>> out;
  mso::enumerate_solutions(source, f, free, [&](const mso::Cube& c) {
    std::vector<std::vector<int>> fixed(free.size()), loose(free.size());
    for (std::size_t j = 0; j < free.size(); ++j)
      for (std::size_t x = 0; x < c.sets[j].size(); ++x) {
        if (c.sets[j][x] == 1) fixed[j].push_back(static_cast<int>(x));
        if (c.sets[j][x] < 0) loose[j].push_back(static_cast<int>(x));
      }
    std::vector<std::pair<int, int>> slots;
    for (std::size_t j = 0; j < free.size(); ++j)
      for (int x : loose[j]) slots.emplace_back(static_cast<int>(j), x);
    if (slots.size() > 20) throw std::runtime_error("too many free choices to expand");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
      auto sets = fixed;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (bits >> i & 1) sets[slots[i].first].push_back(slots[i].second);
      for (auto& s : sets) std::sort(s.begin(), s.end());
      out.push_back(std::move(sets));
    }
  });
  return out;
}

CountPair counts(const mso::Structure& source, const mso::F& f, const std::vector<mso::VarDecl>& free,
                 const mso::Structure& target, const mso::Translation& tr,
                 const std::function<int(const mso::Sort&, int)>& image) {
  CountPair out;
  out.original = mso::count_solutions(source, f, free);
  out.translated = mso::count_solutions(target, tr.formula, tr.free);
  for (const auto& sol : all_solutions(source, f, free)) {
    mso::Assignment a;
    for (std::size_t j = 0; j < free.size(); ++j) {
      std::vector<int> mapped;
      for (int x : sol[j]) mapped.push_back(image(free[j].sort, x));
      a.sets[tr.free[j].name] = mapped;
    }
    if (!mso::evaluate(target, tr.formula, tr.free, a)) out.images_satisfy = false;
  }
  return out;
}

}  // namespace

CountPair coloured_solution_counts(const EdgeColouredGraph& g, const mso::F& f, const std::vector<mso::VarDecl>& free) {
  EncodedGraph e = encode_simple(g);
  return counts(mso::Structure::from_graph(g), f, free, mso::Structure::from_graph(e.graph),
                mso::translate_coloured(f, g.k(), free), [&](const mso::Sort& s, int x) {
                  return s == mso::Sort::nodeset() ? e.node_image[x] : e.arc_image[x];
                });
}

CountPair triangulation_solution_counts(const Triangulation& t, const mso::F& f,
                                        const std::vector<mso::VarDecl>& free) {
  Skeleton sk(t);
  HasseDiagram h = build_hasse(t, sk);
  return counts(mso::Structure::from_triangulation(t, sk), f, free, mso::Structure::from_graph(h.graph),
                mso::translate_triangulation(f, t.dim(), free),
                [&](const mso::Sort& s, int x) { return h.node(s.dim, x); });
}

bool three_colourable_brute(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> c(n, 0);
  while (true) {
    if (std::all_of(arcs.begin(), arcs.end(), [&](auto a) { return c[a.first] != c[a.second]; })) return true;
    int i = 0;
    while (i < n && c[i] == 2) c[i++] = 0;
    if (i == n) return false;
    ++c[i];
  }
}

int min_dominating_brute(int n, const std::vector<std::pair<int, int>>& arcs) {
  int best = n;
  for (std::uint32_t d = 0; d < (1u << n); ++d) {
    std::uint32_t covered = d;
    for (auto [u, v] : arcs) {
      if (d >> u & 1) covered |= 1u << v;
      if (d >> v & 1) covered |= 1u << u;
    }
    if (covered == (1u << n) - 1) best = std::min(best, std::popcount(d));
  }
  return best;
}

bool orientable_brute(const Triangulation& t) {
  auto sign = [](const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv % 2 ? -1 : 1;
  };
  for (std::uint32_t bits = 0; bits < (1u << t.size()); ++bits) {
    bool ok = true;
    for (const Gluing& g : t.gluings()) {
      const int o1 = bits >> g.s1 & 1 ? -1 : 1, o2 = bits >> g.s2 & 1 ? -1 : 1;
      if (o1 * o2 * sign(g.map) != -1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<int> f_vector_union_find(const Triangulation& t) {
  const int d = t.dim(), n = t.size(), masks = 1 << (d + 1);
  std::vector<int> parent(static_cast<std::size_t>(n) * masks);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Gluing& g : t.gluings())
    for (int m = 1; m < masks; ++m) {
      if (m >> g.f1 & 1) continue;
      int image = 0;
      for (int v = 0; v <= d; ++v)
        if (m >> v & 1) image |= 1 << g.map[v];
      parent[find(g.s1 * masks + m)] = find(g.s2 * masks + image);
    }
  std::vector<std::set<int>> roots(d + 1);
  for (int s = 0; s < n; ++s)
    for (int m = 1; m < masks; ++m) roots[std::popcount(static_cast<unsigned>(m)) - 1].insert(find(s * masks + m));
  std::vector<int> f;
  for (const auto& r : roots) f.push_back(static_cast<int>(r.size()));
  return f;
}

std::vector<EdgeColouredGraph> graphs_up_to_iso(int n, int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int states = 1 << k;
  std::set<std::vector<int>> seen;
  std::vector<EdgeColouredGraph> out;
  std::vector<int> code(pairs.size(), 0);
  std::vector<int> perm(n);
  while (true) {
    // Canonical form: least relabelled state vector.
    std::vector<int> best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> image(pairs.size());
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        int a = perm[pairs[p].first], b = perm[pairs[p].second];
        if (a > b) std::swap(a, b);
        const auto at = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin();
        image[at] = code[p];
      }
      if (best.empty() || image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) {
      EdgeColouredGraph g;
      g.n = n;
      for (int c = 1; c <= k; ++c) g.colours.push_back("c" + std::to_string(c));
      for (std::size_t p = 0; p < pairs.size(); ++p)
        for (int c = 0; c < k; ++c)
          if (best[p] >> c & 1) g.arcs.push_back({pairs[p].first, pairs[p].second, c + 1});
      out.push_back(g);
    }
    std::size_t i = 0;
    while (i < code.size() && code[i] == states - 1) code[i++] = 0;
    if (i == code.size()) break;
    ++code[i];
  }
  return out;
}

std::vector<Triangulation> all_triangulations(int d, int n) {
  const int slots = n * (d + 1);
  std::vector<Triangulation> out;
  std::vector<char> used(slots, 0);
  std::vector<Gluing> current;
  std::function<void(int)> rec = [&](int a) {
    while (a < slots && used[a]) ++a;
    if (a == slots) {
      out.emplace_back(d, n, current);
      return;
    }
    used[a] = 1;
    rec(a + 1);  // left unglued
    const int s1 = a / (d + 1), f1 = a % (d + 1);
    for (int b = a + 1; b < slots; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      const int s2 = b / (d + 1), f2 = b % (d + 1);
      Perm p(d + 1);
      std::iota(p.begin(), p.end(), 0);
      do {
        if (p[f1] != f2) continue;
        current.push_back({s1, f1, s2, f2, p});
        rec(a + 1);
        current.pop_back();
      } while (std::next_permutation(p.begin(), p.end()));
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec(0);
  return out;
}

SimpleGraph simple_of(const EdgeColouredGraph& g) { return SimpleGraph(g.n, g.skeleton_arcs()); }

SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  return SimpleGraph(n, arcs);
}

SimpleGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, arcs);
}

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
  return SimpleGraph(n, arcs);
}

}  // namespace tsupport
