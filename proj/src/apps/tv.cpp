#include "triwidth/apps/tv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include <json.hpp>

#include "triwidth/error.hpp"

namespace triwidth::apps {

using json = nlohmann::json;

const Complex& TvTable::gamma_at(const Sextuple& s) const {
  auto it = gamma.find(s);
  if (it == gamma.end()) {
    std::string key;
    for (int x : s) key += (key.empty() ? "" : ",") + half_string(x);
    throw ValidationError("no gamma value for " + key);
  }
  return it->second;
}

bool tv_admissible(int r, int a, int b, int c) {
  for (int x : {a, b, c})
    if (x < 0 || x > r - 2) throw ValidationError("colour " + half_string(x) + " outside I for r=" + std::to_string(r));
  return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b && a + b + c <= 2 * (r - 2);
}

bool tv_admissible_tet(int r, const Sextuple& s) {
  const auto& [i, j, k, l, m, n] = s;
  return tv_admissible(r, i, j, k) && tv_admissible(r, k, l, m) && tv_admissible(r, i, m, n) &&
         tv_admissible(r, j, l, n);
}

std::vector<Sextuple> admissible_sextuples(int r) {
  std::vector<Sextuple> out;
  Sextuple s{};
  std::function<void(int)> rec = [&](int pos) {
    if (pos == 6) {
      if (tv_admissible_tet(r, s)) out.push_back(s);
      return;
    }
    for (int a = 0; a <= r - 2; ++a) {
      s[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::string half_string(int numerator) {
  if (numerator % 2 == 0) return std::to_string(numerator / 2);
  return std::to_string(numerator) + "/2";
}

int parse_half(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size() || v < 0) throw 0;
      return 2 * v;
    }
    if (text.substr(slash) != "/2") throw 0;
    int v = std::stoi(text.substr(0, slash), &used);
    if (used != slash || v < 0 || v % 2 == 0) throw 0;
    return v;
  } catch (...) {
    throw ParseError("bad half-integer '" + text + "'");
  }
}

TvTable unit_tv_table(int r) {
  if (r < 3) throw ValidationError("r must be at least 3");
  TvTable t;
  t.r = r;
  t.beta.assign(r - 1, Complex(1, 0));
  for (const auto& s : admissible_sextuples(r)) t.gamma.emplace(s, Complex(1, 0));
  return t;
}

namespace {

Complex complex_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("malformed complex literal at " + where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

TvTable parse_tv_table(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("table must be a JSON object");
  for (const char* key : {"r", "alpha", "beta", "gamma"})
    if (!doc.contains(key)) throw ValidationError(std::string("table lacks \"") + key + "\"");
  if (!doc["r"].is_number_integer() || doc["r"].get<int>() < 3) throw ValidationError("table r must be an integer >= 3");
  TvTable t;
  t.r = doc["r"].get<int>();
  if (doc.contains("q0")) t.q0 = complex_of(doc["q0"], "q0");
  t.alpha = complex_of(doc["alpha"], "alpha");
  if (!doc["beta"].is_object() || !doc["gamma"].is_object()) throw ValidationError("beta and gamma must be objects");

  std::vector<bool> have(t.r - 1, false);
  t.beta.assign(t.r - 1, Complex(0, 0));
  for (const auto& [key, value] : doc["beta"].items()) {
    const int a = parse_half(key);
    if (a > t.r - 2) throw ValidationError("beta_" + key + " outside I for r=" + std::to_string(t.r));
    t.beta[a] = complex_of(value, "beta " + key);
    have[a] = true;
  }
  for (int a = 0; a <= t.r - 2; ++a)
    if (!have[a]) throw ValidationError("table missing beta_" + half_string(a));

  for (const auto& [key, value] : doc["gamma"].items()) {
    Sextuple s{};
    std::size_t start = 0;
    for (int pos = 0; pos < 6; ++pos) {
      const auto comma = key.find(',', start);
      if ((comma == std::string::npos) != (pos == 5)) throw ParseError("gamma key '" + key + "' needs six entries");
      s[pos] = parse_half(key.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (s[pos] > t.r - 2) throw ValidationError("gamma key '" + key + "' outside I");
      start = comma + 1;
    }
    t.gamma[s] = complex_of(value, "gamma " + key);
  }
  for (const auto& s : admissible_sextuples(t.r)) t.gamma_at(s);
  return t;
}

TvTable load_tv_table(const std::string& path) { return parse_tv_table(read_file(path)); }

std::string tv_table_json(const TvTable& t) {
  auto cj = [](const Complex& c) { return json::array({c.real(), c.imag()}); };
  json doc;
  doc["r"] = t.r;
  doc["q0"] = cj(t.q0);
  doc["alpha"] = cj(t.alpha);
  doc["beta"] = json::object();
  for (std::size_t a = 0; a < t.beta.size(); ++a) doc["beta"][half_string(static_cast<int>(a))] = cj(t.beta[a]);
  doc["gamma"] = json::object();
  for (const auto& [s, v] : t.gamma) {
    std::string key;
    for (int x : s) key += (key.empty() ? "" : ",") + half_string(x);
    doc["gamma"][key] = cj(v);
  }
  return doc.dump(1);
}

namespace {

struct TvShape {
  std::vector<std::array<int, 6>> tet_edges;  // weight order
  int edges = 0, vertices = 0;
};

TvShape shape_of(const Triangulation& t, const Skeleton& sk, int r) {
  if (t.dim() != 3) throw DimensionError("Turaev-Viro needs a 3-dimensional triangulation");
  if (!t.closed()) throw ValidationError("Turaev-Viro needs a closed triangulation; boundary facets present");
  if (r < 3) throw ValidationError("r must be at least 3");
  TvShape sh;
  sh.tet_edges.resize(t.size());
  for (int s = 0; s < t.size(); ++s)
    for (int k = 0; k < 6; ++k) sh.tet_edges[s][k] = sk.face_of(1, s, (1u << kTvEdges[k][0]) | (1u << kTvEdges[k][1]));
  sh.edges = static_cast<int>(sk.faces(1).size());
  sh.vertices = static_cast<int>(sk.faces(0).size());
  return sh;
}

struct TableWeights {
  const TvTable& t;
  Complex alpha() const { return t.alpha; }
  Complex beta(int a) const { return t.beta[a]; }
  Complex gamma(const Sextuple& s) const { return t.gamma_at(s); }
};

struct UnitWeights {
  BigInt alpha() const { return 1; }
  BigInt beta(int) const { return 1; }
  BigInt gamma(const Sextuple&) const { return 1; }
};

template <class R>
R power(R x, int e) {
  R out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

template <class R, class W>
R brute(const TvShape& sh, int r, const W& w, int jobs) {
  const int m = sh.edges;
  // Tetrahedra are checked as soon as their highest edge is coloured.
  std::vector<std::vector<int>> check_at(std::max(m, 1));
  for (std::size_t s = 0; s < sh.tet_edges.size(); ++s)
    check_at[*std::max_element(sh.tet_edges[s].begin(), sh.tet_edges[s].end())].push_back(static_cast<int>(s));
  auto sextuple = [&](const std::vector<int>& col, int s) {
    Sextuple x;
    for (int k = 0; k < 6; ++k) x[k] = col[sh.tet_edges[s][k]];
    return x;
  };
  auto run = [&](int first_colour) {
    R sum(0);
    std::vector<int> col(m, 0);
    std::function<void(int)> rec = [&](int e) {
      if (e == m) {
        R v(1);
        for (int x = 0; x < m; ++x) v *= w.beta(col[x]);
        for (std::size_t s = 0; s < sh.tet_edges.size(); ++s) v *= w.gamma(sextuple(col, static_cast<int>(s)));
        sum += v;
        return;
      }
      const int lo = e == 0 ? first_colour : 0, hi = e == 0 ? first_colour : r - 2;
      for (int c = lo; c <= hi; ++c) {
        col[e] = c;
        bool ok = true;
        for (int s : check_at[e])
          if (!tv_admissible_tet(r, sextuple(col, s))) {
            ok = false;
            break;
          }
        if (ok) rec(e + 1);
      }
    };
    rec(0);
    return sum;
  };
  R total(0);
  if (m == 0) {
    total = R(1);  // no tetrahedra either: one empty colouring
  } else {
    // Partial sums per colour of edge 0, reduced in colour order whatever the job count.
    std::vector<R> part(r - 1, R(0));
    jobs = std::max(1, std::min(jobs, r - 1));
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        for (int c = j; c <= r - 2; c += jobs) part[c] = run(c);
      });
    for (auto& th : pool) th.join();
    for (const R& p : part) total += p;
  }
  return total * power(w.alpha(), sh.vertices);
}

struct Frame {
  std::vector<int> bag, edges;  // sorted
};

template <class R, class W>
class TvDp {
 public:
  using Table = std::map<std::vector<std::uint8_t>, R>;

  TvDp(const TvShape& sh, int r, const W& w) : sh_(sh), r_(r), w_(w) {}

  Frame frame(const std::vector<int>& bag) const {
    Frame f{bag, {}};
    for (int s : bag) f.edges.insert(f.edges.end(), sh_.tet_edges[s].begin(), sh_.tet_edges[s].end());
    std::sort(f.edges.begin(), f.edges.end());
    f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
    return f;
  }

  // Forgotten tetrahedra contribute gamma, edges leaving the frame contribute beta,
  // then new edges are coloured subject to admissibility of new tetrahedra.
  Table convert(const Table& in, const Frame& from, const Frame& to) const {
    std::vector<int> keep(from.edges.size(), -1);
    for (std::size_t i = 0; i < from.edges.size(); ++i) keep[i] = index_in(to.edges, from.edges[i]);
    std::vector<int> forgotten, fresh;
    for (int s : from.bag)
      if (!std::binary_search(to.bag.begin(), to.bag.end(), s)) forgotten.push_back(s);
    for (int s : to.bag)
      if (!std::binary_search(from.bag.begin(), from.bag.end(), s)) fresh.push_back(s);
    std::vector<int> new_edges;
    for (std::size_t i = 0; i < to.edges.size(); ++i)
      if (!std::binary_search(from.edges.begin(), from.edges.end(), to.edges[i])) new_edges.push_back(static_cast<int>(i));

    Table projected;
    std::vector<std::uint8_t> next(to.edges.size(), 0);
    for (const auto& [key, value] : in) {
      R v = value;
      for (int s : forgotten) v *= w_.gamma(sextuple(key, from.edges, s));
      for (std::size_t i = 0; i < from.edges.size(); ++i)
        if (keep[i] < 0) v *= w_.beta(key[i]);
        else next[keep[i]] = key[i];
      auto [it, inserted] = projected.emplace(next, v);
      if (!inserted) it->second += v;
    }

    // Fresh tetrahedra are checked once their last new edge is coloured.
    std::vector<std::vector<int>> check_at(new_edges.size() + 1);
    for (int s : fresh) {
      int last = 0;
      for (int e : sh_.tet_edges[s]) {
        const int pos = index_in(to.edges, e);
        auto it = std::find(new_edges.begin(), new_edges.end(), pos);
        if (it != new_edges.end()) last = std::max(last, static_cast<int>(it - new_edges.begin()) + 1);
      }
      check_at[last].push_back(s);
    }
    Table out;
    for (auto& [key, value] : projected) {
      std::vector<std::uint8_t> cur = key;
      std::function<void(std::size_t)> rec = [&](std::size_t j) {
        for (int s : check_at[j])
          if (!tv_admissible_tet(r_, sextuple(cur, to.edges, s))) return;
        if (j == new_edges.size()) {
          auto [it, inserted] = out.emplace(cur, value);
          if (!inserted) it->second += value;
          return;
        }
        for (int c = 0; c <= r_ - 2; ++c) {
          cur[new_edges[j]] = static_cast<std::uint8_t>(c);
          rec(j + 1);
        }
      };
      rec(0);
    }
    return out;
  }

  static Table join(const Table& a, const Table& b) {
    Table out;
    for (const auto& [key, value] : a) {
      auto it = b.find(key);
      if (it != b.end()) out.emplace(key, value * it->second);
    }
    return out;
  }

  R run(const TreeDecomposition& td) const {
    const auto rooted = root_decomposition(td);
    const Frame empty;
    const Table start{{{}, R(1)}};
    std::vector<Table> tables(td.bags.size());
    for (int node : rooted.post_order) {
      const Frame here = frame(td.bags[node]);
      Table acc;
      bool first = true;
      for (int c : rooted.children[node]) {
        Table conv = convert(tables[c], frame(td.bags[c]), here);
        Table().swap(tables[c]);
        acc = first ? std::move(conv) : join(acc, conv);
        first = false;
      }
      if (first) acc = convert(start, empty, here);
      tables[node] = std::move(acc);
    }
    R total(0);
    if (!td.bags.empty()) {
      const Table final = convert(tables[rooted.root], frame(td.bags[rooted.root]), empty);
      if (auto it = final.find({}); it != final.end()) total = it->second;
    } else {
      total = R(1);
    }
    return total * power(w_.alpha(), sh_.vertices);
  }

 private:
  static int index_in(const std::vector<int>& sorted, int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    return it != sorted.end() && *it == x ? static_cast<int>(it - sorted.begin()) : -1;
  }

  Sextuple sextuple(const std::vector<std::uint8_t>& key, const std::vector<int>& edges, int s) const {
    Sextuple x;
    for (int k = 0; k < 6; ++k) x[k] = key[index_in(edges, sh_.tet_edges[s][k])];
    return x;
  }

  const TvShape& sh_;
  int r_;
  const W& w_;
};

void require_valid(const Triangulation& t, const TreeDecomposition& td) {
  const MultiGraph dual = dual_graph(t);
  if (auto chk = validate_decomposition(dual.n, dual.arcs, td); !chk.ok)
    throw ValidationError("decomposition invalid (" + chk.condition + "): " + chk.witness);
}

}  // namespace

Complex tv_bruteforce(const Triangulation& t, const Skeleton& sk, const TvTable& table, int jobs) {
  const TvShape sh = shape_of(t, sk, table.r);
  return brute<Complex>(sh, table.r, TableWeights{table}, jobs);
}

Complex tv_dp(const Triangulation& t, const Skeleton& sk, const TvTable& table, const TreeDecomposition& td) {
  const TvShape sh = shape_of(t, sk, table.r);
  require_valid(t, td);
  const TableWeights w{table};
  return TvDp<Complex, TableWeights>(sh, table.r, w).run(td);
}

BigInt tv_count_bruteforce(const Triangulation& t, const Skeleton& sk, int r, int jobs) {
  const TvShape sh = shape_of(t, sk, r);
  return brute<BigInt>(sh, r, UnitWeights{}, jobs);
}

BigInt tv_count_dp(const Triangulation& t, const Skeleton& sk, int r, const TreeDecomposition& td) {
  const TvShape sh = shape_of(t, sk, r);
  require_valid(t, td);
  const UnitWeights w;
  return TvDp<BigInt, UnitWeights>(sh, r, w).run(td);
}

}  // namespace triwidth::apps
