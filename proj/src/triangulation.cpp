#include "triwidth/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "triwidth/error.hpp"

namespace triwidth {

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

namespace {

std::string describe(const Gluing& g) {
  std::ostringstream os;
  os << "glue " << g.s1 << ' ' << g.f1 << ' ' << g.s2 << ' ' << g.f2;
  return os.str();
}

bool is_permutation_of(const Perm& p, int d) {
  if (static_cast<int>(p.size()) != d + 1) return false;
  std::vector<bool> seen(d + 1, false);
  for (int x : p) {
    if (x < 0 || x > d || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

Triangulation::Triangulation(int dim, int n, const std::vector<Gluing>& gluings) : dim_(dim), n_(n) {
  if (dim < 1 || dim > kMaxDim)
    throw ValidationError("dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kMaxDim));
  if (n < 0) throw ValidationError("negative simplex count");
  slots_.assign(static_cast<std::size_t>(n) * (dim + 1), Slot{});
  for (const Gluing& g : gluings) {
    if (g.s1 < 0 || g.s1 >= n || g.s2 < 0 || g.s2 >= n)
      throw ValidationError(describe(g) + ": simplex index out of range");
    if (g.f1 < 0 || g.f1 > dim || g.f2 < 0 || g.f2 > dim)
      throw ValidationError(describe(g) + ": facet index out of range");
    if (!is_permutation_of(g.map, dim))
      throw ValidationError(describe(g) + ": map is not a permutation of 0.." + std::to_string(dim));
    if (g.s1 == g.s2 && g.f1 == g.f2) throw ValidationError(describe(g) + ": facet glued to itself");
    if (g.map[g.f1] != g.f2) throw ValidationError(describe(g) + ": map does not send f1 to f2");
    Slot& a = slots_[slot(g.s1, g.f1)];
    Slot& b = slots_[slot(g.s2, g.f2)];
    if (a.s >= 0 || b.s >= 0) {
      // An exact reverse (or repeated) record of an existing gluing is accepted.
      bool same = a.s == g.s2 && a.f == g.f2 && a.map == g.map && b.s == g.s1 && b.f == g.f1;
      if (!same) throw ValidationError(describe(g) + ": duplicate slot use");
      continue;
    }
    a = Slot{g.s2, g.f2, g.map};
    b = Slot{g.s1, g.f1, inverse(g.map)};
  }
  for (int s = 0; s < n; ++s)
    for (int f = 0; f <= dim; ++f) {
      const Slot& a = slots_[slot(s, f)];
      if (a.s < 0) continue;
      if (std::pair(s, f) < std::pair(a.s, a.f)) gluings_.push_back(Gluing{s, f, a.s, a.f, a.map});
    }
}

int Triangulation::boundary_facets() const {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(), [](const Slot& x) { return x.s < 0; }));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Triangulation parse_triangulation(std::string_view text) {
  int dim = -1, n = -1;
  std::vector<Gluing> gluings;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto need_int = [&](const char* what) {
      long long v;
      if (!(ls >> v)) throw ParseError(std::string("expected integer ") + what, lineno, 1);
      if (v < -1000000000LL || v > 1000000000LL) throw ParseError(std::string("integer out of range: ") + what, lineno, 1);
      return static_cast<int>(v);
    };
    if (key == "dim") {
      if (dim >= 0) throw ParseError("repeated dim record", lineno, 1);
      dim = need_int("after dim");
      if (dim < 1 || dim > Triangulation::kMaxDim) throw ParseError("unsupported dimension", lineno, 1);
    } else if (key == "simplices") {
      if (n >= 0) throw ParseError("repeated simplices record", lineno, 1);
      n = need_int("after simplices");
      if (n < 0) throw ParseError("negative simplex count", lineno, 1);
    } else if (key == "glue") {
      if (dim < 0) throw ParseError("glue before dim", lineno, 1);
      Gluing g;
      g.s1 = need_int("s1");
      g.f1 = need_int("f1");
      g.s2 = need_int("s2");
      g.f2 = need_int("f2");
      std::string colon;
      if (!(ls >> colon) || colon != ":") throw ParseError("expected ':' before the vertex map", lineno, 1);
      for (int i = 0; i <= dim; ++i) g.map.push_back(need_int("in vertex map"));
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens in glue record", lineno, 1);
      gluings.push_back(std::move(g));
    } else {
      throw ParseError("unknown record '" + key + "'", lineno, 1);
    }
    std::string extra;
    if (key != "glue" && (ls >> extra)) throw ParseError("trailing tokens", lineno, 1);
  }
  if (dim < 0) throw ParseError("missing dim record");
  if (n < 0) throw ParseError("missing simplices record");
  return Triangulation(dim, n, gluings);
}

Triangulation load_triangulation(const std::string& path) { return parse_triangulation(read_file(path)); }

std::string to_text(const Triangulation& t) {
  std::ostringstream os;
  os << "dim " << t.dim() << "\nsimplices " << t.size() << "\n";
  for (const Gluing& g : t.gluings()) {
    os << "glue " << g.s1 << ' ' << g.f1 << ' ' << g.s2 << ' ' << g.f2 << " :";
    for (int x : g.map) os << ' ' << x;
    os << "\n";
  }
  return os.str();
}

Triangulation subdivide_simplex(const Triangulation& t, int s) {
  if (s < 0 || s >= t.size()) throw ValidationError("simplex index " + std::to_string(s) + " out of range");
  const int d = t.dim(), n = t.size();
  auto idx = [&](int j) { return j == 0 ? s : n + j - 1; };
  std::vector<Gluing> out;
  for (const Gluing& g : t.gluings()) {
    Gluing h = g;
    if (g.s1 == s) h.s1 = idx(g.f1);
    if (g.s2 == s) h.s2 = idx(g.f2);
    out.push_back(std::move(h));
  }
  // Facet k of the j-th piece is the cone over the original facet pair {j,k}.
  for (int j = 0; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) {
      Perm p(d + 1);
      for (int x = 0; x <= d; ++x) p[x] = x;
      std::swap(p[j], p[k]);
      out.push_back(Gluing{idx(j), k, idx(k), j, p});
    }
  return Triangulation(d, n + d, out);
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto [a, b] : arcs) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

MultiGraph dual_graph(const Triangulation& t) {
  MultiGraph g;
  g.n = t.size();
  for (const Gluing& x : t.gluings()) g.arcs.emplace_back(x.s1, x.s2);
  return g;
}

}  // namespace triwidth
