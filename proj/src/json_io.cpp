#include "triwidth/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "triwidth/error.hpp"
#include "triwidth/mso/parser.hpp"

namespace triwidth {

json complex_json(const std::complex<double>& c) { return json::array({c.real(), c.imag()}); }

json skeleton_json(const Skeleton& sk) {
  json faces = json::array();
  for (int i = 0; i <= sk.dim(); ++i) {
    json level = json::array();
    for (const Face& f : sk.faces(i)) {
      json inst = json::array();
      for (const Instance& x : f.instances) inst.push_back({{"simplex", x.simplex}, {"vertices", x.emb}});
      level.push_back({{"id", f.id}, {"canonical", f.canonical}, {"instances", inst}});
    }
    faces.push_back(level);
  }
  return {{"f_vector", sk.f_vector()}, {"self_identified", sk.self_identified()}, {"faces", faces}};
}

json dual_json(const MultiGraph& g) {
  json arcs = json::array();
  for (auto [u, v] : g.arcs) arcs.push_back({u, v});
  return {{"nodes", g.n}, {"arcs", arcs}, {"degrees", g.degrees()}};
}

json hasse_json(const HasseDiagram& h) {
  json nodes = json::array();
  for (std::size_t x = 0; x < h.nodes.size(); ++x) {
    const auto& info = h.nodes[x];
    if (info.level == HasseDiagram::kEmptyLevel)
      nodes.push_back({{"id", x}, {"level", "empty"}, {"face", nullptr}});
    else
      nodes.push_back({{"id", x}, {"level", info.level}, {"face", info.face}});
  }
  json arcs = json::array();
  for (const auto& a : h.graph.arcs) arcs.push_back({{"u", a.u}, {"v", a.v}, {"colour", h.graph.colours[a.colour - 1]}});
  return {{"dim", h.dim}, {"colours", h.graph.colours}, {"nodes", nodes}, {"arcs", arcs}};
}

json decomposition_json(const TreeDecomposition& td) {
  json links = json::array();
  for (auto [a, b] : td.links) links.push_back({a, b});
  return {{"width", td.width()}, {"bags", td.bags}, {"links", links}};
}

json check_json(const DecompositionCheck& c) {
  json j{{"valid", c.ok}};
  if (!c.ok) {
    j["condition"] = c.condition;
    j["witness"] = c.witness;
  }
  return j;
}

json encoded_json(const EncodedGraph& e) {
  json arcs = json::array();
  for (auto [u, v] : e.graph.arcs) arcs.push_back({u, v});
  json origin = json::array();
  for (const Origin& o : e.origin) {
    switch (o.kind) {
      case Origin::Kind::Node: origin.push_back({{"kind", "node"}, {"node", o.a}}); break;
      case Origin::Kind::Arc: origin.push_back({{"kind", "arc"}, {"arc", o.a}}); break;
      case Origin::Kind::Clique: origin.push_back({{"kind", "clique"}, {"colour", o.a}, {"member", o.b}}); break;
    }
  }
  return {{"nodes", e.graph.n}, {"arcs", arcs}, {"size", e.graph.size()}, {"origin", origin}};
}

json assignment_json(const mso::Assignment& a) {
  json j = json::object();
  for (const auto& [name, x] : a.elements) j[name] = x;
  for (const auto& [name, xs] : a.sets) j[name] = xs;
  return j;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::vector<mso::VarDecl> decls_from_json(const json& j) {
  std::vector<mso::VarDecl> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw ParseError("\"free\" must be a list of {name, sort}");
  for (const auto& d : j) {
    if (!d.is_object() || !d.contains("name") || !d.contains("sort") || !d["name"].is_string() || !d["sort"].is_string())
      throw ParseError("free variable entries need string \"name\" and \"sort\"");
    out.push_back({d["name"].get<std::string>(), mso::parse_sort(d["sort"].get<std::string>())});
  }
  return out;
}

json decls_json(const std::vector<mso::VarDecl>& decls) {
  json j = json::array();
  for (const auto& d : decls) j.push_back({{"name", d.name}, {"sort", d.sort.str()}});
  return j;
}

namespace {

// Decimal only: cpp_int would read a leading 0 as octal.
mso::BigInt decimal(std::string text) {
  bool negative = !text.empty() && (text[0] == '-' || text[0] == '+');
  if (negative) {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad integer");
  text.erase(0, std::min(text.find_first_not_of('0'), text.size() - 1));
  mso::BigInt v(text);
  return negative ? mso::BigInt(-v) : v;
}

}  // namespace

mso::Rational rational_from_json(const json& j) {
  std::string text;
  if (j.is_number_integer()) return mso::Rational(j.get<long long>());
  if (j.is_number()) text = j.dump();
  else if (j.is_string()) text = j.get<std::string>();
  else throw ParseError("expected a rational number, got " + j.dump());
  try {
    if (auto dot = text.find('.'); dot != std::string::npos && text.find_first_of("eE") == std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      mso::BigInt den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return mso::Rational(decimal(digits), den);
    }
    if (auto slash = text.find('/'); slash != std::string::npos)
      {
        const mso::BigInt den = decimal(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator");
        return mso::Rational(decimal(text.substr(0, slash)), den);
      }
    return mso::Rational(decimal(text));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("malformed complex literal " + j.dump() + ": expected [re, im]");
}

}  // namespace triwidth
