#include "triwidth/cli.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "triwidth/apps/encodings.hpp"
#include "triwidth/apps/morse.hpp"
#include "triwidth/apps/taut.hpp"
#include "triwidth/apps/tv.hpp"
#include "triwidth/error.hpp"
#include "triwidth/graphs.hpp"
#include "triwidth/hasse.hpp"
#include "triwidth/json_io.hpp"
#include "triwidth/mso/evaluate.hpp"
#include "triwidth/mso/parser.hpp"
#include "triwidth/mso/solve.hpp"
#include "triwidth/mso/structure.hpp"
#include "triwidth/mso/translate.hpp"
#include "triwidth/skeleton.hpp"
#include "triwidth/tdecomp.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth {

namespace {

struct Flags {
  std::string td;
  bool oracle = false;
  std::uint64_t budget = 0;  // 0 keeps each module's default
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int jobs = 1;
};

bool is_triangulation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first[0] == '#') continue;
    return first == "dim";
  }
  return false;
}

struct Input {
  bool tri = false;
  Triangulation t;
  EdgeColouredGraph g;
};

Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  Input in;
  in.tri = is_triangulation_text(text);
  if (in.tri) in.t = parse_triangulation(text);
  else in.g = parse_graph(text);
  return in;
}

// Arcs that a decomposition of this input must cover: dual graph or colour-free skeleton.
std::pair<int, std::vector<std::pair<int, int>>> decomposition_target(const Input& in) {
  if (in.tri) {
    MultiGraph d = dual_graph(in.t);
    return {d.n, d.arcs};
  }
  return {in.g.n, in.g.skeleton_arcs()};
}

TreeDecomposition decomposition_for(const Flags& f, const Input& in) {
  if (!f.td.empty()) return parse_decomposition(read_file(f.td));
  auto [n, arcs] = decomposition_target(in);
  if (n == 0) return {};
  return decompose(n, arcs, DecomposeMode::Heuristic);
}

mso::EvalOptions eval_options(const Flags& f) {
  mso::EvalOptions o;
  if (f.budget) o.budget = f.budget;
  return o;
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + " is not valid JSON: " + e.what());
  }
}

Triangulation require_tri(const Input& in, const std::string& what) {
  if (!in.tri) throw ValidationError(what + " needs a triangulation file");
  return in.t;
}

mso::Structure structure_of(const Input& in, const Skeleton* sk) {
  if (in.tri) return mso::Structure::from_triangulation(in.t, *sk);
  if (in.g.k() == 0) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : in.g.arcs) arcs.emplace_back(a.u, a.v);
    return mso::Structure::from_graph(SimpleGraph(in.g.n, arcs));
  }
  return mso::Structure::from_graph(in.g);
}

mso::Assignment assignment_from_json(const json& j, const std::vector<mso::VarDecl>& free) {
  mso::Assignment a;
  for (const auto& d : free) {
    if (!j.is_object() || !j.contains(d.name)) continue;
    const json& v = j[d.name];
    if (d.sort.is_set()) {
      if (!v.is_array()) throw ParseError("set variable " + d.name + " needs a list of elements");
      a.sets[d.name] = v.get<std::vector<int>>();
    } else {
      if (!v.is_number_integer()) throw ParseError("element variable " + d.name + " needs an integer");
      a.elements[d.name] = v.get<int>();
    }
  }
  return a;
}

// Carries elements of the original structure to the encoded one.
int lift_element(const Input& in, const EncodedGraph* enc, const HasseDiagram* h, const mso::Sort& s, int x) {
  using K = mso::Sort::Kind;
  const mso::Sort e = s.element();
  if (in.tri) return h->node(e.dim, x);
  if (e.kind == K::Node) return enc->node_image.at(x);
  if (e.kind == K::Arc) return enc->arc_image.at(x);
  throw SortError("cannot lift sort " + s.str());
}

json cmd_info(const Input& in) {
  const Triangulation& t = in.t;
  Skeleton sk(t);
  return {{"dim", t.dim()},
          {"simplices", t.size()},
          {"gluings", t.gluings().size()},
          {"boundary_facets", t.boundary_facets()},
          {"closed", t.closed()},
          {"f_vector", sk.f_vector()},
          {"euler_characteristic", sk.euler_characteristic()},
          {"self_identified", sk.self_identified()},
          {"dual_degrees", dual_graph(t).degrees()}};
}

json cmd_hasse(const Triangulation& t) {
  Skeleton sk(t);
  HasseDiagram h = build_hasse(t, sk);
  json j = hasse_json(h);
  const long long bound = hasse_size_bound(t.dim(), t.size());
  j["size"] = h.size();
  j["size_bound"] = bound;
  j["bound_asserted"] = !sk.self_identified();
  j["within_bound"] = h.size() <= bound;
  return j;
}

json cmd_tw(const std::string& verb, const Flags& f, const Input& in, const std::string& mode) {
  auto [n, arcs] = decomposition_target(in);
  if (verb == "check") {
    if (f.td.empty()) throw ValidationError("tw check needs --td");
    TreeDecomposition td = parse_decomposition(read_file(f.td));
    json j = check_json(validate_decomposition(n, arcs, td));
    j["width"] = td.width();
    return j;
  }
  if (verb == "make") {
    if (mode != "heuristic" && mode != "exact") throw ValidationError("--mode must be heuristic or exact");
    TreeDecomposition td =
        decompose(n, arcs, mode == "exact" ? DecomposeMode::Exact : DecomposeMode::Heuristic);
    json j = decomposition_json(td);
    j["mode"] = mode;
    return j;
  }
  TreeDecomposition td = decomposition_for(f, in);
  if (verb == "lift-encoded") {
    if (in.tri) throw ValidationError("lift-encoded needs an edge-coloured graph file");
    in.g.validate();
    EncodedGraph enc = encode_simple(in.g);
    TreeDecomposition lifted = lift_to_encoded(td, in.g, enc);
    json j = decomposition_json(lifted);
    j["input_width"] = td.width();
    j["width_bound"] = td.width() + binomial(in.g.k() + 3, 2) - 1;
    j["check"] = check_json(validate_decomposition(enc.graph.n, enc.graph.arcs, lifted));
    return j;
  }
  if (verb == "lift-hasse") {
    const Triangulation t = require_tri(in, "lift-hasse");
    Skeleton sk(t);
    HasseDiagram h = build_hasse(t, sk);
    TreeDecomposition lifted = lift_to_hasse(td, t, sk, h);
    json j = decomposition_json(lifted);
    j["input_width"] = td.width();
    j["width_bound"] = ((1LL << (t.dim() + 1)) - 1) * (td.width() + 1);
    j["check"] = check_json(validate_decomposition(h.graph.n, h.graph.skeleton_arcs(), lifted));
    return j;
  }
  throw ValidationError("unknown tw verb " + verb);
}

json cmd_encode(const Input& in) {
  if (in.tri) throw ValidationError("encode needs an edge-coloured graph file");
  in.g.validate();
  EncodedGraph enc = encode_simple(in.g);
  json j = encoded_json(enc);
  j["size_formula"] = encoded_size_formula(in.g.n, static_cast<long long>(in.g.arcs.size()), in.g.k());
  return j;
}

struct Problem {
  mso::F formula;
  std::vector<mso::VarDecl> free;
};

Problem problem_formula(const json& p, const mso::Signature& sig) {
  if (!p.contains("formula") || !p["formula"].is_string()) throw ParseError("problem needs a \"formula\" string");
  Problem out;
  out.free = decls_from_json(p.value("free", json()));
  out.formula = mso::parse_formula(p["formula"].get<std::string>(), sig, out.free);
  return out;
}

json cmd_mso(const std::string& verb, const Flags& f, const json& p, const Input& in, bool lift,
             const std::string& table_path) {
  std::optional<Skeleton> sk;
  if (in.tri) sk.emplace(in.t);
  const mso::Structure st = structure_of(in, sk ? &*sk : nullptr);
  const auto opt = eval_options(f);
  const std::string builtin = p.value("builtin", "");

  if (verb == "check") {
    Problem pr = problem_formula(p, st.signature());
    const mso::Assignment a = assignment_from_json(p.value("assignment", json::object()), pr.free);
    json j{{"value", mso::evaluate(st, pr.formula, pr.free, a, opt)}};
    if (lift) {
      mso::Assignment la;
      std::optional<EncodedGraph> enc;
      std::optional<HasseDiagram> h;
      mso::Translation tr;
      if (in.tri) {
        h.emplace(build_hasse(in.t, *sk));
        tr = mso::translate_triangulation(pr.formula, in.t.dim(), pr.free);
      } else {
        if (in.g.k() == 0) throw ValidationError("--lift needs a coloured graph");
        enc.emplace(encode_simple(in.g));
        tr = mso::translate_coloured(pr.formula, in.g.k(), pr.free);
      }
      for (const auto& d : pr.free) {
        if (d.sort.is_set()) {
          auto& dst = la.sets[d.name];
          for (int x : a.sets.at(d.name)) dst.push_back(lift_element(in, enc ? &*enc : nullptr, h ? &*h : nullptr, d.sort, x));
        } else {
          la.elements[d.name] = lift_element(in, enc ? &*enc : nullptr, h ? &*h : nullptr, d.sort, a.elements.at(d.name));
        }
      }
      const mso::Structure lst =
          in.tri ? mso::Structure::from_graph(h->graph) : mso::Structure::from_graph(enc->graph);
      j["lifted_value"] = mso::evaluate(lst, tr.formula, tr.free, la, opt);
      j["lifted_formula_size"] = mso::formula_size(tr.formula);
    }
    return j;
  }

  if (verb == "opt") {
    mso::ExtremumProblem ep;
    if (builtin == "morse") {
      if (!in.tri) throw ValidationError("the morse problem needs a triangulation");
      ep = apps::morse_problem(in.t.dim());
    } else {
      Problem pr = problem_formula(p, st.signature());
      ep.formula = pr.formula;
      ep.free = pr.free;
      const json& c = p.value("coeffs", json::array());
      if (c.is_array()) {
        for (const auto& x : c) ep.coeffs.push_back(rational_from_json(x));
      } else if (c.is_object()) {
        for (const auto& d : ep.free) ep.coeffs.push_back(c.contains(d.name) ? rational_from_json(c[d.name]) : 0);
      }
      if (ep.coeffs.size() != ep.free.size()) throw ParseError("one coefficient per free set variable expected");
    }
    const mso::ExtremumResult r = mso::solve_extremum(st, ep, opt);
    json j{{"feasible", r.feasible}};
    if (r.feasible) {
      j["value"] = r.value.str();
      j["witness"] = assignment_json(r.witness);
    }
    return j;
  }

  if (verb == "eval") {
    if (builtin == "tv") {
      if (!in.tri) throw ValidationError("the tv problem needs a triangulation");
      if (table_path.empty()) throw ValidationError("the tv problem needs --table");
      const apps::TvTable table = apps::load_tv_table(table_path);
      auto ep = apps::tv_problem(in.t, *sk, table);
      return {{"value", complex_json(mso::solve_evaluation(st, ep, opt))}};
    }
    Problem pr = problem_formula(p, st.signature());
    const std::string mode = p.value("mode", "multiplicative");
    if (mode != "multiplicative" && mode != "additive") throw ParseError("mode must be additive or multiplicative");
    const json& w = p.value("weights", json::object());
    bool complex_ring = false;
    for (const auto& d : pr.free)
      if (w.contains(d.name))
        for (const auto& x : w[d.name]) complex_ring = complex_ring || x.is_array();
    auto fill = [&](auto conv, auto& ep) {
      ep.formula = pr.formula;
      ep.free = pr.free;
      ep.mode = mode == "additive" ? mso::EvalMode::Additive : mso::EvalMode::Multiplicative;
      for (const auto& d : pr.free) {
        if (!w.contains(d.name)) throw ParseError("no weights for " + d.name);
        ep.weights.emplace_back();
        for (const auto& x : w[d.name]) ep.weights.back().push_back(conv(x));
      }
    };
    if (complex_ring) {
      mso::EvaluationProblem<std::complex<double>> ep;
      fill([](const json& x) { return complex_from_json(x); }, ep);
      return {{"value", complex_json(mso::solve_evaluation(st, ep, opt))}};
    }
    mso::EvaluationProblem<mso::Rational> ep;
    fill([](const json& x) { return rational_from_json(x); }, ep);
    return {{"value", mso::solve_evaluation(st, ep, opt).str()}};
  }
  throw ValidationError("unknown mso verb " + verb);
}

json cmd_taut(const Flags& f, const Input& in, bool verify) {
  const Triangulation t = require_tri(in, "taut");
  Skeleton sk(t);
  auto by_dp = [&] { return apps::taut_dp(t, sk, decomposition_for(f, in)); };
  auto by_brute = [&] { return apps::taut_bruteforce(t, sk, f.jobs); };
  const auto w = f.oracle ? by_brute() : by_dp();
  json j{{"exists", w.has_value()}, {"backend", f.oracle ? "bruteforce" : "dp"}};
  if (w) j["witness"] = *w;
  if (verify) j["agree"] = (f.oracle ? by_dp() : by_brute()).has_value() == w.has_value();
  return j;
}

json cmd_morse(const Flags& f, const Input& in, bool encoding) {
  const Triangulation t = require_tri(in, "morse");
  Skeleton sk(t);
  HasseDiagram h = build_hasse(t, sk);
  apps::MorseOptions mo;
  if (f.budget) mo.budget = f.budget;
  const apps::MorseResult r = apps::morse_optimal(h, mo);
  json arcs = json::array();
  for (int a : r.matching) {
    const auto& arc = h.graph.arcs[a];
    arcs.push_back({{"arc", a}, {"u", arc.u}, {"v", arc.v}, {"colour", h.graph.colours[arc.colour - 1]}});
  }
  json j{{"c_min", r.c_min}, {"matching_size", r.matching.size()}, {"matching", arcs}};
  if (encoding) {
    const auto st = mso::Structure::from_triangulation(t, sk);
    const auto er = mso::solve_extremum(st, apps::morse_problem(t.dim()), eval_options(f));
    j["encoding_c_min"] = er.feasible ? er.value.str() : "infeasible";
  }
  return j;
}

json cmd_tv(const Flags& f, const Input& in, int r, const std::string& table_path, bool count, bool verify) {
  const Triangulation t = require_tri(in, "tv");
  Skeleton sk(t);
  const std::string backend = f.oracle ? "bruteforce" : "dp";
  if (count || table_path.empty()) {
    if (r < 3) throw ValidationError("tv needs --r >= 3");
    auto by_dp = [&] { return apps::tv_count_dp(t, sk, r, decomposition_for(f, in)); };
    auto by_brute = [&] { return apps::tv_count_bruteforce(t, sk, r, f.jobs); };
    const apps::BigInt c = f.oracle ? by_brute() : by_dp();
    json j{{"count", c.str()}, {"r", r}, {"backend", backend}};
    if (verify) j["agree"] = (f.oracle ? by_dp() : by_brute()) == c;
    return j;
  }
  const apps::TvTable table = apps::load_tv_table(table_path);
  if (r && r != table.r)
    throw ValidationError("--r " + std::to_string(r) + " does not match table r=" + std::to_string(table.r));
  auto by_dp = [&] { return apps::tv_dp(t, sk, table, decomposition_for(f, in)); };
  auto by_brute = [&] { return apps::tv_bruteforce(t, sk, table, f.jobs); };
  const apps::Complex v = f.oracle ? by_brute() : by_dp();
  json j{{"value", complex_json(v)}, {"r", table.r}, {"backend", backend}};
  if (verify) {
    const apps::Complex o = f.oracle ? by_dp() : by_brute();
    j["agree"] = std::abs(v - o) <= f.tol * std::max({1.0, std::abs(v), std::abs(o)});
  }
  return j;
}

json cmd_subdivide(const Flags& f, const Input& in, int simplex) {
  const Triangulation t = require_tri(in, "subdivide");
  if (simplex < 0) {
    if (t.size() == 0) throw ValidationError("nothing to subdivide");
    std::mt19937_64 rng(f.seed);
    simplex = std::uniform_int_distribution<int>(0, t.size() - 1)(rng);
  }
  const Triangulation out = subdivide_simplex(t, simplex);
  return {{"simplex", simplex}, {"simplices", out.size()}, {"triangulation", to_text(out)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Treewidth-parameterised algorithms on triangulations", "triwidth"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--td", f.td, "tree decomposition file for the dual graph or graph");
  app.add_flag("--oracle", f.oracle, "use the brute-force backend");
  app.add_option("--budget", f.budget, "step budget for searches and evaluation");
  app.add_option("--seed", f.seed, "seed for random choices");
  app.add_option("--tol", f.tol, "relative tolerance for complex comparisons");
  app.add_option("--jobs", f.jobs, "worker threads for brute force")->check(CLI::PositiveNumber);

  std::string path, problem_path, table_path, mode = "heuristic";
  int r = 0, simplex = -1;
  bool count = false, verify = false, lift = false, encoding = false;

  auto* info = app.add_subcommand("info", "summary of a triangulation");
  info->add_option("file", path)->required();
  auto* faces = app.add_subcommand("faces", "face skeleton with instances");
  faces->add_option("file", path)->required();
  auto* dual = app.add_subcommand("dual", "dual graph");
  dual->add_option("file", path)->required();
  auto* hasse = app.add_subcommand("hasse", "coloured Hasse diagram");
  hasse->add_option("file", path)->required();

  auto* tw = app.add_subcommand("tw", "tree decompositions");
  tw->require_subcommand(1);
  tw->fallthrough();
  std::string tw_verb;
  const std::pair<const char*, const char*> tw_verbs[] = {
      {"check", "validate --td against a dual graph or graph"},
      {"make", "compute a decomposition"},
      {"lift-encoded", "lift a graph decomposition to the simple-graph encoding"},
      {"lift-hasse", "lift a dual-graph decomposition to the Hasse diagram"}};
  for (const auto& [verb, what] : tw_verbs) {
    auto* sub = tw->add_subcommand(verb, what);
    sub->add_option("file", path)->required();
    sub->fallthrough();
    sub->callback([&tw_verb, v = verb] { tw_verb = v; });
    if (std::string(verb) == "make") sub->add_option("--mode", mode, "heuristic or exact");
  }

  auto* encode = app.add_subcommand("encode", "simple-graph encoding of an edge-coloured graph");
  encode->add_option("file", path)->required();

  auto* mso_cmd = app.add_subcommand("mso", "logic on graphs and triangulations");
  mso_cmd->require_subcommand(1);
  mso_cmd->fallthrough();
  std::string mso_verb;
  const std::pair<const char*, const char*> mso_verbs[] = {
      {"check", "decide a sentence"},
      {"opt", "minimise a linear function of free set sizes"},
      {"eval", "weighted sum or product over all solutions"}};
  for (const auto& [verb, what] : mso_verbs) {
    auto* sub = mso_cmd->add_subcommand(verb, what);
    sub->add_option("problem", problem_path, "problem JSON")->required();
    sub->add_option("file", path, "graph or triangulation")->required();
    sub->fallthrough();
    sub->callback([&mso_verb, v = verb] { mso_verb = v; });
    if (std::string(verb) == "check") sub->add_flag("--lift", lift, "also evaluate the translated formula");
    if (std::string(verb) == "eval") sub->add_option("--table", table_path, "Turaev-Viro table for builtin tv");
  }

  auto* taut = app.add_subcommand("taut", "taut angle structure");
  taut->add_option("file", path)->required();
  taut->add_flag("--verify", verify, "run both backends");
  auto* morse = app.add_subcommand("morse", "optimal Morse matching");
  morse->add_option("file", path)->required();
  morse->add_flag("--encoding", encoding, "also solve the logic encoding");
  auto* tv = app.add_subcommand("tv", "Turaev-Viro invariant");
  tv->add_option("file", path)->required();
  tv->add_option("--r", r, "r >= 3");
  tv->add_option("--table", table_path, "constant table JSON");
  tv->add_flag("--count", count, "count admissible colourings exactly");
  tv->add_flag("--verify", verify, "run both backends");
  auto* subdivide = app.add_subcommand("subdivide", "(1, d+1) move");
  subdivide->add_option("file", path)->required();
  subdivide->add_option("--simplex", simplex, "simplex to subdivide; random from --seed if absent");

  // Name the offending token rather than reporting a missing subcommand.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--td" || a == "--budget" || a == "--seed" || a == "--tol" || a == "--jobs") {
      ++i;
      continue;
    }
    if (!a.empty() && a[0] == '-') continue;
    if (!app.get_subcommand_no_throw(a)) {
      out << error_json("usage", "unknown subcommand '" + a + "'").dump(2) << "\n";
      return 1;
    }
    break;
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return 1;
  }

  try {
    json result;
    if (info->parsed()) result = cmd_info({true, load_triangulation(path), {}});
    else if (faces->parsed()) result = skeleton_json(Skeleton(load_triangulation(path)));
    else if (dual->parsed()) result = dual_json(dual_graph(load_triangulation(path)));
    else if (hasse->parsed()) result = cmd_hasse(load_triangulation(path));
    else if (tw->parsed()) result = cmd_tw(tw_verb, f, load_input(path), mode);
    else if (encode->parsed()) result = cmd_encode(load_input(path));
    else if (mso_cmd->parsed())
      result = cmd_mso(mso_verb, f, read_json_file(problem_path), load_input(path), lift, table_path);
    else if (taut->parsed()) result = cmd_taut(f, load_input(path), verify);
    else if (morse->parsed()) result = cmd_morse(f, load_input(path), encoding);
    else if (tv->parsed()) result = cmd_tv(f, load_input(path), r, table_path, count, verify);
    else if (subdivide->parsed()) result = cmd_subdivide(f, load_input(path), simplex);
    out << result.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    out << error_json(e.kind(), e.what()).dump(2) << "\n";
  } catch (const json::exception& e) {
    out << error_json("parse", e.what()).dump(2) << "\n";
  } catch (const std::exception& e) {
    out << error_json("error", e.what()).dump(2) << "\n";
  }
  return 1;
}

}  // namespace triwidth
