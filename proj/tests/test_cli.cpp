#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "triwidth/cli.hpp"

using namespace tsupport;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  json doc;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream os;
  const int code = triwidth::run(args, os);
  return {code, json::parse(os.str())};
}

std::string d(const std::string& name) { return data_path(name); }
std::string problem(const std::string& name) { return data_path("problems/" + name + ".json"); }

// Numbers compare to 1e-9 relative; everything else exactly.
bool same_json(const json& a, const json& b) {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
  }
  if (a.type() != b.type() || a.size() != b.size()) return false;
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !same_json(it.value(), b[it.key()])) return false;
    return true;
  }
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same_json(a[i], b[i])) return false;
    return true;
  }
  return a == b;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& golden_runs() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
      {"info_klein", {"info", d("klein.tri")}},
      {"info_solid_torus", {"info", d("solid_torus.tri")}},
      {"faces_klein", {"faces", d("klein.tri")}},
      {"dual_klein", {"dual", d("klein.tri")}},
      {"hasse_klein", {"hasse", d("klein.tri")}},
      {"tw_make_chain7", {"tw", "make", "--mode", "exact", d("chain7.graph")}},
      {"tw_make_closed2", {"tw", "make", d("closed2.tri")}},
      {"tw_lift_encoded", {"tw", "lift-encoded", d("coloured.graph")}},
      {"tw_lift_hasse", {"tw", "lift-hasse", d("klein.tri")}},
      {"encode_coloured", {"encode", d("coloured.graph")}},
      {"mso_check_three_colouring", {"mso", "check", problem("three_colouring"), d("chain7.graph")}},
      {"mso_check_lift", {"mso", "check", "--lift", problem("edge_cover"), d("klein.tri")}},
      {"mso_opt_dominating", {"mso", "opt", problem("dominating"), d("chain7.graph")}},
      {"mso_opt_morse", {"mso", "opt", problem("morse"), d("klein.tri")}},
      {"mso_eval_count", {"mso", "eval", problem("independent_count"), d("chain7.graph")}},
      {"mso_eval_tv", {"mso", "eval", "--table", d("t3.json"), problem("tv"), d("closed2.tri")}},
      {"taut_closed2", {"taut", "--verify", d("closed2.tri")}},
      {"morse_klein", {"morse", d("klein.tri")}},
      {"tv_closed2", {"tv", "--r", "3", "--table", d("t3.json"), d("closed2.tri")}},
      {"tv_count", {"tv", "--r", "4", "--count", "--verify", d("s3_2tet.tri")}},
      {"subdivide_triangle", {"subdivide", "--simplex", "0", d("triangle.tri")}},
  };
  return runs;
}

}  // namespace

TEST_CASE("outputs match the frozen documents") {
  const std::string dir = TRIWIDTH_GOLDEN_DIR;
  const bool update = std::getenv("TRIWIDTH_UPDATE_GOLDEN") != nullptr;
  for (const auto& [name, args] : golden_runs()) {
    Outcome o = cli(args);
    const std::string path = dir + "/" + name + ".json";
    if (update) {
      std::filesystem::create_directories(dir);
      std::ofstream(path) << o.doc.dump(2) << "\n";
      continue;
    }
    CHECK_MESSAGE(o.code == 0, name);
    json want = json::parse(read_file(path));
    CHECK_MESSAGE(same_json(o.doc, want), name << ": " << o.doc.dump());
  }
}

TEST_CASE("info reports the worked example") {
  Outcome o = cli({"info", d("klein.tri")});
  CHECK(o.code == 0);
  CHECK(o.doc["f_vector"] == json::array({1, 3, 2}));
  CHECK(o.doc["dual_degrees"] == json::array({3, 3}));
}

TEST_CASE("application commands") {
  Outcome morse = cli({"morse", d("klein.tri")});
  CHECK(morse.doc["c_min"] == 4);
  CHECK(morse.doc["matching_size"] == 1);

  Outcome tv = cli({"tv", "--r", "3", "--table", d("t3.json"), d("closed2.tri")});
  CHECK(tv.doc["backend"] == "dp");
  REQUIRE(tv.doc["value"].is_array());
  CHECK(tv.doc["value"].size() == 2);

  Outcome morse_enc = cli({"morse", "--encoding", d("klein.tri")});
  CHECK(morse_enc.code == 0);
  CHECK(morse_enc.doc.dump().find("4") != std::string::npos);
}

TEST_CASE("oracle and default backends agree on every shipped fixture") {
  for (const char* name : {"solid_torus", "tetrahedron", "s3_2tet", "closed2"}) {
    Outcome a = cli({"taut", d(std::string(name) + ".tri")});
    Outcome b = cli({"--oracle", "taut", d(std::string(name) + ".tri")});
    CHECK(a.doc["exists"] == b.doc["exists"]);
    CHECK(a.doc["witness"] == b.doc["witness"]);
    CHECK(b.doc["backend"] == "bruteforce");
  }
  for (const char* name : {"s3_2tet", "closed2"}) {
    Outcome a = cli({"tv", "--r", "3", "--table", d("t3.json"), d(std::string(name) + ".tri")});
    Outcome b = cli({"tv", "--oracle", "--r", "3", "--table", d("t3.json"), d(std::string(name) + ".tri")});
    CHECK(same_json(a.doc["value"], b.doc["value"]));
    Outcome c = cli({"tv", "--count", "--r", "4", d(std::string(name) + ".tri")});
    Outcome e = cli({"--oracle", "tv", "--count", "--r", "4", d(std::string(name) + ".tri")});
    CHECK(c.doc["count"] == e.doc["count"]);
  }
}

TEST_CASE("seeded runs are deterministic") {
  Outcome a = cli({"--seed", "7", "subdivide", d("closed2.tri")});
  Outcome b = cli({"--seed", "7", "subdivide", d("closed2.tri")});
  CHECK(a.code == 0);
  CHECK(a.doc == b.doc);
}

TEST_CASE("errors are machine readable") {
  auto kind = [](const Outcome& o) { return o.doc["error"]["kind"].get<std::string>(); };
  Outcome unknown = cli({"bogus"});
  CHECK(unknown.code == 1);
  CHECK(kind(unknown) == "usage");
  CHECK(unknown.doc["error"]["message"].get<std::string>().find("bogus") != std::string::npos);
  CHECK(kind(cli({})) == "usage");
  CHECK(kind(cli({"info"})) == "usage");
  CHECK(kind(cli({"info", d("missing.tri")})) == "error");
  CHECK(kind(cli({"taut", d("klein.tri")})) == "dimension");
  CHECK(kind(cli({"tv", "--r", "4", "--table", d("t3.json"), d("closed2.tri")})) == "validation");
  CHECK(kind(cli({"tv", "--r", "3", d("tetrahedron.tri")})) == "validation");
  CHECK(kind(cli({"mso", "opt", problem("dominating"), d("klein.tri")})) == "sort");
  CHECK(kind(cli({"--td", d("chain7.graph"), "taut", d("closed2.tri")})) == "parse");
  CHECK(kind(cli({"--budget", "3", "mso", "check", problem("three_colouring"), d("chain7.graph")})) == "budget");
}

TEST_CASE("help") {
  std::ostringstream os;
  CHECK(triwidth::run({"--help"}, os) == 0);
  CHECK(os.str().find("Subcommands") != std::string::npos);
}
