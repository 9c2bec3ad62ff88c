#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "qtoric/cli.hpp"
#include "qtoric/json_io.hpp"

using namespace qtoric;
using namespace qtoric::fixtures;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_dir() {
  const char* env = std::getenv("QTORIC_DATA_DIR");
  return env != nullptr ? env : "tests/data";
}

std::string data(const std::string& name) { return data_dir() + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("check accepts a valid fan and rejects an incomplete one") {
  RunResult good = run({"check", data("p2.json")});
  CHECK(good.code == 0);
  CHECK(json::parse(good.out).at("valid") == true);
  RunResult bad = run({"check", data("incomplete.json")});
  CHECK(bad.code != 0);
  CHECK(json::parse(bad.err).at("error") == "NotComplete");
}

TEST_CASE("cohomology and cech commands agree on O(2)") {
  RunResult direct = run({"cohomology", data("p2.json"), "--divisor", data("d_200.json")});
  REQUIRE(direct.code == 0);
  CHECK(json::parse(direct.out).at("dims") == json({6, 0, 0}));
  RunResult oracle = run({"cech", data("p2.json"), "--divisor", data("d_200.json")});
  REQUIRE(oracle.code == 0);
  CHECK(json::parse(oracle.out).at("dims") == json({6, 0, 0}));
}

TEST_CASE("cohomology --keep-weights lists the six section weights") {
  RunResult r = run({"cohomology", data("p2.json"), "--divisor", data("d_200.json"),
                     "--keep-weights"});
  REQUIRE(r.code == 0);
  json w = json::parse(r.out).at("weights");
  CHECK(w.at("0").size() == 6);
}

TEST_CASE("qample command reproduces the (n-1)-ample cone") {
  RunResult r = run({"qample", data("blp3.json"), "--q", "2"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("q") == 2);
  ConeUnion cells;
  for (const auto& cj : doc.at("cells")) cells.push_back(cone_from_json(cj, 2));
  Fan f = blowup_pn(3);
  RatMatrix t = he_basis(f, class_lattice(f));
  POCone wedge;  // -Eff in (H, E): {x <= 0, x + y <= 0}, mapped to the CLI basis
  wedge.dim = 2;
  wedge.add(primitive(t.transpose().apply({Rat(-1), Rat(0)})), false);
  wedge.add(primitive(t.transpose().apply({Rat(-1), Rat(-1)})), false);
  CHECK(union_equal(cells, complement({wedge})));
}

TEST_CASE("level command on the threefold blowup landmarks") {
  auto level_of = [&](const std::string& divisor) {
    RunResult r = run({"level", data("blp3.json"), "--divisor", data(divisor)});
    REQUIRE(r.code == 0);
    return json::parse(r.out).at("level").get<int>();
  };
  CHECK(level_of("d_2h_minus_e.json") == 0);
  CHECK(level_of("d_e.json") == 2);
  CHECK(level_of("d_minus_h.json") == 3);
  RunResult he = run({"level", data("blp2.json"), "--divisor", data("d_he.json")});
  CHECK(json::parse(he.out).at("level") == 1);
}

TEST_CASE("hhat command accepts rational coefficients") {
  RunResult whole = run({"hhat", data("p2.json"), "--divisor", data("d_100.json"), "--i", "0"});
  REQUIRE(whole.code == 0);
  CHECK(json::parse(whole.out).at("value") == "1");
  RunResult half = run({"hhat", data("p2.json"), "--divisor", data("d_half.json"), "--i", "0"});
  CHECK(json::parse(half.out).at("value") == "1/4");
  RunResult top = run({"hhat", data("p2.json"), "--divisor", data("d_100.json"), "--i", "2"});
  CHECK(json::parse(top.out).at("value") == "0");
}

TEST_CASE("betti cache reproduces byte-identical output") {
  namespace fs = std::filesystem;
  fs::path cache = fs::temp_directory_path() / "qtoric-cache-test";
  fs::remove_all(cache);
  std::vector<std::string> args = {"betti", data("blp3.json"), "--cache", cache.string()};
  RunResult cold = run(args);
  REQUIRE(cold.code == 0);
  CHECK(fs::exists(cache));
  RunResult warm = run(args);
  CHECK(warm.out == cold.out);
  fs::remove_all(cache);
  RunResult again = run(args);
  CHECK(again.out == cold.out);
  // corrupt cache entries are recomputed, not trusted
  for (const auto& entry : fs::directory_iterator(cache)) {
    std::ofstream trash(entry.path(), std::ios::trunc);
    trash << "{not json";
  }
  RunResult healed = run(args);
  CHECK(healed.out == cold.out);
  fs::remove_all(cache);
}

TEST_CASE("figure output matches the golden bytes") {
  RunResult blp2 = run({"figure", data("blp2.json"), "--q", "1"});
  REQUIRE(blp2.code == 0);
  CHECK(blp2.out == slurp(data("figure_blp2_q1.svg")));
  CHECK(blp2.out.find("url(#hatch)") != std::string::npos);
  CHECK(blp2.out.find("stroke-dasharray") != std::string::npos);
  RunResult blp3 = run({"figure", data("blp3.json"), "--q", "0"});
  REQUIRE(blp3.code == 0);
  CHECK(blp3.out == slurp(data("figure_blp3_q0.svg")));
}

TEST_CASE("figure rejects rank-1 fans") {
  RunResult r = run({"figure", data("p2.json"), "--q", "1"});
  CHECK(r.code != 0);
  CHECK(json::parse(r.err).at("error") == "UnsupportedRank");
}

TEST_CASE("usage and input errors are machine readable") {
  RunResult missing = run({"cohomology", data("no-such-fan.json"), "--divisor", data("d_200.json")});
  CHECK(missing.code != 0);
  CHECK(json::parse(missing.err).at("error") == "BadInput");
  RunResult usage = run({"frobnicate"});
  CHECK(usage.code == 2);
  CHECK(json::parse(usage.err).at("error") == "BadUsage");
  RunResult no_point = run({"level", data("p2.json")});
  CHECK(no_point.code != 0);
  CHECK(json::parse(no_point.err).at("error") == "BadUsage");
}
