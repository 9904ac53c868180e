#include "support.hpp"

#include <convexiq/io.hpp>
#include <convexiq_cli/commands.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace convexiq;
namespace fs = std::filesystem;

namespace {

std::string tmp(const std::string& name) { return std::string(CONVEXIQ_TEST_TMP) + "/cli/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args, MeasureOracle* oracle = nullptr) {
  args.insert(args.begin(), "convexiq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  cli::Context ctx{out, err, oracle};
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), ctx);
  return {code, out.str(), err.str()};
}

// Reports every full-dimensional V_{n-1} ten times too large.
class InflatingOracle : public MeasureOracle {
 public:
  Measure measure(const Body& body, int m) override {
    Measure v = intrinsic_volume(body, m);
    if (affine_dim(body) == body.ambient_dim() && m == body.ambient_dim() - 1) v.value *= 10.0;
    return v;
  }
};

}  // namespace

TEST_CASE("make") {
  fs::remove_all(tmp(""));
  const auto r = run_cli({"make", "--family", "named", "--id", "cross", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(std::string(CONVEXIQ_FIXTURES) + "/cross3.json"));

  const auto a = run_cli({"make", "--family", "random-zonotope", "--n", "4", "--size", "6", "--seed", "7", "--count",
                          "2", "--out", tmp("za")});
  const auto b = run_cli({"make", "--family", "random-zonotope", "--n", "4", "--size", "6", "--seed", "7", "--count",
                          "2", "--out", tmp("zb")});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  for (const char* f : {"random-zonotope-n4-0000.json", "random-zonotope-n4-0001.json"}) {
    CHECK(read_file(tmp("za/") + f) == read_file(tmp("zb/") + f));
  }
  CHECK(run_cli({"make", "--family", "blob"}).code == cli::kExitUsage);
  CHECK(run_cli({"make", "--n", "12"}).code == cli::kExitUsage);
}

TEST_CASE("check") {
  write_file(tmp("cross3.json"), body_to_json(Named(NamedId::Cross, 3)));
  write_file(tmp("cube3.json"), body_to_json(Named(NamedId::Cube, 3)));
  write_file(tmp("corrupt.json"), "{\"schema\": \"body/1\", \"kind\": \"named\", \"n\": 3, \"id\": ");

  const auto meyer = run_cli({"check", "--ineq", "meyer", tmp("cross3.json")});
  CHECK(meyer.code == 0);
  const auto j = nlohmann::json::parse(meyer.out);
  CHECK(j["reports"][0]["equality_flag"] == "equality_case_matched");

  const auto lw = run_cli({"check", "--ineq", "loomis_whitney", "--out", tmp("lw"), tmp("cube3.json")});
  CHECK(lw.code == 0);
  CHECK(fs::exists(tmp("lw/report.json")));
  CHECK(fs::exists(tmp("lw/report.csv")));

  CHECK(run_cli({"check", "--ineq", "square_lower", tmp("corrupt.json")}).code == cli::kExitParse);
  const auto unknown = run_cli({"check", "--ineq", "no_such", tmp("cube3.json")});
  CHECK(unknown.code == cli::kExitUsage);
  CHECK(unknown.err.find("loomis_whitney") != std::string::npos);
  CHECK(run_cli({"check", "--ineq", "cg_upper:m=7", tmp("cube3.json")}).code == cli::kExitUsage);
  CHECK(run_cli({"check", "--ineq", "meyer", tmp("absent.json")}).code == cli::kExitIo);

  InflatingOracle broken;
  CHECK(run_cli({"check", "--ineq", "bm_upper", tmp("cube3.json")}, &broken).code == cli::kExitProvenViolation);
  CHECK(run_cli({"check", "--ineq", "bm_upper", tmp("cube3.json")}).code == 0);

  // a conjecture violated: findings are written, exit stays 0
  const auto prob = run_cli({"check", "--ineq", "prob5_family:m=1", "--out", tmp("p5"), tmp("cube3.json")}, &broken);
  CHECK(prob.code == 0);
}

TEST_CASE("repro") {
  const auto r = run_cli({"repro", "eq1-c3", "--out", tmp("repro")});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.46058") != std::string::npos);
  CHECK(fs::exists(tmp("repro/repro.csv")));
  CHECK(run_cli({"repro", "nothing"}).code == cli::kExitUsage);
}

TEST_CASE("search") {
  SearchConfig c;
  c.problem = "cg33";
  c.family = "unconditional-polytope";
  c.iterations = 500;
  c.restarts = 2;
  write_file(tmp("cg33.json"), search_config_to_json(c));
  fs::remove_all(tmp("s1"));
  fs::remove_all(tmp("s2"));
  const auto a = run_cli({"search", tmp("cg33.json"), "--out", tmp("s1")});
  const auto b = run_cli({"search", tmp("cg33.json"), "--out", tmp("s2")});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK_FALSE(fs::exists(tmp("s1/finding.json")));
  CHECK(read_file(tmp("s1/search.json")) == read_file(tmp("s2/search.json")));
  CHECK(read_file(tmp("s1/trajectory.csv")) == read_file(tmp("s2/trajectory.csv")));

  write_file(tmp("bad-config.json"), R"({"schema":"search-config/1","problem":"prob4","family":"zonotope"})");
  CHECK(run_cli({"search", tmp("bad-config.json")}).code == cli::kExitUsage);
}

TEST_CASE("jcurve") {
  write_file(tmp("cube3.json"), body_to_json(Named(NamedId::Cube, 3)));
  const auto r = run_cli({"jcurve", tmp("cube3.json"), "--samples", "8"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  write_file(tmp("poly.json"), body_to_json(test::poly3()));
  CHECK(run_cli({"jcurve", tmp("poly.json")}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"check", "--ineq", "meyer"}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == 0);
}
