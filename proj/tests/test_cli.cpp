#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schubert/cli.hpp"
#include "schubert/json_io.hpp"
#include "schubert/ring_export.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "schubert-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string capture_process(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

TEST_CASE("json encoding of numbers") {
  CHECK(to_json(Integer(42)) == Json(42));
  CHECK(to_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(to_json(make_rational(6, -4)) == Json("-3/2"));
  CHECK(to_json(make_rational(4, 2)) == Json("2"));
  CHECK(rational_from_json(Json("10/4"), "x") == make_rational(5, 2));
  CHECK(integer_from_json(Json("-7"), "x") == -7);
  CHECK_THROWS_WITH_AS(rational_from_json(Json(true), "coeff"), doctest::Contains("field 'coeff'"), DomainError);
  CHECK_THROWS_AS(integer_from_json(Json("1/2"), "x"), DomainError);
}

TEST_CASE("json decoding of classes") {
  Json j = Json::parse(R"({"k":2,"n":4,"codim":2,"terms":[{"lambda":[2],"c":1},{"lambda":[1,1],"c":"1"}]})");
  auto c = chow_from_json(j);
  CHECK(to_json(c) == Json::parse(R"({"k":2,"n":4,"codim":2,"terms":[{"lambda":[2],"c":1},{"lambda":[1,1],"c":1}]})"));
  Json bad = j;
  bad["terms"][1]["lambda"] = {3};
  CHECK_THROWS_WITH_AS(chow_from_json(bad), doctest::Contains("terms[1].lambda"), DomainError);
  Json b = Json::parse(R"({"k":2,"n":4,"r":3,"grading":"dim","m":2,"terms":[{"lambda":[2],"c":1},{"lambda":[1,1],"c":1}],"exc":[1,1,1]})");
  auto bc = blowup_from_json(b);
  CHECK(bc.exc() == std::vector<Integer>{1, 1, 1});
  b["exc"] = {1, 1};
  CHECK_THROWS_WITH_AS(blowup_from_json(b), doctest::Contains("field 'exc'"), DomainError);
  auto cone = cone_from_json(Json::parse(R"([[1,0],["1/2",1]])"));
  CHECK(cone.generator_labels == std::vector<std::string>{"g1", "g2"});
}

TEST_CASE("cli: published examples") {
  auto d = run({"degree", "--k", "3", "--n", "6"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out) == Json::parse(R"({"degree":42})"));
  auto m = run({"mult", "--k", "2", "--n", "5", "--lambda", "2,1", "--mu", "3,3"});
  CHECK(m.code == 0);
  CHECK(Json::parse(m.out) == Json::parse(R"({"multiplicity":2})"));
  auto p = run({"product", "--k", "2", "--n", "4", "--a", "1", "--b", "1"});
  CHECK(Json::parse(p.out)["product"]["terms"].size() == 2);
  auto pi = run({"pieri", "--k", "2", "--n", "4", "--p", "1", "--mu", "2,1"});
  CHECK(Json::parse(pi.out)["product"]["terms"] == Json::parse(R"([{"c":1,"lambda":[2,2]}])"));
  auto g = run({"giambelli", "--k", "2", "--n", "4", "--lambda", "1,1"});
  CHECK(g.code == 0);
  CHECK(Json::parse(g.out)["round_trip"] == true);
}

TEST_CASE("cli: exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"degree", "--k", "3"}).code == kExitUsage);
  CHECK(run({"degree", "--k", "3", "--n", "2"}).code == kExitUsage);
  CHECK(run({"mult", "--k", "2", "--n", "4", "--lambda", "2", "--mu", "1,1"}).code == kExitUsage);
  CHECK(run({"mult", "--k", "2", "--n", "4", "--lambda", "x", "--mu", "1,1"}).code == kExitUsage);
  CHECK(run({"delpezzo", "verify", "--case", "grass25", "--q", "1/9"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const auto gens = scratch("gens.json");
  write(gens, R"([{"label":"e1","vector":[1,0]},{"label":"e2","vector":[0,1]}])");
  auto in = run({"cone", "check", "--generators", gens.string(), "--class", "[1,1]"});
  CHECK(in.code == kExitOk);
  auto out = run({"cone", "check", "--generators", gens.string(), "--class", "[1,-1]"});
  CHECK(out.code == kExitNegative);
  CHECK(Json::parse(out.out).contains("certificate"));
  write(gens, R"([{"label":"e1","vector":[1,"x"]}])");
  auto bad = run({"cone", "check", "--generators", gens.string(), "--class", "[1,1]"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("generators[0].vector[1]") != std::string::npos);
  write(gens, "{not json");
  CHECK(run({"cone", "check", "--generators", gens.string(), "--class", "[1,1]"}).code == kExitUsage);

  const std::string cls = R"({"terms":[{"lambda":[2],"c":1},{"lambda":[1,1],"c":1}],"exc":[1,1,1]})";
  auto s3 = run({"cone", "sgen", "--k", "2", "--n", "4", "--r", "3", "--dim", "2", "--class", cls});
  CHECK(s3.code == kExitNegative);
  CHECK(Json::parse(s3.out)["verdict"] == "not-in-span");
  const std::string cls2 = R"({"terms":[{"lambda":[2],"c":1},{"lambda":[1,1],"c":1}],"exc":[1,1]})";
  auto s2 = run({"cone", "sgen", "--k", "2", "--n", "4", "--r", "2", "--dim", "2", "--class", cls2});
  CHECK(s2.code == kExitOk);
  CHECK(Json::parse(s2.out)["verdict"] == "in-span");
}

TEST_CASE("cli: orbits and del Pezzo") {
  auto l = run({"orbits", "list", "--k", "1", "--dim", "1"});
  REQUIRE(l.code == 0);
  auto arr = Json::parse(l.out);
  CHECK(arr.size() == 3);
  for (const auto& rec : arr) {
    CHECK(rec.contains("pairs"));
    CHECK(rec.contains("incidence"));
    CHECK(rec.contains("dimension"));
  }
  auto c = run({"orbits", "check", "--k", "2"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["agree"] == true);
  auto dp = run({"delpezzo", "verify", "--case", "grass25", "--q", "1/10"});
  CHECK(dp.code == 0);
  auto j = Json::parse(dp.out);
  CHECK(j["assumptions"] == Json::parse(R"(["SHGH"])"));
  CHECK(j["checks"].size() > 5);
}

TEST_CASE("export-ring and cache round trip") {
  auto path = scratch("G2_4.json");
  auto r = run({"export-ring", "--k", "2", "--n", "4", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["classes"] == 6);
  const Json table = read_json_file(path.string());
  bool found = false;
  for (const auto& p : table["products"]) {
    if (p["a"] == Json::parse("[1]") && p["b"] == Json::parse("[1]")) {
      found = true;
      CHECK(p["terms"] == Json::parse(R"([{"c":1,"lambda":[2]},{"c":1,"lambda":[1,1]}])"));
    }
  }
  CHECK(found);

  auto small = export_ring(GrassCtx(1, 2));
  CHECK(small["basis"]["0"].size() + small["basis"]["1"].size() == 2);

  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    GrassCtx g(k, n);
    const Json fresh = export_ring(g);
    ProductCache cache;
    import_ring(fresh, cache);
    CHECK(dump_canonical(export_ring(g, kDefaultExportCap, &cache)) == dump_canonical(fresh));
  }

  CHECK(run({"export-ring", "--k", "3", "--n", "9", "--out", scratch("big.json").string()}).code == kExitUsage);
  CHECK(run({"export-ring", "--k", "3", "--n", "9", "--cap", "18", "--out", scratch("big.json").string()}).code == kExitOk);

  // The cache directory is honoured and gives the same answers.
  setenv("SCHUBERT_CACHE_DIR", path.parent_path().c_str(), 1);
  auto cached = run({"product", "--k", "2", "--n", "4", "--a", "1", "--b", "1"});
  unsetenv("SCHUBERT_CACHE_DIR");
  auto plain = run({"product", "--k", "2", "--n", "4", "--a", "1", "--b", "1"});
  CHECK(cached.out == plain.out);
}

TEST_CASE("verify-paper covers every operation and passes") {
  const auto report = verify_paper();
  CHECK(report.ops_missing.empty());
  for (const auto& op : all_operations()) CHECK(report.ops_covered.count(op) == 1);
  for (std::size_t i = 1; i < report.records.size(); ++i) CHECK(report.records[i - 1].id < report.records[i].id);
  for (const auto& r : report.records) {
    CAPTURE(r.id);
    CHECK(r.status != "fail");
    CHECK((r.basis == "published" || r.basis == "immediate" || r.basis == "derived"));
    if (r.basis == "derived") CHECK_FALSE(r.oracle.empty());
  }
  bool shgh_assumed = false;
  for (const auto& r : report.records) {
    if (r.id == "assumption.shgh") shgh_assumed = r.status == "assumed";
  }
  CHECK(shgh_assumed);
  CHECK(report.passed());
}

TEST_CASE("output is canonical and repeatable across processes") {
  const std::string bin = SCHUBERT_BINARY;
  const std::string a = capture_process(bin + " verify-paper");
  const std::string b = capture_process(bin + " verify-paper");
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);
  CHECK(dump_canonical(Json::parse(a)) == a);
  const std::string d = capture_process(bin + " delpezzo verify --case cubic --q 1/12");
  CHECK(dump_canonical(Json::parse(d)) == d);
}
