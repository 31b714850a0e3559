#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace fs = std::filesystem;
using ffh::app::Json;

namespace {

struct Run {
  int status = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("ffh_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args) {
  const fs::path dir = scratch();
  const std::string cmd = std::string(FFH_CLI_PATH) + " " + args + " >" + (dir / "stdout").string() + " 2>" + (dir / "stderr").string();
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(dir / "stdout");
  r.err = slurp(dir / "stderr");
  return r;
}

}  // namespace

TEST_CASE("cli count") {
  const Run r = run("count --q 2 --f 'x0*x2 + x1^2' --ell 1");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j[0]["count"] == 3);
  CHECK(j[0]["regime"] == "small");

  const Run one = run("count --q 2 --f 1 --nvars 3 --ell 1");
  CHECK(one.status == 0);
  CHECK(Json::parse(one.out)[0]["count"] == 0);
}

TEST_CASE("cli error codes") {
  const Run parse = run("count --q 2 --f 'x0 + y'");
  CHECK(parse.status == 2);
  CHECK(Json::parse(parse.err)["error"] == "PARSE");

  const fs::path out = scratch() / "budget.json";
  const Run budget = run("count --q 2 --f 'x0*x2 + x1^2' --ell 30 --cap-enum 1000 --out " + out.string());
  CHECK(budget.status == 3);
  CHECK(Json::parse(budget.err)["error"] == "BUDGET");
  CHECK_FALSE(fs::exists(out));

  const Run reducible = run("aux --q 2 --f 'x0^2 + x1^2' --nvars 3 --ell 1");
  CHECK(reducible.status == 2);
  CHECK(Json::parse(reducible.err)["message"].get<std::string>().find("x0 + x1") != std::string::npos);

  CHECK(run("count --q 6 --f x0").status == 2);
  CHECK(run("count --q 2 --f x0 --format xml").status == 2);
  CHECK(run("count --bogus").status == 2);
}

TEST_CASE("cli aux") {
  const Run r = run("aux --q 2 --f 'x0*x2 + x1^2' --ell 1");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j[0]["M"] == 2);
  CHECK(j[0]["bound_thm"] == "main-thm");
  CHECK(j[0]["ratio"].is_number());

  const Run empty = run("aux --q 2 --f 'x0^2 + x0*x1 + x1^2' --ell 1");
  REQUIRE(empty.status == 0);
  CHECK(Json::parse(empty.out)[0]["M"] == 1);
}

TEST_CASE("cli verify") {
  const Run r = run("verify");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["passed"] == true);
  const Run other = run("verify --seed 99");
  CHECK(other.status == 0);

  const Run fault = run("verify --inject-fault gcd");
  CHECK(fault.status == 4);
  CHECK(fault.err.find("fqt-division") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
  const fs::path dir = scratch();
  const fs::path cfg = dir / "cfg.json";
  std::ofstream(cfg) << R"({"q": 3, "f": "x1*x2 - 1", "mode": "affine", "ell": "1:2"})";
  const Run r = run("count --config " + cfg.string() + " --ell 1");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["count"] == 2);

  std::ofstream(dir / "bad.json") << R"({"qq": 3})";
  CHECK(run("count --config " + (dir / "bad.json").string()).status == 2);
}

TEST_CASE("report files are reproducible") {
  const fs::path dir = scratch();
  const std::string base = "count --q 2 --f 'x0*x2 + x1^2' --ell 1:3 --format csv --out ";
  REQUIRE(run(base + (dir / "a.csv").string()).status == 0);
  REQUIRE(run(base + (dir / "b.csv").string()).status == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(fs::exists(dir / "a.timings.csv"));
  const std::string dat = slurp(dir / "a.count.dat");
  CHECK(dat.find("# ell") == 0);

  REQUIRE(run("aux --q 2 --f 'x0*x2 + x1^2' --ell 1:2 --out " + (dir / "aux.json").string()).status == 0);
  CHECK(fs::exists(dir / "aux.M.dat"));
  CHECK(slurp(dir / "aux.json").find("elapsed_ms") == std::string::npos);
}

// Pins the record schema: field names, order and value types.
TEST_CASE("record schema") {
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"q", "number"},      {"p", "number"},     {"e", "number"},          {"f", "string"},
      {"d", "number"},      {"n", "number"},     {"ell", "number"},        {"mode", "string"},
      {"regime", "string"}, {"beta", "number"},  {"bad_primes", "array"},  {"bad_prime_cap", "number"},
      {"b_log", "number"},  {"count", "number"}, {"M", "number"},          {"deg_g", "number"},
      {"g", "string"},      {"bound_thm", "string"}, {"bound", "number"},  {"ratio", "number"}};
  ffh::app::ExperimentConfig cfg;
  cfg.f = "x0*x2 + x1^2";
  const Json rec = ffh::app::cmd_aux(cfg).records.at(0);
  REQUIRE(rec.size() == golden.size());
  std::size_t i = 0;
  for (const auto& [key, value] : rec.items()) {
    CHECK(key == golden[i].first);
    CHECK(std::string(value.type_name()) == golden[i].second);
    if (value.is_number()) CHECK(std::isfinite(value.get<double>()));
    ++i;
  }
  CHECK(ffh::app::record_fields().size() == golden.size());
  const std::string csv = ffh::app::to_csv(Json::array({rec}));
  CHECK(csv.substr(0, csv.find('\n')) == "q,p,e,f,d,n,ell,mode,regime,beta,bad_primes,bad_prime_cap,b_log,count,M,deg_g,g,bound_thm,bound,ratio");
}
