#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "config.hpp"
#include "gcoul/error.hpp"
#include "table.hpp"

using namespace gcoul;
using namespace gcoul::cli;
namespace fs = std::filesystem;

namespace {

struct Proc {
  int code = -1;
  std::string out;
};

Proc run(const std::string& args) {
  const std::string cmd = std::string(GCOUL_BINARY) + " " + args + " 2>&1";
  Proc p;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / ("gcoul_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("config round trip") {
  RunConfig c;
  c.command = Command::smatrix;
  c.preset = "coulomb";
  c.params = PotentialParams{2.0, 0.3, 1.5, 2.5, 4, 1};
  c.rho = 0.7;
  c.r_max = 12.0;
  c.k_min = 0.1;
  c.points = 17;
  c.spacing = Spacing::linear;
  c.format = Format::json;
  c.out = "x.json";
  c.n = 3;
  c.eta = 0.01;
  const RunConfig back = apply_json(RunConfig{}, nlohmann::json::parse(to_json(c).dump()));
  CHECK(back == c);
  CHECK(apply_json(RunConfig{}, nlohmann::json::parse(to_json(RunConfig{}).dump())) == RunConfig{});
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(apply_json(RunConfig{}, nlohmann::json{{"bogus", 1}}), Error);
  CHECK_THROWS_AS(apply_json(RunConfig{}, nlohmann::json{{"theta", "one"}}), Error);
  CHECK_THROWS_AS(read_config_file("/nonexistent/gcoul.json"), Error);
  const fs::path bad = temp_file("bad.json", "{\n  \"C\": 1,\n  \"theta\": ]\n}\n");
  try {
    read_config_file(bad.string());
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  fs::remove(bad);
  RunConfig c;
  c.params.C = -1.0;
  CHECK_THROWS_AS(check_config(c), Error);
  RunConfig d;
  d.k_min = 2.0;
  d.k_max = 1.0;
  CHECK_THROWS_AS(check_config(d), Error);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv and json rendering") {
  Table t;
  t.metadata = {{"command", std::string("demo")}, {"C", 1.0}};
  t.columns = {"name", "value"};
  t.rows = {{std::string("a,b"), 0.25}, {std::string("say \"hi\""), NAN}, {std::string("n"), 3LL}};
  const std::string csv = render_csv(t);
  CHECK(csv == "# command: demo\n# C: 1\nname,value\n\"a,b\",0.25\n\"say \"\"hi\"\"\",nan\nn,3\n");
  const auto j = nlohmann::json::parse(render_json(t));
  CHECK(j["metadata"]["command"] == "demo");
  CHECK(j["rows"][0]["value"] == 0.25);
  CHECK(j["rows"][1]["value"].is_null());
  CHECK(j["rows"][2]["value"] == 3);
}

TEST_CASE("sample grids") {
  const auto lin = sample_grid(0.0, 1.0, 5, Spacing::linear);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 1.0);
  CHECK(lin[2] == doctest::Approx(0.5));
  const auto lg = sample_grid(0.01, 100.0, 5, Spacing::log);
  CHECK(lg[2] == doctest::Approx(1.0));
  CHECK(lg.back() == 100.0);
}

TEST_CASE("commands produce tables in memory") {
  RunConfig c;
  c.command = Command::spectrum;
  const auto out = run_command(c);
  CHECK(out.ok);
  REQUIRE(out.table.rows.size() == 4);
  CHECK(out.table.columns.front() == "n");
}

TEST_CASE("binary: exit codes") {
  CHECK(run("--version").code == 0);
  CHECK(run("spectrum").code == 0);
  CHECK(run("validate").code == 0);
  const Proc bad = run("spectrum --C -1");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("NonPositiveC") != std::string::npos);
  CHECK(run("nonsense").code == 1);
  CHECK(run("spectrum --config /nonexistent/gcoul.json").code == 1);
  CHECK(run("charge-density --D 2").code == 2);
}

TEST_CASE("binary: config file and flag precedence") {
  const fs::path cfg = temp_file("cfg.json", R"({"command": "spectrum", "theta": 0.5, "q": 2.0, "n": 2})");
  const Proc from_file = run("--config " + cfg.string() + " --emit-config");
  REQUIRE(from_file.code == 0);
  const auto j = nlohmann::json::parse(from_file.out);
  CHECK(j["theta"] == 0.5);
  CHECK(j["q"] == 2.0);
  const Proc overridden = run("--config " + cfg.string() + " --theta 0.25 --emit-config");
  const auto k = nlohmann::json::parse(overridden.out);
  CHECK(k["theta"] == 0.25);
  CHECK(k["q"] == 2.0);
  CHECK(k["n"] == 2);
  fs::remove(cfg);
  const auto coul = nlohmann::json::parse(run("smatrix --preset coulomb --l 1 --emit-config").out);
  CHECK(coul["beta"] == 4.0);
  CHECK(nlohmann::json::parse(run("smatrix --preset coulomb --l 1 --beta 3 --emit-config").out)["beta"] == 3.0);
}

TEST_CASE("binary: deterministic output") {
  for (const char* args : {"smatrix --points 40", "green --format json", "su11-check"}) {
    const Proc a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const fs::path path = fs::temp_directory_path() / "gcoul_test_out.csv";
  REQUIRE(run("reflection --theta 0.1 --D 1 --beta 0.5 --points 10 --out " + path.string()).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run("reflection --theta 0.1 --D 1 --beta 0.5 --points 10").out);
  fs::remove(path);
}
