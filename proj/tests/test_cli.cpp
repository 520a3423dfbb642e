#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "eisencoh/report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EISENCOH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("analyze") {
  auto r = run("analyze [1,0] [2]");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "AGREE_TRUE"));
  CHECK(contains(r.out, "w = [1,3,2]"));
  CHECK(contains(r.out, "ν₀ = 1"));
  CHECK(contains(r.out, "critical set (cohomological)  [2,1]"));

  r = run("analyze [1,0] [3]");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "AGREE_FALSE"));

  CHECK(run("analyze [1,0] [1,0]").code == 2);
  CHECK(run("analyze [1,0 [2]").code == 2);
  CHECK(run("analyze [0,1] [2]").code == 2);
  CHECK(run("analyze").code == 2);

  r = run("analyze [1,0] [2] --format json");
  CHECK(r.code == 0);
  const auto j = eisencoh::Json::parse(r.out);
  CHECK(j["nu0"] == "1");
}

TEST_CASE("kostant") {
  auto r = run("kostant 2 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rows 3"));
  CHECK(contains(r.out, "length polynomial  1 + q + q^2"));
  CHECK(contains(r.out, "match"));
  CHECK(contains(run("kostant 2 1 --length 1").out, "rows 1"));
  CHECK(contains(run("kostant 2 3").out, "rows 10"));
  CHECK(run("kostant 0 3").code == 2);
}

TEST_CASE("sweep exit codes and outputs") {
  auto r = run("sweep --blocks 2x1 --bound 6 --format json --output cli_2x1.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "2x1: instances"));
  const auto j = eisencoh::Json::parse(slurp("cli_2x1.json"));
  CHECK(j["counts"]["discrepancy"] == 0);

  r = run("sweep --blocks 2x3,4x1 --bound 3 --output cli_mixed.json");
  CHECK((r.code == 0 || r.code == 3));
  CHECK(contains(r.out, "2x3: instances"));
  CHECK(contains(r.out, "4x1: instances"));

  CHECK(run("sweep --bound 0").code == 2);
  CHECK(run("sweep --blocks 2x1 --bound 0").code == 2);
  CHECK(run("sweep --blocks 3x2 --bound 2").code == 2);
  CHECK(run("sweep --blocks 2x1 --bound 2 --twists 3:1").code == 2);
  CHECK(run("sweep --blocks 2x1 --bound 2 --format xml").code == 2);

  r = run("sweep --blocks 2x1 --bound 2 --format csv");
  CHECK(r.code == 0);
  CHECK(contains(r.out, eisencoh::csvHeader()));
}

TEST_CASE("sweep reads a config file and flags override it") {
  {
    std::ofstream cfg("cli_sweep.cfg");
    cfg << "# small campaign\nblocks = 2x1\nbound = 3\nformat = text\noutput = cli_cfg.txt\n";
  }
  CHECK(run("sweep --config cli_sweep.cfg").code == 0);
  CHECK(contains(slurp("cli_cfg.txt"), "sweep  blocks [2x1]  bound 3"));
  CHECK(run("sweep --config cli_sweep.cfg --bound 4").code == 0);
  CHECK(contains(slurp("cli_cfg.txt"), "bound 4"));
  CHECK(run("sweep --config does_not_exist.cfg").code == 2);
}

TEST_CASE("report re-renders saved sweeps; discrepancies give exit 3") {
  REQUIRE(run("sweep --blocks 2x1 --bound 3 --verbosity full --output cli_full.json").code == 0);
  auto r = run("report cli_full.json --format csv");
  CHECK(r.code == 0);
  auto j = eisencoh::Json::parse(slurp("cli_full.json"));
  CHECK(static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '\n')) == 1 + j["instances"].size());
  CHECK(contains(run("report cli_full.json").out, "discrepancies 0"));

  // A saved report that lists a counterexample.
  auto bad = j;
  bad["discrepancies"].push_back(j["instances"][0]);
  bad["discrepancies"][0]["verdict"] = "DISCREPANCY";
  std::ofstream("cli_bad.json") << bad.dump();
  r = run("report cli_bad.json");
  CHECK(r.code == 3);
  CHECK(contains(r.out, "DISCREPANCY"));

  std::ofstream("cli_junk.json") << "{not json";
  CHECK(run("report cli_junk.json").code == 2);
  CHECK(run("report missing.json").code == 2);
}

TEST_CASE("sweep output does not depend on threads") {
  REQUIRE(run("sweep --blocks 2x3,4x1,4x3 --bound 4 --verbosity full --threads 1 --output cli_t1.json").code == 0);
  REQUIRE(run("sweep --blocks 2x3,4x1,4x3 --bound 4 --verbosity full --threads 6 --output cli_t6.json").code == 0);
  CHECK(slurp("cli_t1.json") == slurp("cli_t6.json"));
}
