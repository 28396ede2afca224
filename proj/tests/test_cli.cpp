// End-to-end checks of the command-line interface: exit codes, determinism,
// and export round trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("NATOP_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("enumerate matches the known counts") {
  auto r = run("enumerate --type \"(1;1)\"");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["count"] == 3);
  CHECK(run("enumerate --type \"(0;2)\"").out.find("1") != std::string::npos);
  auto rl = run("enumerate --type \"(1;)\"");
  auto jl = nlohmann::json::parse(rl.out);
  CHECK(jl[0]["count"] == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("no-such-command").code == 2);
  CHECK(run("verify no-such-suite").code == 2);
  CHECK(run("export no-such-thing").code == 2);
}

TEST_CASE("verify runs a cheap suite and reports json") {
  auto r = run("verify sign-identity --seed 7");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 7);
  // determinism: identical runs give identical reports modulo timing
  auto r2 = run("verify sign-identity --seed 7");
  auto j2 = nlohmann::json::parse(r2.out);
  j["seconds"] = 0;
  j2["seconds"] = 0;
  CHECK(j == j2);
}

TEST_CASE("export round trips through the parser") {
  auto r = run("export sample-tree");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "black");
  // feed the tree back through the differential command
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/natop_tree.json";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    nlohmann::json sum = nlohmann::json::array();
    sum.push_back({{"coeff", 1}, {"tree", j}});
    std::string s = sum.dump();
    fwrite(s.data(), 1, s.size(), f);
    fclose(f);
  }
  auto rd = run("diff --in " + tmp);
  CHECK(rd.code == 0);
  auto jd = nlohmann::json::parse(rd.out);
  CHECK(jd.size() >= 2);  // one raising component, several lowering ones
}

TEST_CASE("homology of the arity-0 stub-free component") {
  auto r = run("homology --n 0 --K 0 --L 5 --suboperad Bhat");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  for (auto& [deg, row] : j["homology"].items()) {
    CHECK(row["betti"] == 0);
    CHECK(row["torsion"].empty());
  }
}

TEST_CASE("export D round trips dimensions") {
  auto r = run("export D --q 2 --N 3");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["0"]["basis"].size() == 3);
  CHECK(j["1"]["basis"].size() == 6);
}

TEST_CASE("export of a truncated component carries bases and matrices") {
  auto r = run("export B --n 1 --K 1 --L 2");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 1);
  CHECK(j["degrees"].contains("0"));
  CHECK(j["degrees"]["0"].contains("boundary"));
  // basis entries carry the tree schema
  CHECK(j["degrees"]["0"]["basis"][0]["tree"].contains("kind"));
}
