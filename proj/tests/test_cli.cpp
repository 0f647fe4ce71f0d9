#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GRADELAB_EXE + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("grading show") {
  const auto r = run("grading show --catalog g4");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "8 parts"));
  for (const char* n : {"L_(1,0)", "L_(0,1)", "L_(2,2)"}) CHECK(contains(r.out, n));
}

TEST_CASE("quotient of the Z8 grading") {
  const auto r = run("normalizer quotient --catalog g3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "order 4, exponent 2"));
  const auto j = nlohmann::json::parse(run("normalizer quotient --catalog g3 --format json").out);
  CHECK(j["result"]["order"] == 4);
  CHECK(j["result"]["exponent"] == 2);
}

TEST_CASE("show output verifies when read back") {
  for (const char* name : {"g1", "g2", "g3", "g4"}) {
    const std::string exe = GRADELAB_EXE;
    const auto r = run(std::string("grading show --catalog ") + name + " --format json | " + exe +
                       " grading verify --input - --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["verified"] == true);
    CHECK(j["source"]["input"] == "stdin");
  }
}

TEST_CASE("usage errors") {
  CHECK(run("grading show --catalog g4 --bogus").status != 0);
  CHECK(run("frobnicate").status != 0);
  CHECK(run("grading show --catalog g9").status != 0);
  CHECK(run("grading verify --input /nonexistent/file.json").status == 2);
  CHECK(run("normalizer check --catalog g1").status != 0);
}

TEST_CASE("labels and membership") {
  CHECK(run("grading label --catalog g1 --group 7").status == 0);
  CHECK(run("grading label --catalog g1 --group 3,3").status == 0);
  CHECK(run("grading label --catalog g4 --group 8").status == 1);
  const auto r = run("normalizer check --catalog g1 --auto AdB1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "normalizes"));
  CHECK(run("normalizer check --catalog g4 --auto AdB1").status == 0);
  CHECK(run("normalizer check --catalog g1 --auto AdS").status == 1);
}

TEST_CASE("linearization") {
  const auto j = nlohmann::json::parse(run("normalizer linearize --catalog g4 --format json").out);
  CHECK(j["result"]["distinct"] == 24);
  CHECK(j["result"]["is_sl2_z3"] == true);
}

TEST_CASE("contraction output is deterministic") {
  const auto a = run("contract solve --catalog g2 --orbits --format json --jobs 1");
  const auto b = run("contract solve --catalog g2 --orbits --format json --jobs 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["result"]["orbits"]["invariant"] == true);
  CHECK(j["result"]["total"] == 99712);

  const auto e1 = run("contract equations --catalog g4 --format json");
  CHECK(e1.out == run("contract equations --catalog g4 --format json").out);
  CHECK(nlohmann::json::parse(e1.out)["result"]["variables"].size() == 36);
}

TEST_CASE("node cap from the environment") {
  CHECK(run("contract solve --catalog g4", "GRADELAB_NODE_CAP=10").status == 3);
  CHECK(run("contract solve --catalog g4", "GRADELAB_NODE_CAP=banana").status == 2);
}

TEST_CASE("coarsening from the command line") {
  const auto r = run("grading coarsen --catalog g1 --partition 0,1,2,3,4,5,6 --format json");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["result"]["is_grading"] == true);
  CHECK(run("grading coarsen --catalog g1 --partition 0,1").status == 2);
}

TEST_CASE("selfcheck subset") {
  const auto r = run("selfcheck --only 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "PASS 3"));
}
