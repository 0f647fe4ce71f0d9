#include <random>

#include "doctest.h"

#include "gradelab/catalog.hpp"
#include "gradelab/error.hpp"
#include "gradelab/serialize.hpp"

using namespace gradelab;

TEST_CASE("cyclotomic numbers") {
  const Cyclo x = Cyclo(Rational(1, 2)) - Cyclo::root_of_unity(24, 3);
  const Json j = to_json(x);
  CHECK(j.dump() == R"({"order":24,"terms":[[1,2,0],[-1,1,3]]})");
  CHECK(cyclo_from_json(j) == x);
  CHECK(cyclo_from_json(j).order() == 24);
  CHECK(cyclo_from_json(parse_json(R"({"order":3,"terms":[[2,4,1]]})")) == Cyclo(Rational(1, 2)) * Cyclo::root_of_unity(3, 1));
  CHECK(cyclo_from_json(Json(5)) == Cyclo(5));
}

TEST_CASE("big integers are written as strings") {
  const Rational big(mpz_class("123456789012345678901234567890"), mpz_class(7));
  const Cyclo x(big);
  const Json j = to_json(x);
  CHECK(j["terms"][0][0].is_string());
  CHECK(cyclo_from_json(j) == x);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(cyclo_from_json(parse_json(R"({"terms":[]})")), InputError);
  CHECK_THROWS_AS(cyclo_from_json(parse_json(R"({"order":3,"terms":[[1,0,1]]})")), InputError);
  CHECK_THROWS_AS(cyclo_from_json(parse_json(R"({"order":3,"terms":[[1,2]]})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":2,"cols":2,"entries":[1,2,3]})")), InputError);
  CHECK_THROWS_AS(automorphism_from_json(sl3(), parse_json(R"({"kind":"other","rep":{"rows":1,"cols":1,"entries":[1]}})")),
                  InputError);
  CHECK_THROWS_AS(grading_from_json(parse_json(R"({"n":3,"parts":[]})")), InputError);
}

TEST_CASE("bit-exact round trips") {
  std::mt19937_64 rng(31);
  for (int s = 0; s < 300; ++s) {
    const int n = std::vector<int>{1, 3, 4, 8, 24}[rng() % 5];
    Cyclo x = Cyclo(0).embed(n);
    for (int t = 0; t < 3; ++t)
      x += Cyclo(Rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1)) *
           Cyclo::root_of_unity(n, static_cast<long>(rng() % n));
    const Json j = to_json(x);
    const Cyclo back = cyclo_from_json(parse_json(j.dump()));
    REQUIRE(back == x);
    REQUIRE(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("matrices, subspaces, automorphisms") {
  const Matrix s = named_matrix("S");
  CHECK(matrix_from_json(to_json(s)) == s);
  CHECK(to_json(s)["rows"] == 3);
  const Subspace u = catalog("g2").grading.part(0);
  CHECK(subspace_from_json(to_json(u)) == u);
  for (const char* name : {"AdS", "OutI", "AdH"}) {
    const auto f = named_automorphism(name);
    const auto back = automorphism_from_json(sl3(), to_json(f));
    CHECK(back == f);
    CHECK(back.kind() == f.kind());
  }
  CHECK(to_json(named_automorphism("OutI"))["kind"] == "outer");
}

TEST_CASE("gradings") {
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    const Json j = to_json(c.grading, c.part_names);
    const Grading back = grading_from_json(parse_json(j.dump()));
    CHECK(back.parts() == c.grading.parts());
    CHECK(back.labels() == c.grading.labels());
    CHECK(back.group() == c.grading.group());
    CHECK(to_json(back, c.part_names).dump() == j.dump());
  }
  Json bad = to_json(catalog("g3").grading);
  bad["labels"][0] = Json::array({9});
  CHECK_THROWS_AS(grading_from_json(bad), InputError);
  bad["labels"] = Json::array();
  CHECK_THROWS_AS(grading_from_json(bad), InputError);
}

TEST_CASE("contraction output") {
  const auto& g = catalog("g2").grading;
  const auto sys = generate_equations(g);
  const Json eqs = to_json(sys, g);
  CHECK(eqs["variables"].size() == 28);
  CHECK(eqs["equations"].size() == sys.equations.size());
  CHECK(eqs["equations"][0]["source"].contains("triple"));
  const auto result = solve_binary(sys);
  const Json sol = to_json(result, g);
  CHECK(sol["total"] == result.total());
  CHECK(sol["solutions"].size() == result.solutions.size());
  CHECK(sol["solutions"][0].size() == 28);
  CHECK(to_json(result, g).dump() == sol.dump());
}
