#include <algorithm>
#include <random>

#include "doctest.h"

#include "gradelab/catalog.hpp"
#include "gradelab/contraction.hpp"
#include "gradelab/error.hpp"

using namespace gradelab;

namespace {

std::size_t part_index(const CatalogEntry& c, const std::string& name) {
  return static_cast<std::size_t>(std::find(c.part_names.begin(), c.part_names.end(), name) - c.part_names.begin());
}

std::uint64_t all_bits(std::size_t vars) { return (std::uint64_t{1} << vars) - 1; }

Grading trivial_grading() {
  return Grading(sl3(), {Subspace::full(8)}).with_labels(AbelianGroup({1}), {{0}});
}

}  // namespace

TEST_CASE("pair index") {
  const PairIndex p(3);
  CHECK(p.size() == 6);
  CHECK(p.index(0, 0) == 0);
  CHECK(p.index(2, 1) == p.index(1, 2));
  CHECK(p.pair(p.index(1, 2)) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(PairIndex(7).size() == 28);
  CHECK(PairIndex(8).size() == 36);
  CHECK_THROWS_AS(PairIndex(11), InputError);
  EpsilonAssignment e(3);
  e.set(2, 0, true);
  CHECK(e.get(0, 2));
  CHECK_FALSE(e.get(1, 2));
}

TEST_CASE("contracted structure constants") {
  const auto& g4 = catalog("g4");
  const auto gb = graded_basis(g4.grading);
  CHECK(contracted_structure(g4.grading, EpsilonAssignment::all_ones(8)) == gb.constants);
  const auto zero = contracted_structure(g4.grading, EpsilonAssignment(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) CHECK(zero.terms(a, b).empty());

  const std::size_t i = part_index(g4, "L_(1,0)"), j = part_index(g4, "L_(0,1)");
  auto eps = EpsilonAssignment::all_ones(8);
  eps.set(i, j, false);
  const auto one_zero = contracted_structure(g4.grading, eps);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const bool blocked = (gb.part_of[a] == i && gb.part_of[b] == j) || (gb.part_of[a] == j && gb.part_of[b] == i);
      for (std::size_t k = 0; k < 8; ++k)
        CHECK(one_zero.at(a, b, k) == (blocked ? Cyclo(0) : gb.constants.at(a, b, k)));
    }
  CHECK_FALSE(gb.constants.terms(part_index(g4, "L_(1,0)"), part_index(g4, "L_(0,1)")).empty());

  const Grading unlabeled(sl3(), g4.grading.parts());
  CHECK_THROWS_AS(contracted_structure(unlabeled, EpsilonAssignment(8)), InputError);
}

TEST_CASE("Jacobi oracle") {
  const auto& g4 = catalog("g4").grading;
  CHECK(jacobi_oracle(contracted_structure(g4, EpsilonAssignment::all_ones(8))));
  CHECK(jacobi_oracle(contracted_structure(g4, EpsilonAssignment(8))));

  // some single zero breaks the Cartan grading's Jacobi identity
  const auto& g1 = catalog("g1").grading;
  const PairIndex pairs(g1.size());
  std::size_t breaking = 0;
  for (std::size_t v = 0; v < pairs.size(); ++v) {
    const std::uint64_t bits = all_bits(pairs.size()) & ~(std::uint64_t{1} << v);
    breaking += !jacobi_oracle(contracted_structure(g1, EpsilonAssignment(g1.size(), bits)));
  }
  CHECK(breaking > 0);
}

TEST_CASE("compiled oracle agrees with the exact check") {
  std::mt19937_64 rng(23);
  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name).grading;
    const CompiledJacobiOracle oracle(g);
    const auto solutions = solve_binary(generate_equations(g));
    for (int s = 0; s < 60; ++s) {
      std::uint64_t bits = rng() & all_bits(oracle.variables());
      if (s % 2) bits = solutions.solutions[rng() % solutions.solutions.size()] | (rng() & solutions.free_mask);
      REQUIRE(oracle(bits) == jacobi_oracle(contracted_structure(g, EpsilonAssignment(g.size(), bits))));
    }
  }
}

TEST_CASE("equation systems") {
  const auto empty = generate_equations(trivial_grading());
  CHECK(empty.equations.empty());
  CHECK(empty.pairs.size() == 1);

  CHECK(generate_equations(catalog("g1").grading).pairs.size() == 28);
  CHECK(generate_equations(catalog("g2").grading).pairs.size() == 28);
  CHECK(generate_equations(catalog("g3").grading).pairs.size() == 36);
  const auto g4 = generate_equations(catalog("g4").grading);
  CHECK(g4.pairs.size() == 36);
  CHECK_FALSE(g4.equations.empty());

  // E12, E13, E23 style triples of root vectors have all double brackets zero
  const auto& g1 = catalog("g1").grading;
  const auto sys = generate_equations(g1);
  const auto silent = std::find_if(sys.triples.begin(), sys.triples.end(), [](const TripleRecord& t) { return t.rank == 0; });
  REQUIRE(silent != sys.triples.end());
  for (const auto& eq : sys.equations)
    CHECK_FALSE((eq.source.a == silent->a && eq.source.b == silent->b && eq.source.c == silent->c));
  for (const auto& eq : sys.equations) {
    CHECK(eq.source.rank >= 1);
    CHECK(eq.lhs.first <= eq.lhs.second);
  }
}

TEST_CASE("solver") {
  const auto trivial = solve_binary(generate_equations(trivial_grading()));
  CHECK(trivial.total() == 2);
  CHECK(trivial.expand() == std::vector<std::uint64_t>{0, 1});

  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name).grading;
    const auto sys = generate_equations(g);
    const auto result = solve_binary(sys);
    CHECK(result.contains(0));
    CHECK(result.contains(all_bits(sys.pairs.size())));
    CHECK(std::is_sorted(result.solutions.begin(), result.solutions.end()));
    for (auto s : result.solutions) {
      CHECK((s & result.free_mask) == 0);
      CHECK(satisfies(sys, s));
    }
    CHECK(result.free_mask == unconstrained_mask(sys));
    // inactive pairs never occur in an equation
    CHECK((all_bits(sys.pairs.size()) & ~sys.active_mask & ~result.free_mask) == 0);
    const auto parallel = solve_binary(sys, {.node_cap = 200'000'000, .jobs = 4});
    CHECK(parallel.solutions == result.solutions);
  }
  CHECK_THROWS_AS(solve_binary(generate_equations(catalog("g4").grading), {.node_cap = 100, .jobs = 1}), LimitError);
}

TEST_CASE("Z2^3 grading: equations match the oracle on every active assignment") {
  const auto& g = catalog("g2").grading;
  const auto result = solve_binary(generate_equations(g));
  const CompiledJacobiOracle oracle(g);
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < oracle.variables(); ++v)
    if (oracle.active_mask() >> v & 1u) active.push_back(v);
  REQUIRE(active.size() == 21);
  std::size_t accepted = 0, mismatches = 0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << active.size()); ++k) {
    std::uint64_t bits = 0;
    for (std::size_t t = 0; t < active.size(); ++t) bits |= (k >> t & 1u) << active[t];
    const bool ok = oracle(bits);
    accepted += ok;
    mismatches += ok != result.contains(bits);
  }
  CHECK(mismatches == 0);
  CHECK(accepted == 779);
  CHECK(result.solutions.size() == 779);
  CHECK(result.total() == 99712);
}

TEST_CASE("free variables do not change verdicts") {
  std::mt19937_64 rng(29);
  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name).grading;
    const CompiledJacobiOracle oracle(g);
    const std::uint64_t inactive = all_bits(oracle.variables()) & ~oracle.active_mask();
    for (int s = 0; s < 200; ++s) {
      const std::uint64_t bits = rng() & all_bits(oracle.variables());
      REQUIRE(oracle(bits) == oracle(bits ^ (rng() & inactive)));
    }
  }
}

TEST_CASE("orbits") {
  const auto& c = catalog("g4");
  const auto group = quotient_group(c.mad, c.grading, c.normalizer_generators);
  const std::uint64_t ones = all_bits(36);
  const auto fixed = symmetry_orbits({0, ones}, group, c.grading);
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[0].size == 1);
  CHECK(fixed[1].size == 1);

  const auto result = solve_binary(generate_equations(c.grading));
  CHECK(solutions_invariant(result, group, c.grading));
  const auto orbits = symmetry_orbits(result.solutions, group, c.grading);
  std::size_t total = 0;
  for (const auto& o : orbits) {
    CHECK(48 % o.size == 0);
    total += o.size;
  }
  CHECK(total == result.solutions.size());
  for (const auto& o : orbits)
    for (const auto& p : group.elements())
      CHECK_FALSE(lex_less(PairIndex(8), pushforward(PairIndex(8), p, o.representative),
                           o.representative));

  // a set that is not closed under the group is rejected
  const PairIndex pairs(8);
  const std::uint64_t single = std::uint64_t{1} << pairs.index(0, 1);
  CHECK_THROWS_AS(symmetry_orbits({single}, group, c.grading), Error);
}

TEST_CASE("orbit count by Burnside matches enumeration") {
  for (const char* name : {"g1", "g2"}) {
    const auto& c = catalog(name);
    const auto group = quotient_group(c.mad, c.grading, c.normalizer_generators);
    const auto result = solve_binary(generate_equations(c.grading));
    const auto full = result.expand();
    CHECK(full.size() == result.total());
    CHECK(symmetry_orbits(full, group, c.grading).size() == count_orbits(result, group, c.grading));
  }
}

TEST_CASE("pushforward") {
  const PairIndex pairs(3);
  const Permutation p({1, 2, 0});
  const std::uint64_t bits = std::uint64_t{1} << pairs.index(0, 1);
  // eps'_{ij} = eps_{p(i) p(j)}: eps'_{2,0} = eps_{0,1}
  CHECK(pushforward(pairs, p, bits) == std::uint64_t{1} << pairs.index(2, 0));
  CHECK(pushforward(pairs, Permutation::identity(3), bits) == bits);
}
