#include <algorithm>
#include <set>

#include "doctest.h"

#include "gradelab/catalog.hpp"
#include "gradelab/error.hpp"
#include "gradelab/normalizer.hpp"

using namespace gradelab;

namespace {

std::size_t part_index(const CatalogEntry& c, const std::string& name) {
  const auto& n = c.part_names;
  const auto it = std::find(n.begin(), n.end(), name);
  REQUIRE(it != n.end());
  return static_cast<std::size_t>(it - n.begin());
}

Matrix diag3(Cyclo a, Cyclo b, Cyclo c) {
  const Cyclo d[] = {a, b, c};
  return Matrix::diagonal(d);
}

}  // namespace

TEST_CASE("permutations") {
  const Permutation p({1, 2, 0, 3});
  CHECK(p.order() == 3);
  CHECK(p.cycles() == "(0 1 2)");
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p, Permutation({1, 0, 2, 3})) == Permutation({2, 1, 0, 3}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  const PermutationGroup s3(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  CHECK(s3.order() == 6);
  CHECK(s3.exponent() == 6);
  CHECK_THROWS_AS(PermutationGroup(6, {Permutation({1, 2, 3, 4, 5, 0}), Permutation({1, 0, 2, 3, 4, 5})}, 100),
                  LimitError);
}

TEST_CASE("normalizer membership") {
  CHECK(normalizes(named_automorphism("AdB1"), catalog("g1").mad));
  CHECK(normalizes(named_automorphism("AdH"), catalog("g3").mad));
  const Matrix e = Matrix::identity(3) + Matrix::unit(3, 1, 2);
  CHECK_FALSE(normalizes(make_ad(sl3(), e), catalog("g4").mad));
  CHECK_FALSE(normalizes(named_automorphism("AdS"), catalog("g1").mad));
}

TEST_CASE("induced permutations") {
  const auto& g4 = catalog("g4");
  CHECK(induced_permutation(Automorphism::identity(sl3()), g4.grading).is_identity());

  const auto& g1 = catalog("g1");
  const auto out = induced_permutation(named_automorphism("OutI"), g1.grading);
  CHECK(out(part_index(g1, "N_0")) == part_index(g1, "N_0"));
  for (auto [a, b] : {std::pair{"N_a1", "N_-a1"}, {"N_a2", "N_-a2"}, {"N_a1+a2", "N_-a1-a2"}}) {
    CHECK(out(part_index(g1, a)) == part_index(g1, b));
    CHECK(out(part_index(g1, b)) == part_index(g1, a));
  }

  const auto d = induced_permutation(named_automorphism("AdD"), g4.grading);
  CHECK(d(part_index(g4, "L_(1,0)")) == part_index(g4, "L_(1,0)"));
  CHECK(d(part_index(g4, "L_(2,0)")) == part_index(g4, "L_(2,0)"));
  CHECK(d(part_index(g4, "L_(0,1)")) != part_index(g4, "L_(0,1)"));

  CHECK_THROWS_WITH_AS(induced_permutation(make_ad(sl3(), diag3(1, 2, 3)), g4.grading),
                       doctest::Contains("does not map part"), InputError);
}

TEST_CASE("quotient orders") {
  for (const char* name : {"g1", "g3", "g4"}) {
    const auto& c = catalog(name);
    CHECK(quotient_group(c.mad, c.grading, c.normalizer_generators).order() == c.expected_quotient_order);
  }
  const auto& g3 = catalog("g3");
  const auto q3 = quotient_group(g3.mad, g3.grading, g3.normalizer_generators);
  for (const auto& p : q3.elements()) CHECK(p.order() == (p.is_identity() ? 1u : 2u));
  CHECK_THROWS_AS(analyze_quotient(catalog("g4").mad, catalog("g4").grading, catalog("g4").normalizer_generators, 10),
                  LimitError);
  CHECK_THROWS_AS(quotient_group(catalog("g4").mad, catalog("g4").grading, {make_ad(sl3(), diag3(1, 2, 3))}), InputError);
}

// The quotient for the Z2^3 grading acts on labels by linear maps fixing the
// label of the two-dimensional part, so it lies in that vector's stabilizer
// in GL(3,2), a group of order 24. Enumerating the stabilizer directly and
// comparing with the computed quotient pins down the order independently.
TEST_CASE("Z2^3 grading quotient equals the label stabilizer in GL(3,2)") {
  const auto& c = catalog("g2");
  const auto& g = c.grading;
  const auto quotient = quotient_group(c.mad, g, c.normalizer_generators);
  const AbelianGroup::Element fixed{0, 0, 1};

  std::set<Permutation> stabilizer;
  for (unsigned bits = 0; bits < 512; ++bits) {
    int m[3][3];
    for (int k = 0; k < 9; ++k) m[k / 3][k % 3] = bits >> k & 1;
    auto apply = [&](const AbelianGroup::Element& v) {
      AbelianGroup::Element out(3);
      for (int r = 0; r < 3; ++r) out[r] = (m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2]) % 2;
      return out;
    };
    if (apply(fixed) != fixed) continue;
    std::vector<std::size_t> mapping;
    bool ok = true;
    for (const auto& l : g.labels()) {
      const auto target = g.part_with_label(apply(l));
      if (!target) {
        ok = false;
        break;
      }
      mapping.push_back(*target);
    }
    std::vector<std::size_t> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    if (!ok || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    stabilizer.insert(Permutation(mapping));
  }
  CHECK(stabilizer.size() == 24);
  CHECK(quotient.order() == 24);
  CHECK(std::set<Permutation>(quotient.elements().begin(), quotient.elements().end()) == stabilizer);
}

TEST_CASE("inner subquotients") {
  const auto& g4 = catalog("g4");
  CHECK(inner_subquotient(g4.mad, g4.grading, g4.normalizer_generators).order() == 24);
  const auto& g1 = catalog("g1");
  CHECK(inner_subquotient(g1.mad, g1.grading, g1.normalizer_generators).order() == 6);
  CHECK(inner_subquotient(g1.mad, g1.grading, {Automorphism::identity(sl3())}).order() == 1);
}

TEST_CASE("linearization on Z3 x Z3 labels") {
  const auto& g4 = catalog("g4");
  const auto id = linearize_on_labels(Permutation::identity(8), g4.grading);
  REQUIRE(id.has_value());
  CHECK(*id == Mat2Z3{{{1, 0}, {0, 1}}});
  const auto s = linearize_on_labels(induced_permutation(named_automorphism("AdS"), g4.grading), g4.grading);
  REQUIRE(s.has_value());
  CHECK(det_mod3(*s) == 1);

  std::set<Mat2Z3> image;
  const auto inner = inner_subquotient(g4.mad, g4.grading, g4.normalizer_generators);
  for (const auto& p : inner.elements())
    image.insert(linearize_on_labels(p, g4.grading).value());
  // SL(2,Z3) by brute force over all 81 matrices
  std::set<Mat2Z3> sl2;
  for (int k = 0; k < 81; ++k) {
    const Mat2Z3 m{{{k % 3, k / 3 % 3}, {k / 9 % 3, k / 27}}};
    if (((m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 3 + 3) % 3 == 1) sl2.insert(m);
  }
  CHECK(sl2.size() == 24);
  CHECK(image == sl2);
  CHECK_THROWS_AS(linearize_on_labels(Permutation::identity(7), catalog("g1").grading), InputError);
}

TEST_CASE("induced permutation properties") {
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    for (const auto& f : c.normalizer_generators)
      for (const auto& h : c.normalizer_generators)
        CHECK(induced_permutation(compose(f, h), c.grading) ==
              compose(induced_permutation(f, c.grading), induced_permutation(h, c.grading)));
    for (const auto& m : c.mad.group_generators) CHECK(induced_permutation(m, c.grading).is_identity());
  }
  for (const char* name : {"g1", "g2"}) {
    const auto& c = catalog(name);
    std::size_t cartan = 0;
    while (c.grading.part(cartan).dim() != 2) ++cartan;
    const auto group = quotient_group(c.mad, c.grading, c.normalizer_generators);
    for (const auto& p : group.elements()) CHECK(p(cartan) == cartan);
  }
}

TEST_CASE("quotient records words and parity") {
  const auto& c = catalog("g1");
  const auto qa = analyze_quotient(c.mad, c.grading, c.normalizer_generators);
  CHECK_FALSE(qa.discrepancy.has_value());
  CHECK(qa.relations_checked > 0);
  std::size_t inner = 0;
  for (const auto& e : qa.elements) {
    CHECK(e.has_inner != e.has_outer);
    inner += e.has_inner;
    // replaying the word reproduces the permutation
    Permutation p = Permutation::identity(c.grading.size());
    for (auto i : e.word) {
      const auto& gens = c.normalizer_generators;
      const Automorphism& a = i < gens.size() ? gens[i] : c.mad.group_generators[i - gens.size()];
      p = compose(p, induced_permutation(a, c.grading));
    }
    CHECK(p == e.permutation);
  }
  CHECK(inner == 6);
}
