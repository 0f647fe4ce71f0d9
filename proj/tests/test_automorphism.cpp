#include <random>

#include "doctest.h"

#include "gradelab/catalog.hpp"
#include "gradelab/error.hpp"

using namespace gradelab;

namespace {

const SlAlgebra& alg() { return sl3(); }
Vector el(const std::string& s) { return sl3().parse_element(s); }
Matrix diag3(Cyclo a, Cyclo b, Cyclo c) {
  const Cyclo d[] = {a, b, c};
  return Matrix::diagonal(d);
}
const Cyclo w = Cyclo::root_of_unity(3, 1);

}  // namespace

TEST_CASE("Ad and Out on basis elements") {
  CHECK(make_out(alg(), Matrix::identity(3)).apply(el("E12")) == el("-E21"));
  CHECK(make_ad(alg(), diag3(1, w, w * w)).apply(el("E12")) == scale(w, el("E12")));
  CHECK_THROWS_AS(make_ad(alg(), Matrix(3, 3)), DomainError);
}

TEST_CASE("Sylvester matrix exchanges P and Q up to scalar") {
  const auto s = named_automorphism("AdS");
  const Matrix p = named_matrix("P"), q = named_matrix("Q");
  // Ad_S X = S^-1 X S, so S P S^-1 corresponds to the inverse automorphism
  const Matrix image = inverse(s).apply_matrix(p);
  CHECK(image.scalar_ratio(q).has_value());
}

TEST_CASE("composition and inverses") {
  const auto out = make_out(alg(), Matrix::identity(3));
  CHECK(compose(out, out).is_identity());
  const auto ad_p = named_automorphism("AdP");
  CHECK(inverse(ad_p) == make_ad(alg(), power(named_matrix("P"), 2)));
  CHECK(compose(ad_p, out).kind() == AutKind::Outer);
  CHECK(compose(out, ad_p).kind() == AutKind::Outer);
  CHECK(compose(out, out).kind() == AutKind::Inner);
  CHECK(make_ad(alg(), named_matrix("P")) == make_ad(alg(), Cyclo(5) * named_matrix("P")));
}

TEST_CASE("composition matches applying in turn") {
  const std::vector<std::string> names = {"AdB1", "AdB2", "AdH", "AdS", "AdD", "AdP", "AdQ", "OutI", "OutB2", "OutH"};
  for (const auto& a : names)
    for (const auto& b : names) {
      const auto f = named_automorphism(a), g = named_automorphism(b);
      const auto fg = compose(f, g);
      REQUIRE(fg.action() == f.action() * g.action());
      REQUIRE(compose(inverse(fg), fg).is_identity());
    }
}

TEST_CASE("orders") {
  CHECK(order(make_out(alg(), Matrix::identity(3)), 10) == 2u);
  CHECK(order(named_automorphism("AdP"), 10) == 3u);
  CHECK(order(Automorphism::identity(alg()), 10) == 1u);
  CHECK_FALSE(order(make_ad(alg(), diag3(1, 2, 3)), 10).has_value());
}

TEST_CASE("eigenspaces") {
  const auto out = eigenspaces(make_out(alg(), Matrix::identity(3)));
  REQUIRE(out.size() == 2);
  CHECK(out[0].eigenvalue == Cyclo(1));
  CHECK(out[0].space.dim() == 3);
  CHECK(out[0].space.contains(el("E12 - E21")));
  CHECK(out[1].eigenvalue == Cyclo(-1));
  CHECK(out[1].space.dim() == 5);

  const auto id = eigenspaces(Automorphism::identity(alg()));
  REQUIRE(id.size() == 1);
  CHECK(id[0].space.dim() == 8);

  const auto p = eigenspaces(named_automorphism("AdP"));
  CHECK(p.size() == 3);
  std::size_t total = 0;
  for (const auto& e : p) total += e.space.dim();
  CHECK(total == 8);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) CHECK(subspace_intersect(p[i].space, p[j].space).is_zero());

  CHECK_THROWS_AS(eigenspaces(make_ad(alg(), diag3(1, 2, 3))), DomainError);
}

TEST_CASE("finite groups") {
  CHECK(generate_group({named_automorphism("AdP"), named_automorphism("AdQ")}).size() == 9);
  CHECK_THROWS_AS(generate_group({make_ad(alg(), diag3(1, 2, 3))}, 50), LimitError);
}

TEST_CASE("automorphisms preserve the bracket") {
  std::mt19937_64 rng(17);
  std::vector<Automorphism> pool;
  for (const char* n : {"AdB1", "AdB2", "AdH", "AdS", "AdD", "AdP", "AdQ", "OutI", "OutB2", "OutS"})
    pool.push_back(named_automorphism(n));
  pool.push_back(make_ad(alg(), diag3(1, 2, Rational(1, 3))));
  for (int s = 0; s < 1000; ++s) {
    const auto f = compose(pool[rng() % pool.size()], pool[rng() % pool.size()]);
    Vector x(8), y(8);
    for (std::size_t i = 0; i < 8; ++i) {
      x[i] = Cyclo(static_cast<long>(rng() % 7) - 3);
      y[i] = Cyclo(static_cast<long>(rng() % 7) - 3) * Cyclo::root_of_unity(4, static_cast<long>(rng() % 4));
    }
    REQUIRE(f.apply(alg().bracket(x, y)) == alg().bracket(f.apply(x), f.apply(y)));
  }
}
