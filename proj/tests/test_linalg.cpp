#include <random>

#include "doctest.h"

#include "gradelab/catalog.hpp"
#include "gradelab/error.hpp"
#include "gradelab/subspace.hpp"

using namespace gradelab;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::vector<Cyclo> e;
  for (std::size_t i = 0; i < r * c; ++i) {
    const long k = static_cast<long>(rng() % 7) - 3;
    e.push_back(rng() % 3 == 0 ? Cyclo(k) * Cyclo::root_of_unity(3, 1) : Cyclo(rng() % 2 ? k : 0));
  }
  return Matrix(r, c, std::move(e));
}

}  // namespace

TEST_CASE("matrix basics") {
  CHECK(det(named_matrix("B1")) == Cyclo(1));
  CHECK(mat_inverse(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(transpose(Matrix::unit(3, 1, 2)) == Matrix::unit(3, 2, 1));
  CHECK(power(named_matrix("P"), 3) == Matrix::identity(3));
  CHECK(power(named_matrix("Q"), 3) == Matrix::identity(3));
  CHECK(Matrix::identity(3).trace() == Cyclo(3));
}

TEST_CASE("matrix errors") {
  CHECK_THROWS_AS(mat_inverse(Matrix(2, 2)), DomainError);
  CHECK_THROWS_AS(Matrix::identity(2) * Matrix::identity(3), ShapeError);
  CHECK_THROWS_AS(Matrix::identity(2) + Matrix::identity(3), ShapeError);
  CHECK_THROWS_AS(det(Matrix(2, 3)), ShapeError);
  CHECK_THROWS_AS(Matrix(2, 2, {Cyclo(1)}), ShapeError);
}

TEST_CASE("kernels") {
  CHECK(kernel(Matrix::identity(4)).is_zero());
  CHECK(kernel(Matrix(2, 3)).dim() == 3);
  const Cyclo d[] = {Cyclo(0), Cyclo(1), Cyclo(1)};
  CHECK(kernel(Matrix::diagonal(d)) == Subspace(3, {vec({1, 0, 0})}));
}

TEST_CASE("subspace operations") {
  const Subspace e1(3, {vec({1, 0, 0})}), e2(3, {vec({0, 1, 0})}), e3(3, {vec({0, 0, 1})});
  CHECK(subspace_sum(e1, e2) == Subspace(3, {vec({1, 0, 0}), vec({0, 1, 0})}));
  CHECK(subspace_intersect(subspace_sum(e1, e2), subspace_sum(e2, e3)) == e2);
  const Subspace diag(3, {vec({1, 1, 0})});
  CHECK(subspace_contains(diag, scale(Cyclo::root_of_unity(3, 1), vec({1, 1, 0}))));
  CHECK_FALSE(subspace_contains(diag, vec({1, 0, 0})));
  CHECK(subspace_equal(Subspace(3, {vec({2, 2, 0})}), diag));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace(2)), ShapeError);
  CHECK_THROWS_AS(subspace_contains(e1, vec({1, 0})), ShapeError);
}

TEST_CASE("random matrix properties") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 300; ++s) {
    const Matrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
    REQUIRE(a.rank() + kernel(a).dim() == a.cols());
    REQUIRE(rref(rref(a)) == rref(a));
    REQUIRE(a * Matrix::identity(a.cols()) == a);
    const Subspace ker = kernel(a);
    for (const auto& v : ker.basis()) REQUIRE(is_zero(a * v));

    const Matrix x = random_matrix(rng, 3, 3), y = random_matrix(rng, 3, 3);
    REQUIRE(det(x * y) == det(x) * det(y));
    if (!det(x).is_zero()) REQUIRE(x * mat_inverse(x) == Matrix::identity(3));
    REQUIRE(transpose(x * y) == transpose(y) * transpose(x));
  }
}

TEST_CASE("dimension formula for sums and intersections") {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 300; ++s) {
    const Matrix a = random_matrix(rng, 1 + rng() % 4, 6), b = random_matrix(rng, 1 + rng() % 4, 6);
    std::vector<Vector> ua, ub;
    for (std::size_t r = 0; r < a.rows(); ++r) ua.push_back(a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) ub.push_back(b.row(r));
    const Subspace u(6, ua), v(6, ub);
    const Subspace w = subspace_intersect(u, v);
    REQUIRE(subspace_sum(u, v).dim() + w.dim() == u.dim() + v.dim());
    REQUIRE(u.contains(w));
    REQUIRE(v.contains(w));
    REQUIRE(u.annihilator().dim() + u.dim() == 6);
  }
}
