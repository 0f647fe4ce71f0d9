#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "gradelab/cyclo.hpp"
#include "gradelab/error.hpp"

using namespace gradelab;

namespace {

Cyclo z(int n, long k) { return Cyclo::root_of_unity(n, k); }

Cyclo random_cyclo(std::mt19937_64& rng) {
  static const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12, 24};
  const int n = orders[rng() % 9];
  Cyclo x = Cyclo(0).embed(n);
  for (int t = 0; t < 3; ++t)
    x += Cyclo(Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1)) *
         z(n, static_cast<long>(rng() % n));
  return x;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("basic identities") {
  CHECK(z(4, 1) * z(4, 1) == Cyclo(-1));
  CHECK(z(3, 1).inverse() == z(3, 2));
  const Cyclo s = z(24, 2) + z(24, 22);
  CHECK(s * s == Cyclo(3));
  CHECK(near(s.to_complex(), std::sqrt(3.0)));
  CHECK(z(3, 3) == Cyclo(1));
  CHECK(z(5, -1) == z(5, 4));
  CHECK((Cyclo(1) + z(3, 1) + z(3, 2)).is_zero());
}

TEST_CASE("embedding") {
  CHECK(Cyclo(-1).embed(24) == Cyclo(-1));
  CHECK(Cyclo(-1).embed(24).order() == 24);
  CHECK(z(3, 1).embed(24) == z(24, 8));
  CHECK(z(8, 1).embed(24) == z(24, 3));
  CHECK_THROWS_AS(z(8, 1).embed(12), ShapeError);
  CHECK(z(24, 8).reduce_order().order() == 3);
  CHECK(Cyclo(Rational(2, 3)).embed(24).reduce_order().order() == 1);
}

TEST_CASE("conjugation") {
  CHECK(z(4, 1).conjugate() == -z(4, 1));
  CHECK(Cyclo(Rational(2, 3)).conjugate() == Cyclo(Rational(2, 3)));
  CHECK(z(24, 5).conjugate() == z(24, 19));
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Cyclo(0).inverse(), DomainError);
  CHECK_THROWS_AS(Cyclo(1) / (Cyclo(1) + z(3, 1) + z(3, 2)), DomainError);
  CHECK_THROWS_AS(z(0, 1), DomainError);
}

TEST_CASE("unreduced rational input is canonicalized") {
  const Cyclo a(Rational(6, 2));
  CHECK(a == Cyclo(3));
  CHECK(Cyclo(4, {Rational(4, 4), Rational(0)}) == Cyclo(1));
}

TEST_CASE("mixed orders meet at the lcm") {
  const Cyclo a = z(3, 1) + z(4, 1);
  CHECK(a.order() == 12);
  CHECK(near(a.to_complex(), std::polar(1.0, 2 * std::numbers::pi / 3) + std::complex<double>(0, 1)));
  CHECK(z(3, 1) * z(8, 1) == z(24, 11));
}

TEST_CASE("formatting") {
  CHECK(Cyclo(0).to_string() == "0");
  CHECK((Cyclo(Rational(1, 2)) - z(24, 5)).to_string() == "1/2 - z24^5");
  CHECK((Cyclo(Rational(1, 2)) - z(24, 3)).to_string() == "1/2 - z8");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int s = 0; s < 1000; ++s) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Cyclo(1));
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 1000; ++s) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
    const int m = 120;
    REQUIRE((a * b).embed(m) == a.embed(m) * b.embed(m));
    REQUIRE((a + b).embed(m) == a.embed(m) + b.embed(m));
    REQUIRE(a.embed(m).reduce_order() == a);
  }
}

TEST_CASE("agrees with complex floating point") {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 1000; ++s) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
    REQUIRE(near((a * b).to_complex(), a.to_complex() * b.to_complex()));
    REQUIRE(near((a + b).to_complex(), a.to_complex() + b.to_complex()));
    REQUIRE(near(a.conjugate().to_complex(), std::conj(a.to_complex())));
    if (!a.is_zero()) REQUIRE(near(a.inverse().to_complex(), 1.0 / a.to_complex()));
  }
}
