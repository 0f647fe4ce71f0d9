#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gradelab/error.hpp"

namespace gradelab {

/// Arbitrary-precision rational; gmpxx keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// Tables for Q(zeta_N): the cyclotomic polynomial and the reduction of every
/// power zeta^k, 0 <= k < N, onto the power basis {zeta^0 .. zeta^(phi-1)}.
struct CycloField {
  int order = 1;
  int phi = 1;
  std::vector<std::int64_t> cyclotomic_poly;             // length phi + 1, monic
  std::vector<std::vector<std::int64_t>> power_reduction;  // N rows of length phi

  static const CycloField& get(int order);
};

int euler_phi(int n);
int lcm_order(int a, int b);

/// Exact element of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N).
///
/// Coefficients are kept reduced modulo Phi_N so two elements of the same
/// order are equal iff their coefficient vectors are equal. Binary operations
/// on different orders embed both operands into Q(zeta_lcm) first.
class Cyclo {
 public:
  Cyclo();
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyclo(int order, std::vector<Rational> coeffs);

  static Cyclo root_of_unity(int order, long exponent);

  int order() const { return field_->order; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  /// Same element represented in Q(zeta_M); M must be a multiple of order().
  Cyclo embed(int target_order) const;
  /// Smallest-order representation of the same element.
  Cyclo reduce_order() const;
  Cyclo conjugate() const;
  /// Throws DomainError on zero.
  Cyclo inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs);

  friend Cyclo operator+(Cyclo lhs, const Cyclo& rhs) { return lhs += rhs; }
  friend Cyclo operator-(Cyclo lhs, const Cyclo& rhs) { return lhs -= rhs; }
  friend Cyclo operator*(const Cyclo& lhs, const Cyclo& rhs);
  friend Cyclo operator/(const Cyclo& lhs, const Cyclo& rhs) { return lhs * rhs.inverse(); }
  friend bool operator==(const Cyclo& lhs, const Cyclo& rhs);

 private:
  const CycloField* field_;
  std::vector<Rational> coeffs_;

  void reduce_from_powers(const std::vector<Rational>& by_power);
};

std::ostream& operator<<(std::ostream& os, const Cyclo& value);

/// Default ambient order for the sl(3) catalog: Q(zeta_24) holds i, zeta_3,
/// zeta_8 and sqrt(3).
inline constexpr int kCatalogOrder = 24;

}  // namespace gradelab
