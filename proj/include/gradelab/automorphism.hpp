#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradelab/liealg.hpp"
#include "gradelab/subspace.hpp"

namespace gradelab {

enum class AutKind { Inner, Outer };

const char* to_string(AutKind kind);

/// Automorphism of sl(n): Ad_A X = A^{-1} X A or Out_A X = -(A^{-1} X A)^T.
///
/// The representative A is projective; it is stored scaled so that its first
/// nonzero entry is 1. Equality compares the induced action on coordinates.
class Automorphism {
 public:
  Automorphism(const SlAlgebra& algebra, AutKind kind, const Matrix& rep);

  static Automorphism identity(const SlAlgebra& algebra);

  const SlAlgebra& algebra() const { return *algebra_; }
  AutKind kind() const { return kind_; }
  const Matrix& rep() const { return rep_; }
  /// Column j holds the coordinates of the image of basis element j.
  const Matrix& action() const { return action_; }

  Vector apply(const Vector& x) const { return action_ * x; }
  Matrix apply_matrix(const Matrix& x) const;
  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.action_ == b.action_; }

 private:
  Automorphism(const SlAlgebra& algebra, AutKind kind, Matrix rep, Matrix action);

  friend Automorphism compose(const Automorphism& f, const Automorphism& g);
  friend Automorphism inverse(const Automorphism& f);

  const SlAlgebra* algebra_;
  AutKind kind_;
  Matrix rep_;
  Matrix action_;
};

/// Throws DomainError for a singular A.
Automorphism make_ad(const SlAlgebra& algebra, const Matrix& a);
Automorphism make_out(const SlAlgebra& algebra, const Matrix& a);

/// f after g.
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);
/// h^{-1} f h
Automorphism conjugate_by(const Automorphism& f, const Automorphism& h);
bool commute(const Automorphism& f, const Automorphism& g);

/// Every element of the group generated by gens (finite groups only).
/// Throws LimitError past cap elements.
std::vector<Automorphism> generate_group(const std::vector<Automorphism>& gens, std::size_t cap = 10000);

inline constexpr unsigned kDefaultOrderCap = 96;

/// Smallest m <= cap with f^m = id.
std::optional<unsigned> order(const Automorphism& f, unsigned cap = kDefaultOrderCap);

struct Eigenspace {
  unsigned exponent;  // eigenvalue = zeta_m^exponent, m = order of the automorphism
  Cyclo eigenvalue;
  Subspace space;
};

/// Eigenspace decomposition of a finite-order automorphism, ascending by
/// exponent, nonzero spaces only. Throws DomainError if no order <= cap.
std::vector<Eigenspace> eigenspaces(const Automorphism& f, unsigned cap = kDefaultOrderCap);

}  // namespace gradelab
