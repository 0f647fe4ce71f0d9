#pragma once

#include <cstddef>
#include <vector>

#include "gradelab/matrix.hpp"

namespace gradelab {

/// Linear subspace of K^n stored by its canonical reduced row echelon basis,
/// so equality of subspaces is equality of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Vectors annihilated by every basis vector under the bilinear pairing sum x_i y_i.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

/// Null space of a (column vectors x with a x = 0).
Subspace kernel(const Matrix& a);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Vector& w);
bool subspace_equal(const Subspace& u, const Subspace& v);
/// Image of u under the linear map m (columns = images of the standard basis).
Subspace image(const Matrix& m, const Subspace& u);

}  // namespace gradelab
