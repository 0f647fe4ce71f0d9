#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gradelab/matrix.hpp"

namespace gradelab {

/// Structure constants c^k_ij of a finite-dimensional algebra,
/// [b_i, b_j] = sum_k c^k_ij b_k. Jacobi is not assumed.
class StructureConstants {
 public:
  struct Term {
    std::size_t index;
    Cyclo coeff;
  };

  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Cyclo& at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, Cyclo value);
  /// Nonzero terms of [b_i, b_j].
  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }

  Vector bracket(const Vector& x, const Vector& y) const;
  bool is_antisymmetric() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Cyclo> dense_;
  std::vector<std::vector<Term>> sparse_;

  void rebuild_sparse(std::size_t i, std::size_t j);
};

/// First basis triple (i, j, k) whose Jacobiator is nonzero.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> find_jacobi_violation(
    const StructureConstants& sc);
bool jacobi_check(const StructureConstants& sc);

/// sl(n, C) with basis E_ij (i != j, row-major) followed by
/// H_k = E_kk - E_{k+1,k+1}, k = 1..n-1.
class SlAlgebra {
 public:
  explicit SlAlgebra(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return n_ * n_ - 1; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureConstants& structure_constants() const { return sc_; }

  /// Throws InputError for a non-traceless or wrongly shaped matrix.
  Vector from_matrix(const Matrix& m) const;
  Matrix to_matrix(const Vector& x) const;
  Vector bracket(const Vector& x, const Vector& y) const { return sc_.bracket(x, y); }
  Vector basis_vector(std::size_t index) const;
  /// Index of a named basis element such as "E12" or "H1".
  std::size_t basis_index(const std::string& name) const;
  /// Parses a combination like "E12 - 2*H1 + 1/2*E31".
  Vector parse_element(const std::string& text) const;

 private:
  std::size_t n_;
  std::vector<Matrix> basis_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::size_t, std::size_t>> offdiag_;
  StructureConstants sc_;
};

/// Shared instance of sl(3, C).
const SlAlgebra& sl3();

}  // namespace gradelab
