#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradelab/cyclo.hpp"

namespace gradelab {

using Vector = std::vector<Cyclo>;

/// Dense row-major matrix over Q(zeta_N). All entries share one cyclotomic
/// order; the constructor embeds them into the lcm of their orders.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclo> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Cyclo> entries);
  /// Matrix unit E_ij, indices 1-based as in the usual notation.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }
  std::span<const Cyclo> entries() const { return entries_; }

  const Cyclo& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Cyclo value);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Cyclo trace() const;

  Matrix transpose() const;
  /// Throws DomainError when singular.
  Matrix inverse() const;
  Cyclo det() const;
  /// Reduced row echelon form with the first nonzero entry of each column as pivot.
  Matrix rref() const;
  std::vector<std::size_t> pivot_columns() const;
  std::size_t rank() const;
  Matrix embed(int order) const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclo& s, const Matrix& m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Scalar c with other == c * this, if one exists.
  std::optional<Cyclo> scalar_ratio(const Matrix& other) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 1;
  std::vector<Cyclo> entries_;

  void unify_order();
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& a);
Cyclo det(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix rref(const Matrix& a);
Matrix power(const Matrix& a, unsigned exponent);

Vector scale(const Cyclo& s, const Vector& v);
Vector add(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace gradelab
