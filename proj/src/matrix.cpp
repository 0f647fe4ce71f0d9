#include "gradelab/matrix.hpp"

#include <sstream>

namespace gradelab {

namespace {

struct Elimination {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  Cyclo det_factor{1};  // product of pivots and row-swap signs
};

// Gauss-Jordan elimination; pivot is the first nonzero entry at or below the
// current row in each column.
Elimination eliminate(const Matrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<Vector> m(rows);
  for (std::size_t r = 0; r < rows; ++r) m[r] = input.row(r);
  Elimination out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      std::swap(m[p], m[row]);
      out.det_factor = -out.det_factor;
    }
    const Cyclo pivot = m[row][col];
    out.det_factor *= pivot;
    const Cyclo inv = pivot.inverse();
    for (std::size_t c = col; c < cols; ++c)
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Cyclo f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  std::vector<Cyclo> flat;
  flat.reserve(rows * cols);
  for (auto& r : m)
    for (auto& v : r) flat.push_back(std::move(v));
  out.reduced = Matrix(rows, cols, std::move(flat));
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclo> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw ShapeError("matrix entry count does not match shape");
  unify_order();
}

void Matrix::unify_order() {
  int common = 1;
  for (const auto& e : entries_) common = lcm_order(common, e.order());
  order_ = common;
  for (auto& e : entries_)
    if (e.order() != common) e = e.embed(common);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Cyclo(1);
  return m;
}

Matrix Matrix::diagonal(std::span<const Cyclo> entries) {
  const std::size_t n = entries.size();
  std::vector<Cyclo> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = entries[i];
  return Matrix(n, n, std::move(flat));
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw ShapeError("matrix unit index out of range");
  Matrix m(n, n);
  m.entries_[(i - 1) * n + (j - 1)] = Cyclo(1);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Cyclo value) {
  entries_[r * cols_ + c] = std::move(value);
  if (entries_[r * cols_ + c].order() != order_) unify_order();
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Cyclo Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of a non-square matrix");
  Cyclo t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  std::vector<Cyclo> flat(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) flat[c * rows_ + r] = (*this)(r, c);
  return Matrix(cols_, rows_, std::move(flat));
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  std::vector<Cyclo> flat(n * 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) flat[r * 2 * n + c] = (*this)(r, c);
    flat[r * 2 * n + n + r] = Cyclo(1);
  }
  const Elimination e = eliminate(Matrix(n, 2 * n, std::move(flat)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  std::vector<Cyclo> inv(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r * n + c] = e.reduced(r, n + c);
  return Matrix(n, n, std::move(inv));
}

Cyclo Matrix::det() const {
  if (!is_square()) throw ShapeError("determinant of a non-square matrix");
  if (rows_ == 0) return Cyclo(1);
  const Elimination e = eliminate(*this);
  if (e.pivots.size() < rows_) return Cyclo(0);
  return e.det_factor;
}

Matrix Matrix::rref() const { return eliminate(*this).reduced; }

std::vector<std::size_t> Matrix::pivot_columns() const { return eliminate(*this).pivots; }

std::size_t Matrix::rank() const { return eliminate(*this).pivots.size(); }

Matrix Matrix::embed(int order) const {
  std::vector<Cyclo> flat;
  flat.reserve(entries_.size());
  for (const auto& e : entries_) flat.push_back(e.embed(order));
  return Matrix(rows_, cols_, std::move(flat));
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
  std::vector<Cyclo> flat(a.entries_.size());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = a.entries_[i] + b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(flat));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  std::vector<Cyclo> flat(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclo& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclo& bkj = b(k, j);
        if (!bkj.is_zero()) flat[i * b.cols_ + j] += aik * bkj;
      }
    }
  return Matrix(a.rows_, b.cols_, std::move(flat));
}

Matrix operator*(const Cyclo& s, const Matrix& m) {
  std::vector<Cyclo> flat(m.entries_.size());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = s * m.entries_[i];
  return Matrix(m.rows_, m.cols_, std::move(flat));
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i])) return false;
  return true;
}

std::optional<Cyclo> Matrix::scalar_ratio(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return std::nullopt;
  std::optional<Cyclo> ratio;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const bool a_zero = entries_[i].is_zero();
    const bool b_zero = other.entries_[i].is_zero();
    if (a_zero != b_zero) return std::nullopt;
    if (a_zero) continue;
    if (!ratio) ratio = other.entries_[i] / entries_[i];
    else if (!(other.entries_[i] == *ratio * entries_[i])) return std::nullopt;
  }
  if (!ratio) ratio = Cyclo(1);
  return ratio;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).to_string();
    }
  }
  os << ']';
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
Matrix mat_inverse(const Matrix& a) { return a.inverse(); }
Cyclo det(const Matrix& a) { return a.det(); }
Matrix transpose(const Matrix& a) { return a.transpose(); }
Matrix rref(const Matrix& a) { return a.rref(); }

Matrix power(const Matrix& a, unsigned exponent) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Vector scale(const Cyclo& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = s * v[i];
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace gradelab
