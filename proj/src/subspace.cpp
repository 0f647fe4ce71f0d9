#include "gradelab/subspace.hpp"

namespace gradelab {

namespace {

Matrix stack_rows(std::size_t ambient_dim, const std::vector<Vector>& rows) {
  std::vector<Cyclo> flat;
  flat.reserve(rows.size() * ambient_dim);
  for (const auto& r : rows) {
    if (r.size() != ambient_dim) throw ShapeError("vector does not match ambient dimension");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), ambient_dim, std::move(flat));
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_dim_(ambient_dim) {
  if (spanning.empty()) return;
  const Matrix reduced = stack_rows(ambient_dim, spanning).rref();
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    Vector row = reduced.row(r);
    if (gradelab::is_zero(row)) break;
    basis_.push_back(std::move(row));
  }
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> rows(ambient_dim, Vector(ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = Cyclo(1);
  return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw ShapeError("vector does not match ambient dimension");
  // reduce v against the RREF basis; leftover must vanish
  Vector rest = v;
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    if (rest[pivot].is_zero()) continue;
    const Cyclo f = rest[pivot];
    for (std::size_t i = pivot; i < ambient_dim_; ++i)
      if (!b[i].is_zero()) rest[i] -= f * b[i];
  }
  return gradelab::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw ShapeError("ambient dimension mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return full(ambient_dim_);
  return kernel(stack_rows(ambient_dim_, basis_));
}

Subspace kernel(const Matrix& a) {
  const std::size_t n = a.cols();
  const Matrix reduced = a.rref();
  const std::vector<std::size_t> pivots = a.rows() == 0 ? std::vector<std::size_t>{} : a.pivot_columns();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> spanning;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = Cyclo(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    spanning.push_back(std::move(v));
  }
  return Subspace(n, spanning);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("ambient dimension mismatch");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace(u.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("ambient dimension mismatch");
  return subspace_sum(u.annihilator(), v.annihilator()).annihilator();
}

bool subspace_contains(const Subspace& u, const Vector& w) { return u.contains(w); }

bool subspace_equal(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("ambient dimension mismatch");
  return u == v;
}

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw ShapeError("map does not act on this subspace");
  std::vector<Vector> images;
  images.reserve(u.dim());
  for (const auto& b : u.basis()) images.push_back(m * b);
  return Subspace(m.rows(), images);
}

}  // namespace gradelab
