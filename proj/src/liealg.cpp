#include "gradelab/liealg.hpp"

#include <cctype>

namespace gradelab {

StructureConstants::StructureConstants(std::size_t dim)
    : dim_(dim), dense_(dim * dim * dim), sparse_(dim * dim) {}

const Cyclo& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  return dense_[(i * dim_ + j) * dim_ + k];
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, Cyclo value) {
  dense_[(i * dim_ + j) * dim_ + k] = std::move(value);
  rebuild_sparse(i, j);
}

void StructureConstants::rebuild_sparse(std::size_t i, std::size_t j) {
  auto& list = sparse_[i * dim_ + j];
  list.clear();
  for (std::size_t k = 0; k < dim_; ++k)
    if (!at(i, j, k).is_zero()) list.push_back({k, at(i, j, k)});
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("element does not belong to this algebra");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& list = terms(i, j);
      if (list.empty()) continue;
      const Cyclo xy = x[i] * y[j];
      for (const auto& t : list) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!(at(i, j, k) + at(j, i, k)).is_zero()) return false;
  return true;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.dense_.size(); ++i)
    if (!(a.dense_[i] == b.dense_[i])) return false;
  return true;
}

namespace {

// [[b_i, b_j], b_k] accumulated into out with sign.
void add_double_bracket(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k,
                        Vector& out) {
  for (const auto& t : sc.terms(i, j))
    for (const auto& u : sc.terms(t.index, k)) out[u.index] += t.coeff * u.coeff;
}

bool jacobiator_vanishes(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k) {
  Vector out(sc.dim());
  add_double_bracket(sc, i, j, k, out);
  add_double_bracket(sc, j, k, i, out);
  add_double_bracket(sc, k, i, j, out);
  return is_zero(out);
}

}  // namespace

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> find_jacobi_violation(
    const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  // For an antisymmetric bracket the Jacobiator is alternating, so strictly
  // increasing triples suffice.
  if (sc.is_antisymmetric()) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k)
          if (!jacobiator_vanishes(sc, i, j, k)) return std::tuple{i, j, k};
    return std::nullopt;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!jacobiator_vanishes(sc, i, j, k)) return std::tuple{i, j, k};
  return std::nullopt;
}

bool jacobi_check(const StructureConstants& sc) { return !find_jacobi_violation(sc).has_value(); }

SlAlgebra::SlAlgebra(std::size_t n) : n_(n) {
  if (n < 2) throw InputError("sl(n) needs n >= 2");
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      offdiag_.emplace_back(i, j);
      basis_.push_back(Matrix::unit(n, i, j));
      names_.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  for (std::size_t k = 1; k < n; ++k) {
    basis_.push_back(Matrix::unit(n, k, k) - Matrix::unit(n, k + 1, k + 1));
    names_.push_back("H" + std::to_string(k));
  }
  sc_ = StructureConstants(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) {
      const Matrix comm = basis_[a] * basis_[b] - basis_[b] * basis_[a];
      const Vector coords = from_matrix(comm);
      for (std::size_t k = 0; k < dim(); ++k)
        if (!coords[k].is_zero()) sc_.set(a, b, k, coords[k]);
    }
}

Vector SlAlgebra::from_matrix(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw InputError("matrix shape does not match sl(n)");
  if (!m.trace().is_zero()) throw InputError("matrix is not traceless");
  Vector x(dim());
  for (std::size_t idx = 0; idx < offdiag_.size(); ++idx) {
    const auto [i, j] = offdiag_[idx];
    x[idx] = m(i - 1, j - 1);
  }
  // diag(d_1..d_n) = sum h_k H_k  =>  h_k = d_1 + ... + d_k
  Cyclo partial;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    partial += m(k, k);
    x[offdiag_.size() + k] = partial;
  }
  return x;
}

Matrix SlAlgebra::to_matrix(const Vector& x) const {
  if (x.size() != dim()) throw ShapeError("coordinate vector does not match sl(n)");
  std::vector<Cyclo> flat(n_ * n_);
  for (std::size_t idx = 0; idx < offdiag_.size(); ++idx) {
    const auto [i, j] = offdiag_[idx];
    flat[(i - 1) * n_ + (j - 1)] = x[idx];
  }
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    const Cyclo& h = x[offdiag_.size() + k];
    if (h.is_zero()) continue;
    flat[k * n_ + k] += h;
    flat[(k + 1) * n_ + (k + 1)] -= h;
  }
  return Matrix(n_, n_, std::move(flat));
}

Vector SlAlgebra::basis_vector(std::size_t index) const {
  Vector v(dim());
  v.at(index) = Cyclo(1);
  return v;
}

std::size_t SlAlgebra::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown basis element '" + name + "'");
}

Vector SlAlgebra::parse_element(const std::string& text) const {
  Vector out(dim());
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool any = false;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    } else if (any) {
      throw InputError("expected '+' or '-' in '" + text + "'");
    }
    Rational coeff = 1;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) {
      std::size_t end = pos;
      while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
        ++end;
      coeff = Rational(text.substr(pos, end - pos));
      coeff.canonicalize();
      pos = end;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
      skip();
    }
    std::size_t end = pos;
    while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw InputError("expected basis name in '" + text + "'");
    const std::size_t idx = basis_index(text.substr(pos, end - pos));
    out[idx] += Cyclo(coeff * sign);
    pos = end;
    any = true;
  }
  if (!any) throw InputError("empty algebra element");
  return out;
}

const SlAlgebra& sl3() {
  static const SlAlgebra algebra(3);
  return algebra;
}

}  // namespace gradelab
