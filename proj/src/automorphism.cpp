#include "gradelab/automorphism.hpp"

#include <algorithm>

namespace gradelab {

namespace {

Matrix normalize_projective(const Matrix& a) {
  for (const auto& e : a.entries())
    if (!e.is_zero()) return e.inverse() * a;
  throw DomainError("zero matrix cannot represent an automorphism");
}

Matrix action_of(const SlAlgebra& algebra, AutKind kind, const Matrix& rep) {
  const Matrix inv = rep.inverse();
  const std::size_t d = algebra.dim();
  std::vector<Cyclo> flat(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    Matrix img = inv * algebra.basis()[j] * rep;
    if (kind == AutKind::Outer) img = -img.transpose();
    const Vector coords = algebra.from_matrix(img);
    for (std::size_t i = 0; i < d; ++i) flat[i * d + j] = coords[i];
  }
  return Matrix(d, d, std::move(flat));
}

}  // namespace

const char* to_string(AutKind kind) { return kind == AutKind::Inner ? "inner" : "outer"; }

Automorphism::Automorphism(const SlAlgebra& algebra, AutKind kind, const Matrix& rep)
    : algebra_(&algebra), kind_(kind) {
  if (rep.rows() != algebra.n() || rep.cols() != algebra.n())
    throw ShapeError("representative must be n x n");
  if (rep.det().is_zero()) throw DomainError("automorphism representative is singular");
  rep_ = normalize_projective(rep);
  action_ = action_of(algebra, kind, rep_);
}

Automorphism::Automorphism(const SlAlgebra& algebra, AutKind kind, Matrix rep, Matrix action)
    : algebra_(&algebra), kind_(kind), rep_(normalize_projective(rep)), action_(std::move(action)) {}

Automorphism Automorphism::identity(const SlAlgebra& algebra) {
  return Automorphism(algebra, AutKind::Inner, Matrix::identity(algebra.n()));
}

Matrix Automorphism::apply_matrix(const Matrix& x) const {
  return algebra_->to_matrix(apply(algebra_->from_matrix(x)));
}

bool Automorphism::is_identity() const { return action_ == Matrix::identity(action_.rows()); }

Automorphism make_ad(const SlAlgebra& algebra, const Matrix& a) {
  return Automorphism(algebra, AutKind::Inner, a);
}

Automorphism make_out(const SlAlgebra& algebra, const Matrix& a) {
  return Automorphism(algebra, AutKind::Outer, a);
}

// Representatives of composites:
//   Ad_A Ad_B = Ad_{BA},  Out_A Ad_B = Out_{BA},
//   Ad_A Out_B = Out_{B A^{-T}},  Out_A Out_B = Ad_{B A^{-T}}.
Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (&f.algebra() != &g.algebra() && f.algebra().n() != g.algebra().n())
    throw ShapeError("automorphisms of different algebras");
  Matrix rep = g.kind() == AutKind::Inner ? g.rep() * f.rep() : g.rep() * f.rep().transpose().inverse();
  const AutKind kind = f.kind() == g.kind() ? AutKind::Inner : AutKind::Outer;
  return Automorphism(f.algebra(), kind, std::move(rep), f.action() * g.action());
}

Automorphism inverse(const Automorphism& f) {
  Matrix rep = f.kind() == AutKind::Inner ? f.rep().inverse() : f.rep().transpose();
  return Automorphism(f.algebra(), f.kind(), std::move(rep), f.action().inverse());
}

Automorphism conjugate_by(const Automorphism& f, const Automorphism& h) {
  return compose(inverse(h), compose(f, h));
}

bool commute(const Automorphism& f, const Automorphism& g) {
  return f.action() * g.action() == g.action() * f.action();
}

std::vector<Automorphism> generate_group(const std::vector<Automorphism>& gens, std::size_t cap) {
  if (gens.empty()) throw InputError("generate_group needs at least one generator");
  std::vector<Automorphism> elements{Automorphism::identity(gens.front().algebra())};
  for (std::size_t next = 0; next < elements.size(); ++next)
    for (const auto& g : gens) {
      Automorphism candidate = compose(elements[next], g);
      if (std::find(elements.begin(), elements.end(), candidate) != elements.end()) continue;
      if (elements.size() >= cap) throw LimitError("group closure exceeded " + std::to_string(cap) + " elements");
      elements.push_back(std::move(candidate));
    }
  return elements;
}

std::optional<unsigned> order(const Automorphism& f, unsigned cap) {
  const Matrix id = Matrix::identity(f.action().rows());
  Matrix current = f.action();
  for (unsigned m = 1; m <= cap; ++m) {
    if (current == id) return m;
    if (m < cap) current = current * f.action();
  }
  return std::nullopt;
}

std::vector<Eigenspace> eigenspaces(const Automorphism& f, unsigned cap) {
  const auto m = order(f, cap);
  if (!m)
    throw DomainError("automorphism has no finite order within cap " + std::to_string(cap) +
                      "; use finite-order separating generators");
  const std::size_t d = f.action().rows();
  const Matrix id = Matrix::identity(d);
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (unsigned k = 0; k < *m && total < d; ++k) {
    const Cyclo lambda = Cyclo::root_of_unity(static_cast<int>(*m), k);
    Subspace space = kernel(f.action() - lambda * id);
    if (space.is_zero()) continue;
    total += space.dim();
    out.push_back({k, lambda, std::move(space)});
  }
  return out;
}

}  // namespace gradelab
