#include "gradelab/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

namespace gradelab {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by the monic polynomial b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t lead = a[i];
    q[i - db] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  return q;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly cyclotomic_polynomial(int n) {
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  IntPoly den{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = multiply(den, cyclotomic_polynomial(d));
  return divide_monic(num, den);
}

std::unique_ptr<CycloField> build_field(int order) {
  auto field = std::make_unique<CycloField>();
  field->order = order;
  field->phi = euler_phi(order);
  field->cyclotomic_poly = cyclotomic_polynomial(order);
  const auto phi = static_cast<std::size_t>(field->phi);
  field->power_reduction.assign(static_cast<std::size_t>(order), IntPoly(phi, 0));
  IntPoly current(phi, 0);
  current[0] = 1;
  for (int k = 0; k < order; ++k) {
    field->power_reduction[static_cast<std::size_t>(k)] = current;
    // multiply by x and fold x^phi back with the monic relation
    const std::int64_t top = current[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) current[i] -= top * field->cyclotomic_poly[i];
  }
  return field;
}

// Solves the square system m * x = rhs over Q; nullopt if singular.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> m,
                                                    std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  const std::size_t cols = n == 0 ? 0 : m[0].size();
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < cols && row < n; ++col) {
    std::size_t p = row;
    while (p < n && sgn(m[p][col]) == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (sgn(rhs[r]) != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r];
  return x;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

const CycloField& CycloField::get(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = build_field(order);
  return *slot;
}

Cyclo::Cyclo() : field_(&CycloField::get(1)), coeffs_(1) {}

Cyclo::Cyclo(long value) : field_(&CycloField::get(1)), coeffs_{Rational(value)} {}

// gmpxx leaves a quotient built from (num, den) unreduced; all arithmetic
// below assumes canonical form.
Cyclo::Cyclo(const Rational& value) : field_(&CycloField::get(1)), coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclo::Cyclo(int order, std::vector<Rational> coeffs) : field_(&CycloField::get(order)) {
  // Accept any length; entry k is the coefficient of zeta^k.
  std::vector<Rational> by_power(static_cast<std::size_t>(order));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    by_power[k % by_power.size()] += coeffs[k];
  }
  reduce_from_powers(by_power);
}

void Cyclo::reduce_from_powers(const std::vector<Rational>& by_power) {
  const auto phi = static_cast<std::size_t>(field_->phi);
  coeffs_.assign(phi, Rational(0));
  for (std::size_t e = 0; e < by_power.size(); ++e) {
    if (sgn(by_power[e]) == 0) continue;
    if (e < phi) {
      coeffs_[e] += by_power[e];
      continue;
    }
    const auto& row = field_->power_reduction[e];
    for (std::size_t k = 0; k < phi; ++k)
      if (row[k] != 0) coeffs_[k] += by_power[e] * row[k];
  }
}

Cyclo Cyclo::root_of_unity(int order, long exponent) {
  const auto& field = CycloField::get(order);
  long e = exponent % order;
  if (e < 0) e += order;
  std::vector<Rational> coeffs(static_cast<std::size_t>(field.phi));
  const auto& row = field.power_reduction[static_cast<std::size_t>(e)];
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = row[k];
  Cyclo result;
  result.field_ = &field;
  result.coeffs_ = std::move(coeffs);
  return result;
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

Cyclo Cyclo::embed(int target_order) const {
  if (target_order < 1 || target_order % order() != 0)
    throw ShapeError("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                     std::to_string(target_order) + ")");
  if (target_order == order()) return *this;
  Cyclo result;
  result.field_ = &CycloField::get(target_order);
  const std::size_t step = static_cast<std::size_t>(target_order / order());
  std::vector<Rational> by_power(static_cast<std::size_t>(target_order));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) by_power[k * step] = coeffs_[k];
  result.reduce_from_powers(by_power);
  return result;
}

Cyclo Cyclo::reduce_order() const {
  const int n = order();
  if (is_rational()) return Cyclo(coeffs_[0]);
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& sub = CycloField::get(d);
    const std::size_t phi_d = static_cast<std::size_t>(sub.phi);
    const std::size_t phi_n = coeffs_.size();
    // columns: zeta_d^k embedded in Q(zeta_n)
    std::vector<std::vector<Rational>> m(phi_n, std::vector<Rational>(phi_d));
    for (std::size_t k = 0; k < phi_d; ++k) {
      const Cyclo basis = root_of_unity(n, static_cast<long>(k) * (n / d));
      for (std::size_t r = 0; r < phi_n; ++r) m[r][k] = basis.coeffs_[r];
    }
    if (auto x = solve_rational(std::move(m), coeffs_)) return Cyclo(d, std::move(*x));
  }
  return *this;
}

Cyclo Cyclo::conjugate() const {
  const int n = order();
  std::vector<Rational> by_power(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    by_power[(static_cast<std::size_t>(n) - k) % static_cast<std::size_t>(n)] = coeffs_[k];
  Cyclo result;
  result.field_ = field_;
  result.reduce_from_powers(by_power);
  return result;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (is_rational()) {
    Cyclo r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  const std::size_t phi = coeffs_.size();
  // column j holds the coordinates of this * zeta^j
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi));
  for (std::size_t j = 0; j < phi; ++j) {
    const Cyclo col = *this * root_of_unity(order(), static_cast<long>(j));
    for (std::size_t r = 0; r < phi; ++r) m[r][j] = col.coeffs_[r];
  }
  std::vector<Rational> rhs(phi);
  rhs[0] = 1;
  auto x = solve_rational(std::move(m), std::move(rhs));
  if (!x) throw DomainError("singular multiplication map in cyclotomic field");
  Cyclo result;
  result.field_ = field_;
  result.coeffs_ = std::move(*x);
  return result;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> sum = 0.0;
  const double n = order();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    sum += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclo::to_string() const {
  const Cyclo r = reduce_order();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
    const Rational& c = r.coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "z" << r.order();
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  if (order() != rhs.order()) {
    const int common = lcm_order(order(), rhs.order());
    *this = embed(common);
    return *this += rhs.embed(common);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) { return *this += -rhs; }

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  *this = *this * rhs;
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) {
  *this = *this / rhs;
  return *this;
}

Cyclo operator*(const Cyclo& lhs, const Cyclo& rhs) {
  if (lhs.order() != rhs.order()) {
    // rational scalars need no embedding
    if (lhs.order() == 1 || rhs.order() == 1) {
      const Cyclo& scalar = lhs.order() == 1 ? lhs : rhs;
      Cyclo r = lhs.order() == 1 ? rhs : lhs;
      for (auto& c : r.coeffs_) c *= scalar.coeffs_[0];
      return r;
    }
    const int common = lcm_order(lhs.order(), rhs.order());
    return lhs.embed(common) * rhs.embed(common);
  }
  const std::size_t n = static_cast<std::size_t>(lhs.order());
  const std::size_t phi = lhs.coeffs_.size();
  std::vector<Rational> by_power(n);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      by_power[(i + j) % n] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  Cyclo result;
  result.field_ = lhs.field_;
  result.reduce_from_powers(by_power);
  return result;
}

bool operator==(const Cyclo& lhs, const Cyclo& rhs) {
  if (lhs.order() != rhs.order()) {
    const int common = lcm_order(lhs.order(), rhs.order());
    return lhs.embed(common) == rhs.embed(common);
  }
  return lhs.coeffs_ == rhs.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& value) { return os << value.to_string(); }

}  // namespace gradelab
