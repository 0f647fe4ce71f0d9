#include "gradelab/grading.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace gradelab {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (int m : orders_)
    if (m < 1) throw InputError("cyclic factor orders must be positive");
}

std::size_t AbelianGroup::size() const {
  std::size_t s = 1;
  for (int m : orders_) s *= static_cast<std::size_t>(m);
  return s;
}

AbelianGroup::Element AbelianGroup::normalize(Element e) const {
  if (e.size() != orders_.size()) throw InputError("group element has wrong arity");
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] %= orders_[i];
    if (e[i] < 0) e[i] += orders_[i];
  }
  return e;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

AbelianGroup::Element AbelianGroup::negate(const Element& a) const {
  Element r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (orders_[i] - a[i]) % orders_[i];
  return r;
}

bool AbelianGroup::contains(const Element& e) const {
  if (e.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= orders_[i]) return false;
  return true;
}

std::size_t AbelianGroup::index_of(const Element& e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(e[i]);
  return idx;
}

AbelianGroup::Element AbelianGroup::element_at(std::size_t index) const {
  Element e(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    e[i] = static_cast<int>(index % static_cast<std::size_t>(orders_[i]));
    index /= static_cast<std::size_t>(orders_[i]);
  }
  return e;
}

std::string AbelianGroup::to_string(const Element& e) const {
  if (e.size() == 1) return std::to_string(e[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

std::string AbelianGroup::description() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? " x " : "") << "Z_" << orders_[i];
  return orders_.empty() ? "trivial" : os.str();
}

Grading::Grading(const SlAlgebra& algebra, std::vector<Subspace> parts)
    : algebra_(&algebra), parts_(std::move(parts)) {
  std::size_t total = 0;
  Subspace sum(algebra.dim());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].ambient_dim() != algebra.dim()) throw InputError("part has wrong ambient dimension");
    if (parts_[i].is_zero()) throw InputError("part " + std::to_string(i) + " is zero");
    total += parts_[i].dim();
    sum = subspace_sum(sum, parts_[i]);
  }
  if (total != algebra.dim() || sum.dim() != algebra.dim())
    throw InputError("parts do not form a direct sum of the algebra");
}

const AbelianGroup& Grading::group() const {
  if (!labels_) throw InputError("grading is not labeled");
  return labels_->first;
}

const Labeling& Grading::labels() const {
  if (!labels_) throw InputError("grading is not labeled");
  return labels_->second;
}

Grading Grading::with_labels(AbelianGroup group, Labeling labels) const {
  if (labels.size() != parts_.size()) throw InputError("labeling does not cover every part");
  for (auto& l : labels) {
    if (!group.contains(l)) throw InputError("label is not a reduced group element");
  }
  Grading g = *this;
  g.labels_ = std::pair{std::move(group), std::move(labels)};
  return g;
}

std::optional<std::size_t> Grading::part_with_label(const AbelianGroup::Element& label) const {
  const auto& ls = labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Grading::part_containing(const Vector& v) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].contains(v)) return i;
  return std::nullopt;
}

Grading Grading::reordered(const std::vector<std::size_t>& order) const {
  if (order.size() != parts_.size()) throw InputError("reordering must list every part");
  std::vector<Subspace> parts;
  for (auto i : order) parts.push_back(parts_.at(i));
  Grading g(*algebra_, std::move(parts));
  if (labels_) {
    Labeling ls;
    for (auto i : order) ls.push_back(labels_->second[i]);
    g.labels_ = std::pair{labels_->first, std::move(ls)};
  }
  return g;
}

EigenDecomposition common_eigenspace_decomposition(const SlAlgebra& algebra,
                                                   const std::vector<Automorphism>& gens) {
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!commute(gens[a], gens[b]))
        throw InputError("generators " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");

  struct Cell {
    AbelianGroup::Element exponents;
    Subspace space;
  };
  std::vector<Cell> cells{{{}, Subspace::full(algebra.dim())}};
  std::vector<int> orders;
  for (const auto& g : gens) {
    const auto spaces = eigenspaces(g);
    orders.push_back(static_cast<int>(*order(g)));
    std::vector<Cell> next;
    for (const auto& cell : cells)
      for (const auto& e : spaces) {
        Subspace meet = subspace_intersect(cell.space, e.space);
        if (meet.is_zero()) continue;
        auto exps = cell.exponents;
        exps.push_back(static_cast<int>(e.exponent));
        next.push_back({std::move(exps), std::move(meet)});
      }
    cells = std::move(next);
  }
  std::vector<Subspace> parts;
  Labeling characters;
  for (auto& c : cells) {
    parts.push_back(std::move(c.space));
    characters.push_back(std::move(c.exponents));
  }
  return {Grading(algebra, std::move(parts)), AbelianGroup(orders), std::move(characters)};
}

Grading common_eigenspaces(const SlAlgebra& algebra, const std::vector<Automorphism>& gens) {
  return common_eigenspace_decomposition(algebra, gens).grading;
}

GradingCertificate verify_grading(const Grading& g) {
  const auto& alg = g.algebra();
  const std::size_t k = g.size();
  GradingCertificate cert;
  cert.target.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::optional<std::size_t> target;
      bool ok = true;
      for (const auto& x : g.part(i).basis()) {
        for (const auto& y : g.part(j).basis()) {
          const Vector b = alg.bracket(x, y);
          if (is_zero(b)) continue;
          if (target) {
            ok = g.part(*target).contains(b);
          } else {
            target = g.part_containing(b);
            ok = target.has_value();
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) {
        cert.is_grading = false;
        if (!cert.violation) cert.violation = std::pair{i, j};
        continue;
      }
      cert.target[i][j] = target;
    }
  return cert;
}

bool verify_labeling(const Grading& g, const AbelianGroup& group, const Labeling& labels) {
  if (labels.size() != g.size()) throw InputError("labeling does not cover every part");
  for (const auto& l : labels)
    if (!group.contains(l)) throw InputError("label is not a reduced group element");
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b]) return false;
  const auto cert = verify_grading(g);
  if (!cert.is_grading) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& t = cert.target[i][j];
      if (t && labels[*t] != group.add(labels[i], labels[j])) return false;
    }
  return true;
}

bool verify_labeling(const Grading& g) { return verify_labeling(g, g.group(), g.labels()); }

namespace {

struct LabelSearch {
  const AbelianGroup& group;
  std::size_t parts;
  // (i, j, k): label(i) + label(j) = label(k)
  std::vector<std::array<std::size_t, 3>> constraints;
  std::vector<std::vector<std::size_t>> by_part;
  std::vector<long> label;  // group index or -1
  std::vector<long> owner;  // part owning a group index or -1

  long sum(long a, long b) const {
    return static_cast<long>(
        group.index_of(group.add(group.element_at(static_cast<std::size_t>(a)), group.element_at(static_cast<std::size_t>(b)))));
  }
  long diff(long a, long b) const {
    return static_cast<long>(group.index_of(
        group.add(group.element_at(static_cast<std::size_t>(a)),
                  group.negate(group.element_at(static_cast<std::size_t>(b))))));
  }

  // Checks the constraints touching part p and the labels they force.
  bool consistent(std::size_t p) const {
    std::map<std::size_t, long> forced;
    auto force = [&](std::size_t part, long value) {
      if (label[part] >= 0) return label[part] == value;
      if (owner[static_cast<std::size_t>(value)] >= 0) return false;
      auto [it, fresh] = forced.emplace(part, value);
      return fresh || it->second == value;
    };
    for (auto ci : by_part[p]) {
      const auto [i, j, k] = constraints[ci];
      const bool ai = label[i] >= 0, aj = label[j] >= 0, ak = label[k] >= 0;
      if (ai && aj) {
        if (!force(k, sum(label[i], label[j]))) return false;
      } else if (ai && ak) {
        if (!force(j, diff(label[k], label[i]))) return false;
      } else if (aj && ak) {
        if (!force(i, diff(label[k], label[j]))) return false;
      }
    }
    // distinct unassigned parts cannot be forced onto one label
    std::map<long, std::size_t> seen;
    for (auto [part, value] : forced) {
      auto [it, fresh] = seen.emplace(value, part);
      if (!fresh && it->second != part) return false;
    }
    return true;
  }

  bool run(std::size_t p) {
    if (p == parts) return true;
    for (std::size_t v = 0; v < group.size(); ++v) {
      if (owner[v] >= 0) continue;
      label[p] = static_cast<long>(v);
      owner[v] = static_cast<long>(p);
      if (consistent(p) && run(p + 1)) return true;
      label[p] = -1;
      owner[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Labeling> search_labeling(const Grading& g, const AbelianGroup& group) {
  if (group.size() < g.size()) return std::nullopt;
  const auto cert = verify_grading(g);
  if (!cert.is_grading) return std::nullopt;
  LabelSearch s{group, g.size(), {}, std::vector<std::vector<std::size_t>>(g.size()),
                std::vector<long>(g.size(), -1), std::vector<long>(group.size(), -1)};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (const auto& t = cert.target[i][j]) {
        s.constraints.push_back({i, j, *t});
        const std::size_t ci = s.constraints.size() - 1;
        s.by_part[i].push_back(ci);
        if (j != i) s.by_part[j].push_back(ci);
        if (*t != i && *t != j) s.by_part[*t].push_back(ci);
      }
  if (!s.run(0)) return std::nullopt;
  Labeling out;
  for (auto l : s.label) out.push_back(group.element_at(static_cast<std::size_t>(l)));
  return out;
}

Grading coarsen(const Grading& g, const std::vector<std::vector<std::size_t>>& partition) {
  std::vector<int> seen(g.size(), 0);
  std::vector<Subspace> parts;
  for (const auto& block : partition) {
    if (block.empty()) throw InputError("partition contains an empty block");
    Subspace s(g.algebra().dim());
    for (auto i : block) {
      if (i >= g.size()) throw InputError("partition refers to part " + std::to_string(i) + " which does not exist");
      if (seen[i]++) throw InputError("part " + std::to_string(i) + " occurs twice in the partition");
      s = subspace_sum(s, g.part(i));
    }
    parts.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!seen[i]) throw InputError("partition does not cover part " + std::to_string(i));
  return Grading(g.algebra(), std::move(parts));
}

bool is_refinement(const Grading& fine, const Grading& coarse) {
  for (const auto& p : fine.parts()) {
    bool found = false;
    for (const auto& q : coarse.parts())
      if (q.contains(p)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace gradelab
