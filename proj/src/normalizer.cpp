#include "gradelab/normalizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gradelab {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (auto v : mapping_) {
    if (v >= mapping_.size() || hit[v]) throw InputError("mapping is not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> m(degree);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < mapping_.size(); ++i)
    if (mapping_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = mapping_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (seen[i] || mapping_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = mapping_[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ShapeError("permutations of different degree");
  std::vector<std::size_t> m(q.degree());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = p(q(i));
  return Permutation(std::move(m));
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw ShapeError("generator degree mismatch");
  std::vector<Permutation> found{Permutation::identity(degree_)};
  std::set<Permutation> seen(found.begin(), found.end());
  for (std::size_t next = 0; next < found.size(); ++next)
    for (const auto& g : generators_) {
      Permutation p = compose(found[next], g);
      if (seen.contains(p)) continue;
      if (found.size() >= cap) throw LimitError("permutation group exceeded " + std::to_string(cap) + " elements");
      seen.insert(p);
      found.push_back(std::move(p));
    }
  elements_.assign(seen.begin(), seen.end());
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermutationGroup::exponent() const {
  std::size_t e = 1;
  for (const auto& p : elements_) e = std::lcm(e, p.order());
  return e;
}

std::vector<std::pair<std::size_t, std::size_t>> PermutationGroup::order_profile() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& p : elements_) ++counts[p.order()];
  return {counts.begin(), counts.end()};
}

bool normalizes(const Automorphism& h, const MadGroupSpec& spec) {
  for (const auto& x : spec.group_generators)
    if (!spec.membership(conjugate_by(x, h))) return false;
  return true;
}

Permutation induced_permutation(const Automorphism& h, const Grading& g) {
  std::vector<std::size_t> mapping(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Subspace img = image(h.action(), g.part(i));
    std::optional<std::size_t> target;
    for (std::size_t j = 0; j < g.size() && !target; ++j)
      if (g.part(j) == img) target = j;
    if (!target) throw InputError("automorphism does not map part " + std::to_string(i) + " onto a part");
    mapping[i] = *target;
  }
  try {
    return Permutation(std::move(mapping));
  } catch (const InputError&) {
    throw InputError("automorphism maps two parts onto the same part");
  }
}

QuotientAnalysis analyze_quotient(const MadGroupSpec& spec, const Grading& g,
                                  const std::vector<Automorphism>& normalizer_gens, std::size_t cap) {
  for (std::size_t i = 0; i < normalizer_gens.size(); ++i)
    if (!normalizes(normalizer_gens[i], spec))
      throw InputError("normalizer generator " + std::to_string(i) + " does not normalize " + spec.name);

  // Normalizer generators first, then group generators of G (which fix every
  // part but may flip the kind).
  std::vector<Automorphism> gens = normalizer_gens;
  gens.insert(gens.end(), spec.group_generators.begin(), spec.group_generators.end());
  std::vector<Permutation> gen_perms;
  for (const auto& h : gens) gen_perms.push_back(induced_permutation(h, g));

  struct State {
    Permutation perm;
    AutKind kind;
    Automorphism witness;
    std::vector<std::size_t> word;
  };
  std::vector<State> states;
  std::map<std::pair<Permutation, AutKind>, std::size_t> index;
  const auto& alg = g.algebra();
  states.push_back({Permutation::identity(g.size()), AutKind::Inner, Automorphism::identity(alg), {}});
  index.emplace(std::pair{states[0].perm, AutKind::Inner}, 0);

  std::optional<std::string> discrepancy;
  std::size_t checked = 0;
  auto check_in_g = [&](const Automorphism& a, const std::string& what) {
    ++checked;
    if (!discrepancy && !spec.membership(a)) discrepancy = what;
  };

  for (std::size_t next = 0; next < states.size(); ++next) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Automorphism aut = compose(states[next].witness, gens[gi]);
      Permutation perm = compose(states[next].perm, gen_perms[gi]);
      const AutKind kind = aut.kind();
      auto key = std::pair{perm, kind};
      if (auto it = index.find(key); it != index.end()) {
        check_in_g(compose(inverse(states[it->second].witness), aut),
                   "words for permutation " + perm.cycles() + " differ by an automorphism outside " + spec.name);
        continue;
      }
      if (states.size() >= 2 * cap) throw LimitError("quotient closure exceeded " + std::to_string(cap) + " elements");
      auto word = states[next].word;
      word.push_back(gi);
      index.emplace(key, states.size());
      states.push_back({std::move(perm), kind, std::move(aut), std::move(word)});
    }
  }
  for (const auto& s : states)
    if (s.perm.is_identity() && s.kind == AutKind::Outer)
      check_in_g(s.witness, "an outer automorphism outside " + spec.name + " fixes every part");

  std::map<Permutation, QuotientElement> cosets;
  for (const auto& s : states) {
    auto& q = cosets[s.perm];
    if (q.word.empty() && !q.has_inner && !q.has_outer) {
      q.permutation = s.perm;
      q.word = s.word;
    }
    (s.kind == AutKind::Inner ? q.has_inner : q.has_outer) = true;
  }
  if (cosets.size() > cap) throw LimitError("quotient exceeded " + std::to_string(cap) + " elements");

  std::vector<QuotientElement> elements;
  std::vector<Permutation> all, inner;
  for (auto& [p, q] : cosets) {
    all.push_back(p);
    if (q.has_inner) inner.push_back(p);
    elements.push_back(std::move(q));
  }
  std::vector<Permutation> quotient_gens(gen_perms.begin(), gen_perms.begin() + static_cast<std::ptrdiff_t>(normalizer_gens.size()));
  PermutationGroup group(g.size(), quotient_gens, cap);
  // inner elements are a subgroup; generate it from its own members
  PermutationGroup inner_group(g.size(), inner, cap);
  return {std::move(group), std::move(inner_group), std::move(elements), std::move(discrepancy), checked};
}

PermutationGroup quotient_group(const MadGroupSpec& spec, const Grading& g,
                                const std::vector<Automorphism>& normalizer_gens) {
  auto analysis = analyze_quotient(spec, g, normalizer_gens);
  if (analysis.discrepancy) throw Error("permutation representation is not faithful: " + *analysis.discrepancy);
  return std::move(analysis.group);
}

PermutationGroup inner_subquotient(const MadGroupSpec& spec, const Grading& g,
                                   const std::vector<Automorphism>& normalizer_gens) {
  auto analysis = analyze_quotient(spec, g, normalizer_gens);
  if (analysis.discrepancy) throw Error("permutation representation is not faithful: " + *analysis.discrepancy);
  return std::move(analysis.inner);
}

int det_mod3(const Mat2Z3& m) { return (((m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 3) + 3) % 3; }

std::vector<Mat2Z3> enumerate_sl2_z3() {
  std::vector<Mat2Z3> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Mat2Z3 m{{{a, b}, {c, d}}};
          if (det_mod3(m) == 1) out.push_back(m);
        }
  return out;
}

std::optional<Mat2Z3> linearize_on_labels(const Permutation& p, const Grading& g) {
  if (g.group() != AbelianGroup({3, 3})) throw InputError("linearization needs a Z_3 x Z_3 labeling");
  const auto& labels = g.labels();
  for (const auto& l : labels)
    if (l == AbelianGroup::Element{0, 0}) throw InputError("linearization needs labels without the neutral element");
  if (p.degree() != g.size()) throw ShapeError("permutation does not act on this grading");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          bool ok = true;
          for (std::size_t i = 0; i < labels.size() && ok; ++i) {
            const auto& v = labels[i];
            const auto& w = labels[p(i)];
            ok = (a * v[0] + b * v[1]) % 3 == w[0] && (c * v[0] + d * v[1]) % 3 == w[1];
          }
          if (ok) return Mat2Z3{{{a, b}, {c, d}}};
        }
  return std::nullopt;
}

}  // namespace gradelab
