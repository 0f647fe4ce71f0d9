#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradelab/grading.hpp"

namespace gradelab {

/// Bijection of {0, .., n-1}; mapping[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless mapping is a bijection.
  explicit Permutation(std::vector<std::size_t> mapping);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  /// Cycle notation, fixed points omitted, "()" for the identity.
  std::string cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// p after q.
Permutation compose(const Permutation& p, const Permutation& q);

/// Finite permutation group with its elements materialized in sorted order.
class PermutationGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Closure of the generators; throws LimitError past cap elements.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t cap = kDefaultCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  /// Least common multiple of element orders.
  std::size_t exponent() const;
  /// Count of elements per element order.
  std::vector<std::pair<std::size_t, std::size_t>> order_profile() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// h^{-1} x h satisfies the membership predicate for every group generator x.
bool normalizes(const Automorphism& h, const MadGroupSpec& spec);

/// Permutation of parts with h(part_i) = part_mapping[i]. Throws InputError
/// naming the first part whose image is not a part.
Permutation induced_permutation(const Automorphism& h, const Grading& g);

/// One coset of N(G)/G together with a word that reaches it.
struct QuotientElement {
  Permutation permutation;
  bool has_inner = false;  // some representative is an inner automorphism
  bool has_outer = false;
  /// Indices into the normalizer generators, applied left to right.
  std::vector<std::size_t> word;
};

struct QuotientAnalysis {
  PermutationGroup group;
  PermutationGroup inner;
  std::vector<QuotientElement> elements;  // sorted by permutation
  /// Set when some automorphism outside G induces the identity permutation.
  std::optional<std::string> discrepancy;
  std::size_t relations_checked = 0;
};

/// Breadth-first closure over (permutation, kind) states. Each time a state
/// is reached twice, the quotient of the two witnesses is checked for
/// membership in G, which verifies that the permutation representation of
/// N(G)/G is faithful.
QuotientAnalysis analyze_quotient(const MadGroupSpec& spec, const Grading& g,
                                  const std::vector<Automorphism>& normalizer_gens,
                                  std::size_t cap = PermutationGroup::kDefaultCap);

/// Throws InputError if a generator does not normalize G and Error on a
/// faithfulness discrepancy.
PermutationGroup quotient_group(const MadGroupSpec& spec, const Grading& g,
                                const std::vector<Automorphism>& normalizer_gens);
PermutationGroup inner_subquotient(const MadGroupSpec& spec, const Grading& g,
                                   const std::vector<Automorphism>& normalizer_gens);

using Mat2Z3 = std::array<std::array<int, 2>, 2>;

int det_mod3(const Mat2Z3& m);
/// All 2x2 matrices over Z_3 with determinant 1, by enumeration.
std::vector<Mat2Z3> enumerate_sl2_z3();

/// M over Z_3 with label(p(i)) = M label(i) for every part, if one exists.
/// The grading must be labeled by Z_3 x Z_3 without the neutral label.
std::optional<Mat2Z3> linearize_on_labels(const Permutation& p, const Grading& g);

}  // namespace gradelab
