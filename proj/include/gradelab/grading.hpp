#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradelab/automorphism.hpp"

namespace gradelab {

/// Finite abelian group Z_{m_1} x ... x Z_{m_r}; elements are tuples reduced
/// componentwise.
class AbelianGroup {
 public:
  using Element = std::vector<int>;

  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t size() const;
  Element zero() const { return Element(orders_.size(), 0); }
  Element normalize(Element e) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  bool contains(const Element& e) const;
  /// Mixed-radix index, last component fastest.
  std::size_t index_of(const Element& e) const;
  Element element_at(std::size_t index) const;
  std::string to_string(const Element& e) const;
  std::string description() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<int> orders_;
};

using Labeling = std::vector<AbelianGroup::Element>;

/// Direct-sum decomposition of sl(n) into nonzero subspaces, optionally
/// labeled injectively by elements of a finite abelian group.
class Grading {
 public:
  /// Throws InputError unless the parts are nonzero and form a direct sum.
  Grading(const SlAlgebra& algebra, std::vector<Subspace> parts);

  const SlAlgebra& algebra() const { return *algebra_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Subspace>& parts() const { return parts_; }
  const Subspace& part(std::size_t i) const { return parts_[i]; }

  bool is_labeled() const { return labels_.has_value(); }
  const AbelianGroup& group() const;
  const Labeling& labels() const;
  /// Attaches a labeling without checking additivity.
  Grading with_labels(AbelianGroup group, Labeling labels) const;
  /// Part carrying the given label, if any.
  std::optional<std::size_t> part_with_label(const AbelianGroup::Element& label) const;
  /// Part containing the vector, if any.
  std::optional<std::size_t> part_containing(const Vector& v) const;

  /// Same parts in a new order: result part i is old part order[i].
  Grading reordered(const std::vector<std::size_t>& order) const;

 private:
  const SlAlgebra* algebra_;
  std::vector<Subspace> parts_;
  std::optional<std::pair<AbelianGroup, Labeling>> labels_;
};

struct EigenDecomposition {
  Grading grading;
  /// Z_{m_1} x ... x Z_{m_r} from the generator orders; characters[i] holds the
  /// eigenvalue exponents of part i, which form a valid labeling.
  AbelianGroup character_group;
  Labeling characters;
};

/// Common eigenspaces of pairwise commuting finite-order automorphisms, parts
/// sorted lexicographically by eigenvalue exponent tuple.
EigenDecomposition common_eigenspace_decomposition(const SlAlgebra& algebra,
                                                   const std::vector<Automorphism>& gens);
Grading common_eigenspaces(const SlAlgebra& algebra, const std::vector<Automorphism>& gens);

/// For every ordered pair of parts (i, j): nullopt if [L_i, L_j] = 0,
/// otherwise the part containing it.
struct GradingCertificate {
  bool is_grading = true;
  std::vector<std::vector<std::optional<std::size_t>>> target;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

GradingCertificate verify_grading(const Grading& g);

bool verify_labeling(const Grading& g, const AbelianGroup& group, const Labeling& labels);
bool verify_labeling(const Grading& g);

/// Injective labeling into the group with [L_i, L_j] in L_{i+j}, or nullopt.
std::optional<Labeling> search_labeling(const Grading& g, const AbelianGroup& group);

/// Sums of grouped parts. Every part index must occur in exactly one block.
Grading coarsen(const Grading& g, const std::vector<std::vector<std::size_t>>& partition);

/// Is every part of fine contained in some part of coarse?
bool is_refinement(const Grading& fine, const Grading& coarse);

/// A maximal abelian group of diagonalizable automorphisms.
///
/// separating_generators realize the fine grading as common eigenspaces.
/// group_generators generate a Zariski-dense subgroup of the MAD-group, so
/// h^{-1} G h lies in G iff every conjugate h^{-1} x h, x in group_generators,
/// satisfies the membership predicate.
struct MadGroupSpec {
  std::string name;
  std::vector<Automorphism> separating_generators;
  std::vector<Automorphism> group_generators;
  std::function<bool(const Automorphism&)> membership;
  bool is_infinite = false;
};

}  // namespace gradelab
