#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradelab/normalizer.hpp"

namespace gradelab {

/// Index of the unordered part pairs {i, j}, i <= j, of a k-part grading:
/// (0,0), (0,1), .., (0,k-1), (1,1), ...
class PairIndex {
 public:
  /// At most 10 parts so that all pairs fit in one 64-bit assignment.
  static constexpr std::size_t kMaxParts = 10;

  explicit PairIndex(std::size_t parts);

  std::size_t parts() const { return parts_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> pair(std::size_t var) const { return pairs_[var]; }

 private:
  std::size_t parts_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> table_;
};

/// Binary values of eps_ij = eps_ji; bit v holds the variable with PairIndex v.
class EpsilonAssignment {
 public:
  explicit EpsilonAssignment(std::size_t parts, std::uint64_t bits = 0);
  static EpsilonAssignment all_ones(std::size_t parts);

  std::size_t parts() const { return index_.parts(); }
  const PairIndex& pairs() const { return index_; }
  std::uint64_t bits() const { return bits_; }
  bool get(std::size_t i, std::size_t j) const { return (bits_ >> index_.index(i, j)) & 1u; }
  void set(std::size_t i, std::size_t j, bool value);

  friend bool operator==(const EpsilonAssignment& a, const EpsilonAssignment& b) {
    return a.bits_ == b.bits_ && a.parts() == b.parts();
  }

 private:
  PairIndex index_;
  std::uint64_t bits_;
};

/// Basis of sl(n) formed by concatenating the RREF bases of the parts, with
/// the structure constants expressed in it.
struct GradedBasis {
  std::vector<Vector> vectors;
  std::vector<std::size_t> part_of;
  StructureConstants constants;
};

GradedBasis graded_basis(const Grading& g);

/// Structure constants in the graded basis with block (i, j) scaled by eps_ij.
/// Throws InputError for an unlabeled grading or one whose labeling fails.
StructureConstants contracted_structure(const Grading& g, const EpsilonAssignment& eps);

/// Exhaustive exact Jacobi check of a candidate contracted algebra.
bool jacobi_oracle(const StructureConstants& candidate);

/// Jacobi check specialised to one grading: the Jacobiator of every basis
/// triple is grouped by the eps monomial multiplying each term, and the
/// subsets of monomials whose vector sum vanishes are tabulated once, so each
/// query is a table lookup per triple.
class CompiledJacobiOracle {
 public:
  explicit CompiledJacobiOracle(const Grading& g);

  std::size_t variables() const { return pairs_.size(); }
  bool operator()(std::uint64_t bits) const;
  /// Variables whose block bracket [L_i, L_j] is nonzero.
  std::uint64_t active_mask() const { return active_; }

 private:
  struct Triple {
    std::vector<std::pair<std::size_t, std::size_t>> monomials;  // variable pairs
    std::vector<bool> vanishing;  // indexed by subset mask of monomials
  };
  PairIndex pairs_;
  std::vector<Triple> triples_;
  std::uint64_t active_ = 0;
};

/// Product of two eps variables (indices into the PairIndex), stored sorted.
using Monomial = std::pair<std::size_t, std::size_t>;

struct EquationSource {
  std::size_t a, b, c;           // graded basis triple
  std::size_t coordinate;        // first coordinate where the double brackets are nonzero
  std::size_t rank;              // rank of {T1, T2}
  std::optional<Cyclo> weight;   // mu with T2 = mu T1 when rank is 1
};

/// lhs = rhs, or lhs = 0 when rhs is empty.
struct Equation {
  Monomial lhs;
  std::optional<Monomial> rhs;
  EquationSource source;
};

struct TripleRecord {
  std::size_t a, b, c;
  std::size_t part_a, part_b, part_c;
  std::size_t rank;
};

struct ContractionSystem {
  PairIndex pairs{1};
  std::vector<Equation> equations;
  std::vector<TripleRecord> triples;
  /// Variables whose block bracket is nonzero.
  std::uint64_t active_mask = 0;
};

/// Relations among the eps monomials forced by the contracted Jacobi identity
/// over every graded basis triple. Over binary values the weighted rank-1
/// relation (m1 - m3) + mu (m2 - m3) = 0 with mu not in {0, -1} reduces to
/// m1 = m2 = m3.
ContractionSystem generate_equations(const Grading& g);

/// Does the assignment satisfy every equation?
bool satisfies(const ContractionSystem& sys, std::uint64_t bits);

struct SolveOptions {
  std::uint64_t node_cap = 200'000'000;
  unsigned jobs = 1;
};

/// Complete binary solution set in factored form: every solution is one of
/// `solutions` (free bits cleared) combined with any values of the variables
/// in free_mask, which occur in no equation.
struct SolveResult {
  std::uint64_t free_mask = 0;
  std::vector<std::uint64_t> solutions;  // ascending, free bits zero
  std::uint64_t nodes = 0;

  /// Number of solutions counting every free combination.
  std::uint64_t total() const;
  bool contains(std::uint64_t bits) const;
  /// Every solution; throws LimitError above limit.
  std::vector<std::uint64_t> expand(std::uint64_t limit = 50'000'000) const;
};

/// Variables occurring in no equation.
std::uint64_t unconstrained_mask(const ContractionSystem& sys);

/// Complete set of binary assignments satisfying the system, by backtracking
/// with unit propagation over the constrained variables. Throws LimitError
/// past the node cap.
SolveResult solve_binary(const ContractionSystem& sys, const SolveOptions& options = {});

/// eps'_{ij} = eps_{p(i) p(j)}
std::uint64_t pushforward(const PairIndex& pairs, const Permutation& p, std::uint64_t bits);

/// Lexicographic order on assignments, variable 0 most significant.
bool lex_less(const PairIndex& pairs, std::uint64_t a, std::uint64_t b);

struct Orbit {
  std::uint64_t representative;  // lexicographically least member
  std::size_t size;
};

/// Orbits of the solution set under the pushforward action; throws Error if
/// the set is not invariant under the group.
std::vector<Orbit> symmetry_orbits(const std::vector<std::uint64_t>& solutions, const PermutationGroup& group,
                                   const Grading& g);

/// Number of orbits of the full factored solution set, by Burnside's lemma
/// over the group elements.
std::uint64_t count_orbits(const SolveResult& result, const PermutationGroup& group, const Grading& g);

/// Is the full factored solution set invariant under every group element?
bool solutions_invariant(const SolveResult& result, const PermutationGroup& group, const Grading& g);

std::string pair_name(const Grading& g, std::size_t var);

}  // namespace gradelab
