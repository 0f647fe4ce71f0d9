#include "gradelab/contraction.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <set>
#include <unordered_set>

namespace gradelab {

PairIndex::PairIndex(std::size_t parts) : parts_(parts), table_(parts * parts) {
  if (parts == 0 || parts > kMaxParts)
    throw InputError("contractions support gradings with 1.." + std::to_string(kMaxParts) + " parts");
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t j = i; j < parts; ++j) {
      table_[i * parts + j] = table_[j * parts + i] = pairs_.size();
      pairs_.emplace_back(i, j);
    }
}

std::size_t PairIndex::index(std::size_t i, std::size_t j) const {
  if (i >= parts_ || j >= parts_) throw ShapeError("part index out of range");
  return table_[i * parts_ + j];
}

EpsilonAssignment::EpsilonAssignment(std::size_t parts, std::uint64_t bits) : index_(parts), bits_(bits) {
  if (index_.size() < 64) bits_ &= (std::uint64_t{1} << index_.size()) - 1;
}

EpsilonAssignment EpsilonAssignment::all_ones(std::size_t parts) { return EpsilonAssignment(parts, ~std::uint64_t{0}); }

void EpsilonAssignment::set(std::size_t i, std::size_t j, bool value) {
  const auto bit = std::uint64_t{1} << index_.index(i, j);
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

GradedBasis graded_basis(const Grading& g) {
  const auto& alg = g.algebra();
  const std::size_t d = alg.dim();
  GradedBasis gb;
  for (std::size_t p = 0; p < g.size(); ++p)
    for (const auto& v : g.part(p).basis()) {
      gb.vectors.push_back(v);
      gb.part_of.push_back(p);
    }
  std::vector<Cyclo> flat(d * d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) flat[r * d + c] = gb.vectors[c][r];
  const Matrix to_graded = Matrix(d, d, std::move(flat)).inverse();
  gb.constants = StructureConstants(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector br = alg.bracket(gb.vectors[a], gb.vectors[b]);
      if (is_zero(br)) continue;
      const Vector coords = to_graded * br;
      for (std::size_t k = 0; k < d; ++k)
        if (!coords[k].is_zero()) gb.constants.set(a, b, k, coords[k]);
    }
  return gb;
}

namespace {

void require_labeled(const Grading& g) {
  if (!g.is_labeled()) throw InputError("contractions need a labeled grading");
  if (!verify_labeling(g)) throw InputError("grading labeling is not additive");
}

}  // namespace

StructureConstants contracted_structure(const Grading& g, const EpsilonAssignment& eps) {
  require_labeled(g);
  if (eps.parts() != g.size()) throw ShapeError("assignment does not match the grading");
  const GradedBasis gb = graded_basis(g);
  const std::size_t d = gb.vectors.size();
  StructureConstants out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (!eps.get(gb.part_of[a], gb.part_of[b])) continue;
      for (const auto& t : gb.constants.terms(a, b)) out.set(a, b, t.index, t.coeff);
    }
  return out;
}

bool jacobi_oracle(const StructureConstants& candidate) { return jacobi_check(candidate); }

CompiledJacobiOracle::CompiledJacobiOracle(const Grading& g) : pairs_(g.size()) {
  const GradedBasis gb = graded_basis(g);
  const auto& sc = gb.constants;
  const std::size_t d = gb.vectors.size();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!sc.terms(a, b).empty()) active_ |= std::uint64_t{1} << pairs_.index(gb.part_of[a], gb.part_of[b]);

  // contracted bracket stays antisymmetric, so increasing triples suffice
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        std::vector<Monomial> monos;
        std::vector<Vector> vecs;
        auto accumulate = [&](std::size_t x, std::size_t y, std::size_t z) {
          const std::size_t first = pairs_.index(gb.part_of[x], gb.part_of[y]);
          for (const auto& t : sc.terms(x, y))
            for (const auto& u : sc.terms(t.index, z)) {
              const std::size_t second = pairs_.index(gb.part_of[t.index], gb.part_of[z]);
              const Monomial m{std::min(first, second), std::max(first, second)};
              auto it = std::find(monos.begin(), monos.end(), m);
              if (it == monos.end()) {
                monos.push_back(m);
                vecs.emplace_back(d);
                it = monos.end() - 1;
              }
              vecs[static_cast<std::size_t>(it - monos.begin())][u.index] += t.coeff * u.coeff;
            }
        };
        accumulate(a, b, c);
        accumulate(b, c, a);
        accumulate(c, a, b);
        if (monos.empty()) continue;
        if (monos.size() > 16) throw LimitError("too many distinct monomials in one Jacobi triple");
        Triple t;
        t.monomials = monos;
        t.vanishing.assign(std::size_t{1} << monos.size(), false);
        bool always = true;
        for (std::size_t mask = 0; mask < t.vanishing.size(); ++mask) {
          Vector sum(d);
          for (std::size_t m = 0; m < monos.size(); ++m)
            if (mask >> m & 1u) sum = add(sum, vecs[m]);
          t.vanishing[mask] = is_zero(sum);
          always = always && t.vanishing[mask];
        }
        if (!always) triples_.push_back(std::move(t));
      }
}

bool CompiledJacobiOracle::operator()(std::uint64_t bits) const {
  for (const auto& t : triples_) {
    std::size_t mask = 0;
    for (std::size_t m = 0; m < t.monomials.size(); ++m)
      if ((bits >> t.monomials[m].first & 1u) && (bits >> t.monomials[m].second & 1u)) mask |= std::size_t{1} << m;
    if (!t.vanishing[mask]) return false;
  }
  return true;
}

ContractionSystem generate_equations(const Grading& g) {
  require_labeled(g);
  const GradedBasis gb = graded_basis(g);
  const auto& sc = gb.constants;
  const auto& group = g.group();
  const auto& labels = g.labels();
  const std::size_t d = gb.vectors.size();

  ContractionSystem sys;
  sys.pairs = PairIndex(g.size());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!sc.terms(a, b).empty()) sys.active_mask |= std::uint64_t{1} << sys.pairs.index(gb.part_of[a], gb.part_of[b]);

  auto double_bracket = [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector v(d);
    for (const auto& t : sc.terms(x, y))
      for (const auto& u : sc.terms(t.index, z)) v[u.index] += t.coeff * u.coeff;
    return v;
  };
  // eps_{ij} eps_{i+j, k}; empty when no part carries the label i+j, in which
  // case [L_i, L_j] = 0 and the term vanishes.
  auto monomial = [&](std::size_t i, std::size_t j, std::size_t k) -> std::optional<Monomial> {
    const auto sum_part = g.part_with_label(group.add(labels[i], labels[j]));
    if (!sum_part) return std::nullopt;
    const std::size_t first = sys.pairs.index(i, j);
    const std::size_t second = sys.pairs.index(*sum_part, k);
    return Monomial{std::min(first, second), std::max(first, second)};
  };

  std::set<std::pair<Monomial, std::optional<Monomial>>> seen;
  auto emit = [&](const std::optional<Monomial>& x, const std::optional<Monomial>& y, const EquationSource& src) {
    if (!x || !y) throw Error("nonzero double bracket without a target part; labeling is inconsistent");
    Monomial lhs = std::min(*x, *y);
    Monomial rhs = std::max(*x, *y);
    if (lhs == rhs) return;
    if (seen.emplace(lhs, rhs).second) sys.equations.push_back({lhs, rhs, src});
  };

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        const std::size_t i = gb.part_of[a], j = gb.part_of[b], k = gb.part_of[c];
        const Vector t1 = double_bracket(a, b, c);
        const Vector t2 = double_bracket(b, c, a);
        const bool z1 = is_zero(t1), z2 = is_zero(t2);
        std::size_t rank = 0;
        std::optional<Cyclo> mu;
        std::size_t coord = 0;
        if (!z1 || !z2) {
          while (t1[coord].is_zero() && t2[coord].is_zero()) ++coord;
          if (z1 || z2) {
            rank = 1;
          } else {
            // T2 = mu T1 iff every 2x2 minor vanishes
            std::size_t pivot = coord;
            while (t1[pivot].is_zero()) ++pivot;
            const Cyclo ratio = t2[pivot] / t1[pivot];
            rank = 1;
            for (std::size_t n = 0; n < d && rank == 1; ++n)
              if (!(t2[n] == ratio * t1[n])) rank = 2;
            if (rank == 1) mu = ratio;
          }
        }
        sys.triples.push_back({a, b, c, i, j, k, rank});
        if (rank == 0) continue;
        const EquationSource src{a, b, c, coord, rank, mu};
        const auto m1 = monomial(i, j, k);
        const auto m2 = monomial(j, k, i);
        const auto m3 = monomial(k, i, j);
        // (m1 - m3) T1 + (m2 - m3) T2 = 0 using T1 + T2 + T3 = 0
        if (rank == 2) {
          emit(m1, m2, src);
          emit(m1, m3, src);
        } else if (z1) {
          emit(m2, m3, src);
        } else if (z2) {
          emit(m1, m3, src);
        } else if (*mu == Cyclo(-1)) {
          emit(m1, m2, src);
        } else {
          emit(m1, m2, src);
          emit(m1, m3, src);
        }
      }
  return sys;
}

namespace {

inline bool monomial_value(std::uint64_t bits, const Monomial& m) {
  return (bits >> m.first & 1u) && (bits >> m.second & 1u);
}

struct Solver {
  const ContractionSystem& sys;
  std::size_t nvars;
  std::vector<std::vector<std::size_t>> watch;  // equations per variable
  std::vector<std::size_t> order;               // branching order
  std::uint64_t cap;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> solutions;

  // value: -1 unknown, 0, 1
  using Values = std::vector<signed char>;

  static int mono(const Values& v, const Monomial& m) {
    const int x = v[m.first], y = v[m.second];
    if (x == 0 || y == 0) return 0;
    if (x == 1 && y == 1) return 1;
    return -1;
  }

  // Forces monomial m to the given value; false on conflict.
  static bool force(Values& v, const Monomial& m, int value, std::vector<std::size_t>& changed) {
    auto assign = [&](std::size_t var, int val) {
      if (v[var] == val) return true;
      if (v[var] != -1) return false;
      v[var] = static_cast<signed char>(val);
      changed.push_back(var);
      return true;
    };
    if (value == 1) return assign(m.first, 1) && assign(m.second, 1);
    const int cur = mono(v, m);
    if (cur == 0) return true;
    if (cur == 1) return false;
    if (v[m.first] == 1) return assign(m.second, 0);
    if (v[m.second] == 1) return assign(m.first, 0);
    return true;
  }

  bool propagate(Values& v, std::vector<std::size_t> queue) {
    while (!queue.empty()) {
      const std::size_t var = queue.back();
      queue.pop_back();
      for (auto ei : watch[var]) {
        const auto& eq = sys.equations[ei];
        const int l = mono(v, eq.lhs);
        if (!eq.rhs) {
          if (!force(v, eq.lhs, 0, queue)) return false;
          continue;
        }
        const int r = mono(v, *eq.rhs);
        if (l != -1 && !force(v, *eq.rhs, l, queue)) return false;
        if (r != -1 && !force(v, eq.lhs, r, queue)) return false;
      }
    }
    return true;
  }

  void search(Values v, std::size_t depth) {
    if (++nodes > cap)
      throw LimitError("binary solver exceeded node cap " + std::to_string(cap) + " after " +
                       std::to_string(solutions.size()) + " solutions");
    while (depth < order.size() && v[order[depth]] != -1) ++depth;
    if (depth == order.size()) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (v[i] == 1) bits |= std::uint64_t{1} << i;
      solutions.push_back(bits);
      return;
    }
    const std::size_t var = order[depth];
    for (int val = 0; val <= 1; ++val) {
      Values next = v;
      next[var] = static_cast<signed char>(val);
      if (propagate(next, {var})) search(std::move(next), depth + 1);
    }
  }
};

}  // namespace

bool satisfies(const ContractionSystem& sys, std::uint64_t bits) {
  for (const auto& eq : sys.equations) {
    const bool l = monomial_value(bits, eq.lhs);
    const bool r = eq.rhs ? monomial_value(bits, *eq.rhs) : false;
    if (l != r) return false;
  }
  return true;
}

std::uint64_t SolveResult::total() const {
  return static_cast<std::uint64_t>(solutions.size()) << std::popcount(free_mask);
}

bool SolveResult::contains(std::uint64_t bits) const {
  return std::binary_search(solutions.begin(), solutions.end(), bits & ~free_mask);
}

std::vector<std::uint64_t> SolveResult::expand(std::uint64_t limit) const {
  if (std::popcount(free_mask) >= 40 || total() > limit)
    throw LimitError("expanded solution set exceeds " + std::to_string(limit) + " assignments");
  std::vector<std::uint64_t> out;
  out.reserve(total());
  for (auto s : solutions) {
    // enumerate subsets of free_mask
    std::uint64_t sub = 0;
    do {
      out.push_back(s | sub);
      sub = (sub - free_mask) & free_mask;
    } while (sub != 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t unconstrained_mask(const ContractionSystem& sys) {
  std::uint64_t used = 0;
  for (const auto& eq : sys.equations) {
    used |= std::uint64_t{1} << eq.lhs.first | std::uint64_t{1} << eq.lhs.second;
    if (eq.rhs) used |= std::uint64_t{1} << eq.rhs->first | std::uint64_t{1} << eq.rhs->second;
  }
  const std::size_t n = sys.pairs.size();
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return all & ~used;
}

SolveResult solve_binary(const ContractionSystem& sys, const SolveOptions& options) {
  const std::size_t nvars = sys.pairs.size();
  std::vector<std::vector<std::size_t>> watch(nvars);
  std::vector<std::size_t> weight(nvars, 0);
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    const auto& eq = sys.equations[e];
    std::set<std::size_t> vars{eq.lhs.first, eq.lhs.second};
    if (eq.rhs) vars.insert({eq.rhs->first, eq.rhs->second});
    for (auto v : vars) {
      watch[v].push_back(e);
      ++weight[v];
    }
  }
  const std::uint64_t free_mask = unconstrained_mask(sys);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!(free_mask >> i & 1u)) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return weight[a] > weight[b]; });

  auto make_solver = [&](std::uint64_t cap) { return Solver{sys, nvars, watch, order, cap, 0, {}}; };

  // equations of the form m = 0 constrain the root before any branching
  Solver::Values root(nvars, -1);
  std::vector<std::size_t> zero_forms;
  for (const auto& eq : sys.equations)
    if (!eq.rhs) zero_forms.push_back(eq.lhs.first);
  SolveResult result;
  result.free_mask = free_mask;
  if (!make_solver(0).propagate(root, zero_forms)) return result;

  // split on the first few branching variables when running in parallel
  std::size_t split = 0;
  while ((1u << split) < options.jobs && split < 6 && split < order.size()) ++split;

  if (split == 0) {
    Solver s = make_solver(options.node_cap);
    s.search(root, 0);
    result.solutions = std::move(s.solutions);
    result.nodes = s.nodes;
  } else {
    std::vector<std::future<std::pair<std::vector<std::uint64_t>, std::uint64_t>>> tasks;
    for (std::size_t branch = 0; branch < (std::size_t{1} << split); ++branch) {
      tasks.push_back(std::async(std::launch::async, [&, branch] {
        Solver s = make_solver(options.node_cap);
        Solver::Values v = root;
        bool ok = true;
        for (std::size_t b = 0; b < split && ok; ++b) {
          const std::size_t var = order[b];
          const int val = static_cast<int>(branch >> b & 1u);
          if (v[var] == -1) {
            v[var] = static_cast<signed char>(val);
            ok = s.propagate(v, {var});
          } else {
            ok = v[var] == val;
          }
        }
        if (ok) s.search(v, split);
        return std::pair{std::move(s.solutions), s.nodes};
      }));
    }
    std::set<std::uint64_t> merged;
    for (auto& t : tasks) {
      auto [sols, nodes] = t.get();
      merged.insert(sols.begin(), sols.end());
      result.nodes += nodes;
    }
    result.solutions.assign(merged.begin(), merged.end());
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()), result.solutions.end());
  return result;
}

std::uint64_t pushforward(const PairIndex& pairs, const Permutation& p, std::uint64_t bits) {
  std::uint64_t out = 0;
  for (std::size_t v = 0; v < pairs.size(); ++v) {
    const auto [i, j] = pairs.pair(v);
    if (bits >> pairs.index(p(i), p(j)) & 1u) out |= std::uint64_t{1} << v;
  }
  return out;
}

bool lex_less(const PairIndex& pairs, std::uint64_t a, std::uint64_t b) {
  for (std::size_t v = 0; v < pairs.size(); ++v) {
    const bool x = a >> v & 1u, y = b >> v & 1u;
    if (x != y) return !x;
  }
  return false;
}

std::vector<Orbit> symmetry_orbits(const std::vector<std::uint64_t>& solutions, const PermutationGroup& group,
                                   const Grading& g) {
  if (group.degree() != g.size()) throw ShapeError("group does not act on the grading parts");
  const PairIndex pairs(g.size());
  const std::unordered_set<std::uint64_t> members(solutions.begin(), solutions.end());
  std::unordered_set<std::uint64_t> visited;
  std::vector<Orbit> orbits;
  std::vector<Permutation> gens = group.generators();
  if (gens.empty()) gens = group.elements();
  for (auto s : solutions) {
    if (visited.contains(s)) continue;
    std::vector<std::uint64_t> queue{s};
    visited.insert(s);
    std::uint64_t rep = s;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& p : gens) {
        const std::uint64_t img = pushforward(pairs, p, queue[q]);
        if (!members.contains(img)) throw Error("solution set is not invariant under the symmetry group");
        if (visited.insert(img).second) {
          queue.push_back(img);
          if (lex_less(pairs, img, rep)) rep = img;
        }
      }
    }
    orbits.push_back({rep, queue.size()});
  }
  std::sort(orbits.begin(), orbits.end(),
            [&](const Orbit& a, const Orbit& b) { return lex_less(pairs, a.representative, b.representative); });
  return orbits;
}

namespace {

// Pushforward of a set of variables.
std::uint64_t push_mask(const PairIndex& pairs, const Permutation& p, std::uint64_t mask) {
  return pushforward(pairs, p.inverse(), mask);
}

}  // namespace

bool solutions_invariant(const SolveResult& result, const PermutationGroup& group, const Grading& g) {
  const PairIndex pairs(g.size());
  for (const auto& p : group.elements()) {
    // free variables must be permuted among themselves, constrained parts
    // must map into the solution set
    if (push_mask(pairs, p, result.free_mask) != result.free_mask) return false;
    for (auto s : result.solutions)
      if (!result.contains(pushforward(pairs, p, s))) return false;
  }
  return true;
}

std::uint64_t count_orbits(const SolveResult& result, const PermutationGroup& group, const Grading& g) {
  const PairIndex pairs(g.size());
  const std::unordered_set<std::uint64_t> base(result.solutions.begin(), result.solutions.end());
  // |Fix(p)| = (fixed constrained parts) * 2^(cycles of p on free variables)
  std::uint64_t sum = 0;
  for (const auto& p : group.elements()) {
    std::uint64_t fixed = 0;
    for (auto s : result.solutions)
      if (pushforward(pairs, p, s) == s) ++fixed;
    std::size_t cycles = 0;
    std::uint64_t seen = 0;
    for (std::size_t v = 0; v < pairs.size(); ++v) {
      if (!(result.free_mask >> v & 1u) || (seen >> v & 1u)) continue;
      ++cycles;
      for (std::size_t w = v; !(seen >> w & 1u);) {
        seen |= std::uint64_t{1} << w;
        const auto [i, j] = pairs.pair(w);
        w = pairs.index(p(i), p(j));
      }
    }
    sum += fixed << cycles;
  }
  if (sum % group.order() != 0) throw Error("orbit count is not an integer; solution set is not invariant");
  return sum / group.order();
}

std::string pair_name(const Grading& g, std::size_t var) {
  const PairIndex pairs(g.size());
  const auto [i, j] = pairs.pair(var);
  if (!g.is_labeled()) return std::to_string(i) + "|" + std::to_string(j);
  return g.group().to_string(g.labels()[i]) + "|" + g.group().to_string(g.labels()[j]);
}

}  // namespace gradelab
