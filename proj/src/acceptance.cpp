#include "gradelab/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gradelab/catalog.hpp"
#include "gradelab/contraction.hpp"
#include "gradelab/error.hpp"

namespace gradelab {

namespace {

using Check = CriterionResult (*)(const AcceptanceOptions&);

// Collects failures; the criterion passes when none were recorded.
class Report {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  CriterionResult finish(int id, std::string title) const {
    CriterionResult r{id, std::move(title), failures_.empty(), {}};
    const auto& lines = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < lines.size(); ++i) r.detail += (i ? "; " : "") + lines[i];
    return r;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

unsigned worker_count(const AcceptanceOptions& o) {
  if (o.jobs) return o.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

Subspace span_of(const std::vector<Matrix>& ms) {
  std::vector<Vector> vs;
  for (const auto& m : ms) vs.push_back(sl3().from_matrix(m));
  return Subspace(sl3().dim(), vs);
}

// Same parts up to order.
bool same_parts(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& u : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Subspace& v) { return v == u && !used[&v - b.data()]; });
    if (it == b.end()) return false;
    used[it - b.begin()] = true;
  }
  return true;
}

std::vector<Subspace> parts_of(const Grading& g) { return g.parts(); }

CriterionResult fine_gradings(const AcceptanceOptions&) {
  Report rep;
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    const Grading computed = common_eigenspaces(sl3(), c.mad.separating_generators);
    std::vector<Subspace> published;
    for (const auto& spans : c.reference_spans) published.push_back(span_of(spans));
    rep.expect(same_parts(parts_of(computed), published), name + ": eigenspaces differ from the published parts");
  }

  // Cartan decomposition: one 2-dim part and span{E_ij} for each i != j
  const Grading g1 = common_eigenspaces(sl3(), catalog("g1").mad.separating_generators);
  std::vector<Subspace> cartan;
  std::vector<Vector> diag;
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      if (i != j) cartan.push_back(span_of({Matrix::unit(3, i, j)}));
  cartan.push_back(span_of({Matrix::unit(3, 1, 1) - Matrix::unit(3, 2, 2), Matrix::unit(3, 2, 2) - Matrix::unit(3, 3, 3)}));
  rep.expect(same_parts(parts_of(g1), cartan), "g1: not the Cartan decomposition");

  const Grading g2 = common_eigenspaces(sl3(), catalog("g2").mad.separating_generators);
  const Subspace sym12 = span_of({Matrix::unit(3, 2, 1) + Matrix::unit(3, 1, 2)});
  rep.expect(std::count(g2.parts().begin(), g2.parts().end(), sym12) == 1, "g2: span{E21+E12} missing");

  const Grading g4 = common_eigenspaces(sl3(), catalog("g4").mad.separating_generators);
  const Matrix p = named_matrix("P"), q = named_matrix("Q");
  std::vector<Subspace> pauli;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      if (a || b) pauli.push_back(span_of({power(p, a) * power(q, b)}));
  rep.expect(same_parts(parts_of(g4), pauli), "g4: parts are not span{P^a Q^b}");

  std::ostringstream dims;
  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name).grading;
    std::vector<std::size_t> d;
    for (const auto& part : g.parts()) d.push_back(part.dim());
    std::sort(d.rbegin(), d.rend());
    dims << name << ':' << g.size() << " parts dims";
    for (auto x : d) dims << ' ' << x;
    dims << (name == catalog_names().back() ? "" : ", ");
  }
  rep.note(dims.str());
  return rep.finish(1, "fine-grading reproduction");
}

CriterionResult labelings(const AcceptanceOptions&) {
  Report rep;
  for (const auto& name : catalog_names()) {
    const auto& g = catalog(name).grading;
    const auto cert = verify_grading(g);
    rep.expect(cert.is_grading, name + ": grading axiom fails" +
                                   (cert.violation ? " at parts " + std::to_string(cert.violation->first) + "," +
                                                         std::to_string(cert.violation->second)
                                                   : std::string()));
    rep.expect(verify_labeling(g), name + ": published labeling rejected (" + g.group().description() + ")");
  }
  const auto& g1 = catalog("g1").grading;
  for (const auto& orders : std::vector<std::vector<int>>{{3, 3}, {7}}) {
    const AbelianGroup group(orders);
    const auto found = search_labeling(g1, group);
    rep.expect(found && verify_labeling(g1, group, *found), "g1: no labeling over " + group.description());
  }
  rep.note("g2 over Z2^3, g3 over Z8, g4 over Z3xZ3; g1 labeled over Z3xZ3 and Z7");
  return rep.finish(2, "grading axiom and labelings");
}

CriterionResult mad_cardinalities(const AcceptanceOptions&) {
  Report rep;
  const auto g4 = generate_group({named_automorphism("AdP"), named_automorphism("AdQ")});
  const auto g2 = generate_group(catalog("g2").mad.group_generators);
  rep.expect(g4.size() == 9, "<AdP, AdQ> has " + std::to_string(g4.size()) + " elements, expected 9");
  rep.expect(g2.size() == 8, "G2 has " + std::to_string(g2.size()) + " elements, expected 8");
  rep.note("|<AdP,AdQ>| = " + std::to_string(g4.size()) + ", |G2| = " + std::to_string(g2.size()));
  return rep.finish(3, "MAD-group cardinalities");
}

CriterionResult quotient_orders(const AcceptanceOptions&) {
  Report rep;
  std::ostringstream summary;
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    const auto qa = analyze_quotient(c.mad, c.grading, c.normalizer_generators);
    const std::size_t order = qa.group.order();
    rep.expect(!qa.discrepancy, name + ": " + qa.discrepancy.value_or(""));
    rep.expect(order == c.expected_quotient_order,
               name + ": order " + std::to_string(order) + ", expected " + std::to_string(c.expected_quotient_order));
    if (name == "g3") rep.expect(qa.group.exponent() == 2, "g3: quotient exponent is not 2");
    summary << name << ' ' << order << (name == catalog_names().back() ? "" : ", ");
  }
  rep.note(summary.str() + "; g3 has exponent 2");
  return rep.finish(4, "normalizer quotient orders");
}

CriterionResult inner_structure(const AcceptanceOptions&) {
  Report rep;
  {
    const auto& c = catalog("g1");
    const auto inner = inner_subquotient(c.mad, c.grading, c.normalizer_generators);
    const PermutationGroup generated(c.grading.size(), {induced_permutation(named_automorphism("AdB1"), c.grading),
                                                        induced_permutation(named_automorphism("AdB2"), c.grading)});
    rep.expect(inner.order() == 6, "g1: inner subquotient has order " + std::to_string(inner.order()));
    rep.expect(inner.elements() == generated.elements(), "g1: inner subquotient is not generated by AdB1, AdB2");
  }
  {
    const auto& c = catalog("g4");
    const auto inner = inner_subquotient(c.mad, c.grading, c.normalizer_generators);
    rep.expect(inner.order() == 24, "g4: inner subquotient has order " + std::to_string(inner.order()));
    std::set<Mat2Z3> image;
    for (const auto& p : inner.elements()) {
      const auto m = linearize_on_labels(p, c.grading);
      rep.expect(m.has_value(), "g4: " + p.cycles() + " is not linear on labels");
      if (m) image.insert(*m);
    }
    const auto sl2 = enumerate_sl2_z3();
    rep.expect(image == std::set<Mat2Z3>(sl2.begin(), sl2.end()), "g4: linearized image is not SL(2,Z3)");
    rep.expect(sl2.size() == 24, "SL(2,Z3) enumeration gave " + std::to_string(sl2.size()));
  }
  rep.note("g1 inner order 6 = <AdB1, AdB2>; g4 inner order 24, image = SL(2,Z3)");
  return rep.finish(5, "inner structure");
}

CriterionResult permutation_constraints(const AcceptanceOptions&) {
  Report rep;
  for (const char* name : {"g1", "g2"}) {
    const auto& c = catalog(name);
    const auto group = quotient_group(c.mad, c.grading, c.normalizer_generators);
    std::size_t cartan = c.grading.size();
    for (std::size_t i = 0; i < c.grading.size(); ++i)
      if (c.grading.part(i).dim() == 2) cartan = i;
    rep.expect(cartan < c.grading.size(), std::string(name) + ": no 2-dim part");
    for (const auto& p : group.elements())
      rep.expect(p(cartan) == cartan, std::string(name) + ": " + p.cycles() + " moves the 2-dim part");
  }
  std::size_t pairs = 0, mad_elements = 0;
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    const auto& gens = c.normalizer_generators;
    for (const auto& f : gens)
      for (const auto& h : gens) {
        const auto lhs = induced_permutation(compose(f, h), c.grading);
        const auto rhs = compose(induced_permutation(f, c.grading), induced_permutation(h, c.grading));
        rep.expect(lhs == rhs, name + ": induced permutation is not functorial");
        ++pairs;
      }
    std::vector<Automorphism> members;
    if (c.mad.is_infinite) {
      members = c.mad.group_generators;
      for (const auto& f : c.mad.group_generators)
        for (const auto& h : c.mad.separating_generators) members.push_back(compose(f, h));
    } else {
      members = generate_group(c.mad.group_generators);
    }
    for (const auto& m : members) {
      rep.expect(c.mad.membership(m), name + ": sample is not in its MAD-group");
      rep.expect(induced_permutation(m, c.grading).is_identity(), name + ": MAD-group element moves a part");
      ++mad_elements;
    }
  }
  rep.note(std::to_string(pairs) + " generator pairs functorial, " + std::to_string(mad_elements) +
           " MAD-group elements act trivially");
  return rep.finish(6, "permutation constraints");
}

std::uint64_t deposit(std::uint64_t k, const std::vector<std::size_t>& positions) {
  std::uint64_t bits = 0;
  for (std::size_t t = 0; t < positions.size(); ++t) bits |= ((k >> t) & 1u) << positions[t];
  return bits;
}

CriterionResult oracle_equivalence(const AcceptanceOptions& options) {
  Report rep;
  std::mt19937_64 rng(options.seed);
  std::ostringstream summary;
  for (const char* name : {"g2", "g4"}) {
    const auto& g = catalog(name).grading;
    const auto sys = generate_equations(g);
    const auto result = solve_binary(sys, {.node_cap = 200'000'000, .jobs = worker_count(options)});
    const CompiledJacobiOracle oracle(g);
    const std::uint64_t all = (std::uint64_t{1} << sys.pairs.size()) - 1;
    rep.expect((all & ~oracle.active_mask() & ~result.free_mask) == 0,
               std::string(name) + ": an inactive variable occurs in an equation");

    std::vector<std::size_t> positions;
    for (std::size_t v = 0; v < sys.pairs.size(); ++v)
      if (oracle.active_mask() >> v & 1u) positions.push_back(v);
    if (positions.size() > 24) {
      rep.expect(false, std::string(name) + ": too many active variables for exhaustive check");
      continue;
    }
    // Every assignment of the active variables, inactive ones fixed at 0.
    const std::uint64_t total = std::uint64_t{1} << positions.size();
    std::atomic<std::uint64_t> mismatches{0}, accepted{0};
    std::vector<std::thread> workers;
    const unsigned n = worker_count(options);
    for (unsigned w = 0; w < n; ++w)
      workers.emplace_back([&, w] {
        std::uint64_t bad = 0, ok = 0;
        for (std::uint64_t k = w; k < total; k += n) {
          const std::uint64_t bits = deposit(k, positions);
          const bool verdict = oracle(bits);
          ok += verdict;
          bad += verdict != result.contains(bits);
        }
        mismatches += bad;
        accepted += ok;
      });
    for (auto& t : workers) t.join();
    rep.expect(mismatches == 0, std::string(name) + ": " + std::to_string(mismatches.load()) +
                                    " assignments where equations and oracle disagree");

    // The compiled oracle against the direct exact Jacobi check, on random
    // assignments and on random solutions.
    std::size_t direct = 0;
    std::uniform_int_distribution<std::size_t> pick(0, result.solutions.size() - 1);
    for (std::size_t s = 0; s < 200; ++s) {
      std::uint64_t bits = rng() & all;
      if (s % 2) bits = result.solutions[pick(rng)] | (rng() & result.free_mask);
      const bool exact = jacobi_oracle(contracted_structure(g, EpsilonAssignment(g.size(), bits)));
      rep.expect(exact == oracle(bits), std::string(name) + ": compiled oracle disagrees with exact check");
      ++direct;
    }
    summary << name << ": 2^" << positions.size() << " active assignments, " << accepted.load()
            << " accepted, " << direct << " exact spot checks; ";
  }
  rep.note(summary.str() + "zero discrepancies");
  return rep.finish(7, "contraction oracle equivalence");
}

CriterionResult symmetry_invariance(const AcceptanceOptions& options) {
  Report rep;
  std::ostringstream summary;
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    const auto group = quotient_group(c.mad, c.grading, c.normalizer_generators);
    const auto result = solve_binary(generate_equations(c.grading), {.node_cap = 200'000'000, .jobs = worker_count(options)});
    rep.expect(solutions_invariant(result, group, c.grading), name + ": solution set not invariant");
    const auto orbits = symmetry_orbits(result.solutions, group, c.grading);
    for (const auto& o : orbits)
      rep.expect(group.order() % o.size == 0, name + ": orbit size " + std::to_string(o.size) + " does not divide the order");
    const auto full = count_orbits(result, group, c.grading);
    if (result.total() <= 5'000'000) {
      // direct enumeration agrees with the Burnside count
      const auto all = symmetry_orbits(result.expand(), group, c.grading);
      rep.expect(all.size() == full, name + ": orbit counts disagree");
      for (const auto& o : all)
        rep.expect(group.order() % o.size == 0, name + ": orbit size does not divide the order");
    }
    summary << name << ' ' << result.total() << " solutions / " << full << " orbits"
            << (name == catalog_names().back() ? "" : ", ");
  }
  rep.note(summary.str());
  return rep.finish(8, "symmetry invariance of solutions");
}

Cyclo random_cyclo(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), terms(0, 3), expo(0, order - 1);
  Cyclo x = Cyclo(0).embed(order);
  for (int t = terms(rng); t >= 0; --t) x += Cyclo(Rational(num(rng), den(rng))) * Cyclo::root_of_unity(order, expo(rng));
  return x;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) <= 1e-9 * (1 + std::abs(b)); }

CriterionResult substrate(const AcceptanceOptions& options) {
  Report rep;
  std::mt19937_64 rng(options.seed ^ 0x9e37'79b9'7f4a'7c15ULL);
  const int orders[] = {1, 3, 4, 6, 8, 12, 24};
  std::uniform_int_distribution<int> pick_order(0, 6);
  std::size_t bad_axiom = 0, bad_embed = 0, bad_float = 0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Cyclo a = random_cyclo(rng, orders[pick_order(rng)]);
    const Cyclo b = random_cyclo(rng, orders[pick_order(rng)]);
    const Cyclo c = random_cyclo(rng, orders[pick_order(rng)]);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
              a * (b + c) == a * b + a * c && a - a == Cyclo(0) && a * Cyclo(1) == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == Cyclo(1);
    bad_axiom += !ok;
    const int m = 48;
    bad_embed += !((a * b).embed(m) == a.embed(m) * b.embed(m) && (a + b).embed(m) == a.embed(m) + b.embed(m) &&
                   (a * b).embed(m).order() == m);
    bool fl = close((a * b).to_complex(), a.to_complex() * b.to_complex()) &&
              close((a + b).to_complex(), a.to_complex() + b.to_complex());
    if (!a.is_zero()) fl = fl && close(a.inverse().to_complex(), 1.0 / a.to_complex());
    const int k = static_cast<int>(s % 24);
    fl = fl && close(Cyclo::root_of_unity(24, k).to_complex(), std::polar(1.0, 2 * std::numbers::pi * k / 24));
    bad_float += !fl;
  }
  rep.expect(bad_axiom == 0, std::to_string(bad_axiom) + " field axiom failures");
  rep.expect(bad_embed == 0, std::to_string(bad_embed) + " embedding failures");
  rep.expect(bad_float == 0, std::to_string(bad_float) + " floating-point mismatches beyond 1e-9");

  // rank-nullity and dim(U+V) + dim(U cap V) = dim U + dim V
  std::size_t bad_dim = 0;
  std::uniform_int_distribution<int> small(-2, 2), coin(0, 3), sz(1, 4);
  auto random_matrix = [&](std::size_t r, std::size_t cols) {
    std::vector<Cyclo> e;
    for (std::size_t i = 0; i < r * cols; ++i)
      e.push_back(coin(rng) == 0 ? Cyclo(small(rng)) * Cyclo::root_of_unity(3, 1) : Cyclo(coin(rng) > 1 ? small(rng) : 0));
    return Matrix(r, cols, std::move(e));
  };
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Matrix a = random_matrix(sz(rng), 6);
    const Matrix b = random_matrix(sz(rng), 6);
    bad_dim += a.rank() + kernel(a).dim() != a.cols();
    std::vector<Vector> ua, ub;
    for (std::size_t r = 0; r < a.rows(); ++r) ua.push_back(a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) ub.push_back(b.row(r));
    const Subspace u(6, ua), v(6, ub);
    bad_dim += subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() != u.dim() + v.dim();
  }
  rep.expect(bad_dim == 0, std::to_string(bad_dim) + " dimension formula failures");

  // action[x,y] = [action x, action y] for random automorphisms built from
  // catalog generators
  std::vector<Automorphism> pool;
  for (const auto& name : catalog_names()) {
    const auto& c = catalog(name);
    pool.insert(pool.end(), c.normalizer_generators.begin(), c.normalizer_generators.end());
    pool.insert(pool.end(), c.mad.group_generators.begin(), c.mad.group_generators.end());
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::size_t bad_aut = 0;
  const auto& alg = sl3();
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Automorphism f = compose(pool[pick(rng)], pool[pick(rng)]);
    Vector x(alg.dim()), y(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      x[i] = Cyclo(coef(rng));
      y[i] = coin(rng) ? Cyclo(coef(rng)) : Cyclo(coef(rng)) * Cyclo::root_of_unity(4, 1);
    }
    bad_aut += f.apply(alg.bracket(x, y)) != alg.bracket(f.apply(x), f.apply(y));
  }
  rep.expect(bad_aut == 0, std::to_string(bad_aut) + " automorphism property failures");
  rep.note(std::to_string(options.samples) + " samples each: field axioms, embedding, float cross-check, "
           "dimension formulas, automorphism property");
  return rep.finish(9, "substrate properties");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  static const std::pair<const char*, Check> checks[] = {
      {"fine-grading reproduction", fine_gradings},
      {"grading axiom and labelings", labelings},
      {"MAD-group cardinalities", mad_cardinalities},
      {"normalizer quotient orders", quotient_orders},
      {"inner structure", inner_structure},
      {"permutation constraints", permutation_constraints},
      {"contraction oracle equivalence", oracle_equivalence},
      {"symmetry invariance of solutions", symmetry_invariance},
      {"substrate properties", substrate},
  };
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 9; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    const auto& [title, check] = checks[id - 1];
    CriterionResult r;
    try {
      r = check(options);
    } catch (const std::exception& e) {
      r = {id, title, false, std::string("exception: ") + e.what()};
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + ' ' + std::to_string(r.id) + ' ' + r.title +
         (r.detail.empty() ? "" : ": " + r.detail);
}

}  // namespace gradelab
