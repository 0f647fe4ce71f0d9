#include "gradelab/catalog.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace gradelab {

namespace {

Cyclo omega() { return Cyclo::root_of_unity(3, 1).embed(kCatalogOrder); }

Matrix diag3(const Cyclo& a, const Cyclo& b, const Cyclo& c) {
  const std::vector<Cyclo> d{a, b, c};
  return Matrix::diagonal(d).embed(kCatalogOrder);
}

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Cyclo> flat;
  std::size_t r = 0;
  for (const auto& row : rows) {
    for (long v : row) flat.emplace_back(v);
    ++r;
  }
  const std::size_t cols = flat.size() / r;
  return Matrix(r, cols, std::move(flat)).embed(kCatalogOrder);
}

bool is_diagonal(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  return true;
}

// Nonzero pattern exactly {(0,0), (1,2), (2,1)}.
bool is_block_antidiagonal(const Matrix& m) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const bool allowed = (r == 0 && c == 0) || (r == 1 && c == 2) || (r == 2 && c == 1);
      if (!allowed && !m(r, c).is_zero()) return false;
    }
  return true;
}

Matrix pauli_word(int p_exp, int q_exp) {
  return power(named_matrix("P"), static_cast<unsigned>(p_exp)) *
         power(named_matrix("Q"), static_cast<unsigned>(q_exp));
}

// {diag(a1, a2, a3)} : Ad of any invertible diagonal matrix.
bool member_g1(const Automorphism& f) { return f.kind() == AutKind::Inner && is_diagonal(f.rep()); }

// Ad or Out of c * diag(+-1, +-1, +-1).
bool member_g2(const Automorphism& f) {
  const Matrix& a = f.rep();
  if (!is_diagonal(a)) return false;
  const Cyclo sq = a(0, 0) * a(0, 0);
  return a(1, 1) * a(1, 1) == sq && a(2, 2) * a(2, 2) == sq;
}

// Ad of c * diag(e, t, 1/t) or Out of c * [[e,0,0],[0,0,t],[0,1/t,0]], e = +-1.
bool member_g3(const Automorphism& f) {
  const Matrix& a = f.rep();
  if (f.kind() == AutKind::Inner)
    return is_diagonal(a) && a(0, 0) * a(0, 0) == a(1, 1) * a(2, 2);
  return is_block_antidiagonal(a) && a(0, 0) * a(0, 0) == a(1, 2) * a(2, 1);
}

// Ad of c * P^k Q^j.
bool member_g4(const Automorphism& f) {
  if (f.kind() != AutKind::Inner) return false;
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      if (pauli_word(k, j).scalar_ratio(f.rep())) return true;
  return false;
}

Matrix e(std::size_t i, std::size_t j) { return Matrix::unit(3, i, j); }

std::vector<Subspace> span_parts(const std::vector<std::vector<Matrix>>& spans) {
  const auto& alg = sl3();
  std::vector<Subspace> parts;
  for (const auto& list : spans) {
    std::vector<Vector> vs;
    for (const auto& m : list) vs.push_back(alg.from_matrix(m));
    parts.emplace_back(alg.dim(), vs);
  }
  return parts;
}

std::unique_ptr<CatalogEntry> build(std::string_view name) {
  const auto& alg = sl3();
  auto ad = [&](const Matrix& m) { return make_ad(alg, m); };
  auto out = [&](const Matrix& m) { return make_out(alg, m); };
  const Cyclo w = omega();
  const Cyclo one(1);

  MadGroupSpec mad;
  std::vector<std::vector<Matrix>> spans;
  std::vector<std::string> names;
  std::optional<std::pair<AbelianGroup, Labeling>> published;
  std::vector<std::string> normalizer_names, inner_names;
  std::size_t expected = 0;

  if (name == "g1") {
    mad.name = "G1";
    mad.is_infinite = true;
    mad.separating_generators = {ad(diag3(one, w, one)), ad(diag3(one, one, w))};
    mad.group_generators = mad.separating_generators;
    // multiplicatively independent entries generate a dense subgroup of the torus
    mad.group_generators.push_back(ad(diag3(Cyclo(1), Cyclo(2), Cyclo(3))));
    mad.membership = member_g1;
    spans = {{e(1, 1) - e(2, 2), e(2, 2) - e(3, 3)}, {e(1, 2)}, {e(2, 3)}, {e(1, 3)},
             {e(3, 1)}, {e(3, 2)}, {e(2, 1)}};
    names = {"N_0", "N_a1", "N_a2", "N_a1+a2", "N_-a1-a2", "N_-a2", "N_-a1"};
    normalizer_names = {"OutI", "AdB1", "AdB2"};
    inner_names = {"AdB1", "AdB2"};
    expected = 12;
  } else if (name == "g2") {
    mad.name = "G2";
    mad.separating_generators = {ad(diag3(Cyclo(-1), one, one)), ad(diag3(one, Cyclo(-1), one)),
                                 out(named_matrix("I"))};
    mad.group_generators = mad.separating_generators;
    mad.membership = member_g2;
    spans = {{e(1, 1) - e(2, 2), e(2, 2) - e(3, 3)},
             {e(2, 1) + e(1, 2)},
             {e(3, 1) + e(1, 3)},
             {e(2, 3) + e(3, 2)},
             {e(2, 1) - e(1, 2)},
             {e(2, 3) - e(3, 2)},
             {e(3, 1) - e(1, 3)}};
    names = {"K_(0,0,1)", "K_(1,1,1)", "K_(1,0,1)", "K_(0,1,1)", "K_(1,1,0)", "K_(0,1,0)", "K_(1,0,0)"};
    published = std::pair{AbelianGroup({2, 2, 2}),
                          Labeling{{0, 0, 1}, {1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {0, 1, 0}, {1, 0, 0}}};
    normalizer_names = {"AdB1", "AdB2", "AdH"};
    inner_names = normalizer_names;
    expected = 18;
  } else if (name == "g3") {
    mad.name = "G3";
    mad.is_infinite = true;
    const Cyclo z8 = Cyclo::root_of_unity(8, 1);
    mad.separating_generators = {ad(diag3(one, z8, z8.inverse())), out(named_matrix("B2"))};
    mad.group_generators = mad.separating_generators;
    mad.group_generators.push_back(ad(diag3(one, Cyclo(2), Cyclo(Rational(1, 2)))));
    mad.group_generators.push_back(ad(diag3(Cyclo(-1), one, one)));
    mad.membership = member_g3;
    spans = {{e(2, 2) - e(3, 3)},
             {e(1, 2) - e(3, 1)},
             {e(2, 3)},
             {e(1, 3) + e(2, 1)},
             {Cyclo(2) * e(1, 1) - e(2, 2) - e(3, 3)},
             {e(1, 2) + e(3, 1)},
             {e(3, 2)},
             {e(1, 3) - e(2, 1)}};
    names = {"M_0", "M_1", "M_2", "M_3", "M_4", "M_5", "M_6", "M_7"};
    Labeling ls;
    for (int k = 0; k < 8; ++k) ls.push_back({k});
    published = std::pair{AbelianGroup({8}), std::move(ls)};
    normalizer_names = {"AdB2", "AdH"};
    inner_names = normalizer_names;
    expected = 4;
  } else if (name == "g4") {
    mad.name = "G4";
    mad.separating_generators = {ad(named_matrix("P")), ad(named_matrix("Q"))};
    mad.group_generators = mad.separating_generators;
    mad.membership = member_g4;
    const std::vector<std::pair<int, int>> order{{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
    Labeling ls;
    for (auto [a, b] : order) {
      spans.push_back({pauli_word(a, b)});
      names.push_back("L_(" + std::to_string(a) + "," + std::to_string(b) + ")");
      ls.push_back({a, b});
    }
    published = std::pair{AbelianGroup({3, 3}), std::move(ls)};
    normalizer_names = {"OutI", "AdS", "AdD"};
    inner_names = {"AdS", "AdD"};
    expected = 48;
  } else {
    throw InputError("unknown catalog grading '" + std::string(name) + "' (expected g1, g2, g3 or g4)");
  }

  const auto decomposition = common_eigenspace_decomposition(alg, mad.separating_generators);
  const auto reference = span_parts(spans);
  if (reference.size() != decomposition.grading.size())
    throw Error("catalog " + std::string(name) + ": eigenspace count does not match the listed parts");
  std::vector<std::size_t> order;
  for (std::size_t r = 0; r < reference.size(); ++r) {
    std::size_t found = reference.size();
    for (std::size_t p = 0; p < decomposition.grading.size(); ++p)
      if (decomposition.grading.part(p) == reference[r]) found = p;
    if (found == reference.size())
      throw Error("catalog " + std::string(name) + ": part " + names[r] + " is not a common eigenspace");
    order.push_back(found);
  }
  Grading grading = decomposition.grading.reordered(order);
  if (published) {
    grading = grading.with_labels(published->first, published->second);
  } else {
    Labeling ls;
    for (auto p : order) ls.push_back(decomposition.characters[p]);
    grading = grading.with_labels(decomposition.character_group, std::move(ls));
  }

  std::vector<Automorphism> normalizers;
  for (const auto& n : normalizer_names) normalizers.push_back(named_automorphism(n));

  return std::make_unique<CatalogEntry>(CatalogEntry{std::string(name), std::move(mad), std::move(grading),
                                                     std::move(names), std::move(spans), std::move(normalizers),
                                                     std::move(normalizer_names), std::move(inner_names), expected});
}

}  // namespace

Matrix named_matrix(std::string_view name) {
  const Cyclo w = omega();
  const Cyclo one(1);
  if (name == "I") return Matrix::identity(3).embed(kCatalogOrder);
  if (name == "P") return diag3(one, w, w * w);
  if (name == "Q" || name == "B1") return from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  if (name == "B2") return from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  if (name == "H") {
    const Cyclo i = Cyclo::root_of_unity(4, 1);
    return diag3(one, i, i);
  }
  if (name == "D") return diag3(one, one, w);
  if (name == "S") {
    std::vector<Cyclo> flat;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) flat.push_back(Cyclo::root_of_unity(3, j * k));
    return Matrix(3, 3, std::move(flat)).embed(kCatalogOrder);
  }
  throw InputError("unknown matrix name '" + std::string(name) + "'");
}

Automorphism named_automorphism(std::string_view name) {
  if (name.starts_with("Ad")) return make_ad(sl3(), named_matrix(name.substr(2)));
  if (name.starts_with("Out")) return make_out(sl3(), named_matrix(name.substr(3)));
  throw InputError("automorphism names look like AdB1 or OutI, got '" + std::string(name) + "'");
}

const CatalogEntry& catalog(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(std::string(name), build(name)).first;
  return *it->second;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"g1", "g2", "g3", "g4"};
  return names;
}

}  // namespace gradelab
