#include "gradelab/serialize.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

#include "gradelab/error.hpp"

namespace gradelab {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json bits_json(const Grading& g, const PairIndex& pairs, std::uint64_t bits) {
  Json out = Json::object();
  for (std::size_t v = 0; v < pairs.size(); ++v) out[pair_name(g, v)] = static_cast<int>(bits >> v & 1u);
  return out;
}

Json monomial_json(const Grading& g, const Monomial& m) {
  return Json::array({pair_name(g, m.first), pair_name(g, m.second)});
}

}  // namespace

Json to_json(const Cyclo& x) {
  Json terms = Json::array();
  const auto& c = x.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    terms.push_back(Json::array({integer_json(c[e].get_num()), integer_json(c[e].get_den()), e}));
  }
  return Json{{"order", x.order()}, {"terms", terms}};
}

Cyclo cyclo_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclo(static_cast<long>(j.get<long long>()));
  const Json& order_json = field(j, "order");
  if (!order_json.is_number_integer() || order_json.get<long long>() < 1 || order_json.get<long long>() > 10000)
    throw InputError("cyclotomic order must be a positive integer");
  const int order = order_json.get<int>();
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  Cyclo out = Cyclo(0).embed(order);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) throw InputError("each term must be [num, den, exp]");
    const mpz_class den = integer_from_json(t[1]);
    if (den == 0) throw InputError("zero denominator in term " + t.dump());
    if (!t[2].is_number_integer()) throw InputError("term exponent must be an integer");
    Rational q(integer_from_json(t[0]), den);
    q.canonicalize();
    out += Cyclo(q) * Cyclo::root_of_unity(order, t[2].get<long>());
  }
  return out;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a vector");
  Vector out;
  for (const auto& x : j) out.push_back(cyclo_from_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(to_json(m(r, c)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  Vector entries = vector_from_json(field(j, "entries"));
  if (entries.size() != rows * cols) throw InputError("matrix entry count does not match rows x cols");
  return Matrix(rows, cols, std::move(entries));
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return Json{{"ambient", s.ambient_dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t ambient = size_field(j, "ambient");
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) throw InputError("'basis' must be an array");
  std::vector<Vector> spanning;
  for (const auto& v : basis) {
    spanning.push_back(vector_from_json(v));
    if (spanning.back().size() != ambient) throw InputError("basis vector length does not match ambient dimension");
  }
  return Subspace(ambient, spanning);
}

Json to_json(const Automorphism& f) { return Json{{"kind", to_string(f.kind())}, {"rep", to_json(f.rep())}}; }

Automorphism automorphism_from_json(const SlAlgebra& algebra, const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string() || (kind != "inner" && kind != "outer"))
    throw InputError("automorphism kind must be \"inner\" or \"outer\"");
  return Automorphism(algebra, kind == "inner" ? AutKind::Inner : AutKind::Outer, matrix_from_json(field(j, "rep")));
}

const SlAlgebra& sl_algebra(std::size_t n) {
  if (n == 3) return sl3();
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<SlAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SlAlgebra>(n);
  return *slot;
}

Json to_json(const Grading& g, const std::vector<std::string>& part_names) {
  Json parts = Json::array();
  for (const auto& p : g.parts()) parts.push_back(to_json(p));
  Json out{{"n", g.algebra().n()}, {"parts", parts}};
  if (g.is_labeled()) {
    out["group"] = g.group().cyclic_orders();
    out["labels"] = g.labels();
  }
  if (!part_names.empty()) out["names"] = part_names;
  return out;
}

Grading grading_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  if (n < 2 || n > 6) throw InputError("algebra size n must be between 2 and 6");
  const SlAlgebra& algebra = sl_algebra(n);
  const Json& parts_json = field(j, "parts");
  if (!parts_json.is_array()) throw InputError("'parts' must be an array");
  std::vector<Subspace> parts;
  for (const auto& p : parts_json) {
    parts.push_back(subspace_from_json(p));
    if (parts.back().ambient_dim() != algebra.dim()) throw InputError("part ambient dimension does not match sl(n)");
  }
  Grading g(algebra, std::move(parts));
  if (!j.contains("group")) return g;
  try {
    AbelianGroup group(j.at("group").get<std::vector<int>>());
    Labeling labels = field(j, "labels").get<Labeling>();
    if (labels.size() != g.size()) throw InputError("label count does not match part count");
    for (const auto& l : labels)
      if (!group.contains(l)) throw InputError("label outside the group: " + Json(l).dump());
    return g.with_labels(std::move(group), std::move(labels));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group or labels: ") + e.what());
  }
}

Json to_json(const Permutation& p) {
  return Json{{"mapping", p.mapping()}, {"cycles", p.cycles()}, {"order", p.order()}};
}

Json to_json(const ContractionSystem& sys, const Grading& g) {
  Json variables = Json::array();
  for (std::size_t v = 0; v < sys.pairs.size(); ++v) variables.push_back(pair_name(g, v));
  Json equations = Json::array();
  for (const auto& eq : sys.equations) {
    Json source{{"triple", {eq.source.a, eq.source.b, eq.source.c}},
                {"coordinate", eq.source.coordinate},
                {"rank", eq.source.rank},
                {"weight", eq.source.weight ? to_json(*eq.source.weight) : Json(nullptr)}};
    equations.push_back(Json{{"lhs", monomial_json(g, eq.lhs)},
                             {"rhs", eq.rhs ? monomial_json(g, *eq.rhs) : Json(nullptr)},
                             {"source", source}});
  }
  Json active = Json::array();
  for (std::size_t v = 0; v < sys.pairs.size(); ++v)
    if (sys.active_mask >> v & 1u) active.push_back(pair_name(g, v));
  return Json{{"variables", variables},
              {"active", active},
              {"equations", equations},
              {"triples_with_equations", sys.triples.size()}};
}

Json to_json(const SolveResult& result, const Grading& g) {
  const PairIndex pairs(g.size());
  Json free = Json::array();
  for (std::size_t v = 0; v < pairs.size(); ++v)
    if (result.free_mask >> v & 1u) free.push_back(pair_name(g, v));
  Json solutions = Json::array();
  for (auto s : result.solutions) solutions.push_back(bits_json(g, pairs, s));
  return Json{{"free", free},
              {"base_count", result.solutions.size()},
              {"total", result.total()},
              {"solutions", solutions}};
}

Json to_json(const std::vector<Orbit>& orbits, const Grading& g) {
  const PairIndex pairs(g.size());
  Json out = Json::array();
  for (const auto& o : orbits) out.push_back(Json{{"size", o.size}, {"representative", bits_json(g, pairs, o.representative)}});
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace gradelab
