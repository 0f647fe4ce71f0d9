// gradelab: command-line front end for the sl(3) grading workbench.

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "gradelab/acceptance.hpp"
#include "gradelab/catalog.hpp"
#include "gradelab/error.hpp"
#include "gradelab/serialize.hpp"

using namespace gradelab;

namespace {

struct Common {
  std::string catalog_name;
  std::string input;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c, bool allow_input) {
  auto* cat = cmd->add_option("--catalog", c.catalog_name, "catalog grading")
                  ->check(CLI::IsMember(catalog_names()));
  if (allow_input)
    cmd->add_option("--input", c.input, "grading JSON file, or - for stdin")->excludes(cat);
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// FNV-1a, enough to tell inputs apart in a report.
std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) h = (h ^ ch) * 0x100000001b3ULL;
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct Loaded {
  Grading grading;
  std::vector<std::string> names;
  const CatalogEntry* entry = nullptr;
  Json source;
};

Loaded load(const Common& c, bool need_catalog = false) {
  if (!c.catalog_name.empty()) {
    const auto& e = catalog(c.catalog_name);
    return {e.grading, e.part_names, &e, Json{{"catalog", c.catalog_name}}};
  }
  if (need_catalog) throw InputError("--catalog is required");
  if (c.input.empty()) throw InputError("one of --catalog or --input is required");
  const std::string text = read_input(c.input);
  Json j = parse_json(text);
  // accept the report written by `grading show --format json` as well as a
  // bare grading object
  if (j.is_object() && j.contains("command") && j.contains("result")) j = j.at("result");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return {grading_from_json(j), names, nullptr, Json{{"input", c.input == "-" ? "stdin" : c.input}, {"digest", digest(text)}}};
}

void emit(const Common& c, const std::string& command, const Loaded* src, Json result, const std::string& text) {
  if (c.format == "json") {
    Json report{{"command", command}, {"result", std::move(result)}};
    if (src) report["source"] = src->source;
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string part_name(const Loaded& l, std::size_t i) {
  return i < l.names.size() ? l.names[i] : "part " + std::to_string(i);
}

std::string format_element(const Vector& v) {
  const auto& names = sl3().basis_names();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].to_string();
    bool negative = false;
    if (coef.find_first_of("+-", 1) == std::string::npos && coef[0] == '-') {
      negative = true;
      coef.erase(0, 1);
    } else if (coef.find_first_of("+-", 1) != std::string::npos) {
      coef = "(" + coef + ")";
    }
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    out += coef == "1" ? names[i] : coef + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw InputError("expected a nonnegative integer, got '" + tok + "'");
    }
  }
  return out;
}

// ---- grading ---------------------------------------------------------------

void grading_show(const Common& c) {
  const auto l = load(c);
  const auto& g = l.grading;
  std::ostringstream os;
  os << g.size() << " parts of sl(" << g.algebra().n() << ")";
  if (g.is_labeled()) os << ", labeled by " << g.group().description();
  os << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  " << std::left << std::setw(12) << part_name(l, i);
    if (g.is_labeled()) os << std::setw(10) << g.group().to_string(g.labels()[i]);
    os << "dim " << g.part(i).dim() << "  span{";
    for (std::size_t b = 0; b < g.part(i).basis().size(); ++b)
      os << (b ? ", " : "") << format_element(g.part(i).basis()[b]);
    os << "}\n";
    if (g.algebra().n() == 3 && g.part(i).dim() == 1)
      os << "  " << std::string(g.is_labeled() ? 22 : 12, ' ') << "= " << format_matrix(g.algebra().to_matrix(g.part(i).basis()[0])) << '\n';
  }
  emit(c, "grading show", &l, to_json(g, l.names), os.str());
}

int grading_verify(const Common& c) {
  const auto l = load(c);
  const auto cert = verify_grading(l.grading);
  const bool labeled = l.grading.is_labeled();
  const bool labels_ok = !labeled || verify_labeling(l.grading);
  Json result{{"is_grading", cert.is_grading}, {"labeling", labeled ? Json(labels_ok) : Json(nullptr)}};
  Json targets = Json::array();
  for (const auto& row : cert.target) {
    Json r = Json::array();
    for (const auto& t : row) r.push_back(t ? Json(*t) : Json(nullptr));
    targets.push_back(r);
  }
  result["targets"] = targets;
  if (cert.violation) result["violation"] = {cert.violation->first, cert.violation->second};
  const bool verified = cert.is_grading && labels_ok;
  result["verified"] = verified;
  std::ostringstream os;
  os << "grading: " << (cert.is_grading ? "yes" : "no");
  if (cert.violation)
    os << " ([" << part_name(l, cert.violation->first) << ", " << part_name(l, cert.violation->second)
       << "] meets several parts)";
  os << "\nlabeling: " << (labeled ? (labels_ok ? "valid" : "invalid") : "none") << "\nverified: "
     << (verified ? "true" : "false") << '\n';
  emit(c, "grading verify", &l, result, os.str());
  return verified ? 0 : 1;
}

int grading_label(const Common& c, const std::string& group_text) {
  const auto l = load(c);
  const AbelianGroup group([&] {
    std::vector<int> orders;
    for (auto v : parse_indices(group_text)) {
      if (v < 1 || v > 1000) throw InputError("cyclic orders must lie in 1..1000");
      orders.push_back(static_cast<int>(v));
    }
    if (orders.empty()) throw InputError("--group needs at least one cyclic order");
    return orders;
  }());
  const auto labels = search_labeling(l.grading, group);
  Json result{{"group", group.cyclic_orders()}, {"found", labels.has_value()}};
  std::ostringstream os;
  if (labels) {
    result["labels"] = *labels;
    os << "labeling over " << group.description() << ":\n";
    for (std::size_t i = 0; i < labels->size(); ++i) os << "  " << part_name(l, i) << " -> " << group.to_string((*labels)[i]) << '\n';
  } else {
    os << "no labeling over " << group.description() << '\n';
  }
  emit(c, "grading label", &l, result, os.str());
  return labels ? 0 : 1;
}

void grading_coarsen(const Common& c, const std::string& partition_text) {
  const auto l = load(c);
  std::vector<std::vector<std::size_t>> partition;
  std::stringstream ss(partition_text);
  std::string block;
  while (std::getline(ss, block, ';')) partition.push_back(parse_indices(block));
  const Grading coarse = coarsen(l.grading, partition);
  const auto cert = verify_grading(coarse);
  Json result{{"grading", to_json(coarse)}, {"is_grading", cert.is_grading},
              {"refines", is_refinement(l.grading, coarse)}};
  std::ostringstream os;
  os << coarse.size() << " parts, dims";
  for (const auto& p : coarse.parts()) os << ' ' << p.dim();
  os << "\ngrading: " << (cert.is_grading ? "yes" : "no") << '\n';
  emit(c, "grading coarsen", &l, result, os.str());
}

// ---- normalizer ------------------------------------------------------------

std::string word_name(const CatalogEntry& e, const std::vector<std::size_t>& word) {
  if (word.empty()) return "id";
  std::string out;
  for (auto i : word) {
    if (!out.empty()) out += " ";
    out += i < e.normalizer_generator_names.size() ? e.normalizer_generator_names[i]
                                                    : "g" + std::to_string(i - e.normalizer_generator_names.size());
  }
  return out;
}

int normalizer_check(const Common& c, const std::string& auto_name, const std::string& auto_file) {
  const auto l = load(c, true);
  Automorphism h = auto_file.empty() ? named_automorphism(auto_name)
                                     : automorphism_from_json(sl3(), parse_json(read_input(auto_file)));
  const bool ok = normalizes(h, l.entry->mad);
  Json result{{"automorphism", auto_file.empty() ? Json(auto_name) : to_json(h)}, {"normalizes", ok}};
  std::ostringstream os;
  os << (auto_file.empty() ? auto_name : "automorphism") << (ok ? " normalizes " : " does not normalize ")
     << l.entry->mad.name << '\n';
  if (ok) {
    const auto p = induced_permutation(h, l.grading);
    result["permutation"] = to_json(p);
    os << "induced permutation " << p.cycles() << '\n';
    for (std::size_t i = 0; i < p.degree(); ++i)
      if (p(i) != i) os << "  " << part_name(l, i) << " -> " << part_name(l, p(i)) << '\n';
  }
  emit(c, "normalizer check", &l, result, os.str());
  return ok ? 0 : 1;
}

void normalizer_quotient(const Common& c, bool inner_only) {
  const auto l = load(c, true);
  const auto& e = *l.entry;
  const auto qa = analyze_quotient(e.mad, l.grading, e.normalizer_generators);
  if (qa.discrepancy) throw Error(*qa.discrepancy);
  const PermutationGroup& group = inner_only ? qa.inner : qa.group;
  Json gens = Json::array();
  std::ostringstream os;
  os << (inner_only ? "inner subquotient" : "quotient") << " N(" << e.mad.name << ")/" << e.mad.name << ": order "
     << group.order() << ", exponent " << group.exponent() << '\n';
  const auto& names = e.normalizer_generator_names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (inner_only && std::find(e.inner_generator_names.begin(), e.inner_generator_names.end(), names[i]) ==
                          e.inner_generator_names.end())
      continue;
    const auto p = induced_permutation(e.normalizer_generators[i], l.grading);
    gens.push_back(Json{{"name", names[i]}, {"permutation", to_json(p)}});
    os << "  " << std::left << std::setw(6) << names[i] << p.cycles() << '\n';
  }
  Json elements = Json::array();
  for (const auto& q : qa.elements) {
    if (inner_only && !q.has_inner) continue;
    elements.push_back(Json{{"permutation", to_json(q.permutation)},
                            {"inner", q.has_inner},
                            {"outer", q.has_outer},
                            {"word", word_name(e, q.word)}});
  }
  Json profile = Json::array();
  os << "element orders:";
  for (auto [ord, count] : group.order_profile()) {
    profile.push_back({ord, count});
    os << ' ' << count << "x" << ord;
  }
  os << "\nfaithfulness relations checked: " << qa.relations_checked << '\n';
  Json result{{"order", group.order()},  {"exponent", group.exponent()}, {"generators", gens},
              {"elements", elements},    {"order_profile", profile},      {"relations_checked", qa.relations_checked}};
  emit(c, inner_only ? "normalizer inner" : "normalizer quotient", &l, result, os.str());
}

void normalizer_linearize(const Common& c) {
  const auto l = load(c, true);
  const auto& e = *l.entry;
  const auto inner = inner_subquotient(e.mad, l.grading, e.normalizer_generators);
  Json rows = Json::array();
  std::ostringstream os;
  std::set<Mat2Z3> image;
  for (const auto& p : inner.elements()) {
    const auto m = linearize_on_labels(p, l.grading);
    if (!m) throw Error("permutation " + p.cycles() + " is not linear on the labels");
    image.insert(*m);
    rows.push_back(Json{{"permutation", p.cycles()}, {"matrix", *m}, {"det", det_mod3(*m)}});
    os << "  " << std::left << std::setw(28) << p.cycles() << "[[" << (*m)[0][0] << ',' << (*m)[0][1] << "],["
       << (*m)[1][0] << ',' << (*m)[1][1] << "]]\n";
  }
  const auto sl2 = enumerate_sl2_z3();
  const bool full = image == std::set<Mat2Z3>(sl2.begin(), sl2.end());
  os << image.size() << " distinct matrices; equals SL(2,Z3): " << (full ? "yes" : "no") << '\n';
  emit(c, "normalizer linearize", &l, Json{{"elements", rows}, {"distinct", image.size()}, {"is_sl2_z3", full}},
       os.str());
}

// ---- contract --------------------------------------------------------------

std::uint64_t node_cap() {
  if (const char* env = std::getenv("GRADELAB_NODE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw InputError(std::string("GRADELAB_NODE_CAP is not a number: ") + env);
    }
  }
  return SolveOptions{}.node_cap;
}

void contract_equations(const Common& c) {
  const auto l = load(c);
  const auto sys = generate_equations(l.grading);
  std::ostringstream os;
  os << sys.pairs.size() << " variables, " << std::popcount(sys.active_mask) << " active, " << sys.equations.size()
     << " equations\n";
  auto mono = [&](const Monomial& m) {
    return "e" + pair_name(l.grading, m.first) + " e" + pair_name(l.grading, m.second);
  };
  for (const auto& eq : sys.equations)
    os << "  " << mono(eq.lhs) << " = " << (eq.rhs ? mono(*eq.rhs) : "0") << "    [triple " << eq.source.a << ','
       << eq.source.b << ',' << eq.source.c << ", rank " << eq.source.rank << "]\n";
  emit(c, "contract equations", &l, to_json(sys, l.grading), os.str());
}

void contract_solve(const Common& c, bool orbits, unsigned jobs) {
  const auto l = load(c, orbits);
  const auto sys = generate_equations(l.grading);
  const auto result = solve_binary(sys, {.node_cap = node_cap(), .jobs = jobs});
  Json out = to_json(result, l.grading);
  std::ostringstream os;
  os << result.solutions.size() << " solutions on the constrained variables, " << std::popcount(result.free_mask)
     << " free variables, " << result.total() << " solutions in all\n";
  if (orbits) {
    const auto& e = *l.entry;
    const auto group = quotient_group(e.mad, l.grading, e.normalizer_generators);
    const auto list = symmetry_orbits(result.solutions, group, l.grading);
    const auto full = count_orbits(result, group, l.grading);
    out["orbits"] = Json{{"group_order", group.order()},
                         {"invariant", solutions_invariant(result, group, l.grading)},
                         {"count", list.size()},
                         {"count_with_free", full},
                         {"orbits", to_json(list, l.grading)}};
    os << list.size() << " orbits under the order-" << group.order() << " quotient (free variables at 0), " << full
       << " counting free variables\n";
    for (const auto& o : list) {
      os << "  size " << std::setw(3) << o.size << "  ";
      for (std::size_t v = 0; v < sys.pairs.size(); ++v) os << ((o.representative >> v) & 1u);
      os << '\n';
    }
  }
  emit(c, "contract solve", &l, out, os.str());
}

int selfcheck(const std::string& only, unsigned jobs) {
  AcceptanceOptions options;
  options.jobs = jobs;
  for (auto id : parse_indices(only)) options.only.push_back(static_cast<int>(id));
  bool ok = true;
  run_acceptance(options, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for the fine gradings of sl(3,C)"};
  app.require_subcommand(1);

  Common common;
  int status = 0;

  auto* grading = app.add_subcommand("grading", "fine gradings and labelings")->require_subcommand(1);
  auto* show = grading->add_subcommand("show", "print the parts of a grading");
  add_common(show, common, true);
  show->callback([&] { grading_show(common); });

  auto* verify = grading->add_subcommand("verify", "check the grading axiom and any labeling");
  add_common(verify, common, true);
  verify->callback([&] { status = grading_verify(common); });

  std::string group_text;
  auto* label = grading->add_subcommand("label", "search a labeling by a finite Abelian group");
  add_common(label, common, true);
  label->add_option("--group", group_text, "cyclic orders, e.g. 3,3 or 7")->required();
  label->callback([&] { status = grading_label(common, group_text); });

  std::string partition_text;
  auto* coarse = grading->add_subcommand("coarsen", "merge parts into a coarser decomposition");
  add_common(coarse, common, true);
  coarse->add_option("--partition", partition_text, "blocks of part indices, e.g. 0,1;2;3,4,5,6")->required();
  coarse->callback([&] { grading_coarsen(common, partition_text); });

  auto* normalizer = app.add_subcommand("normalizer", "normalizers of MAD-groups")->require_subcommand(1);
  std::string auto_name = "", auto_file;
  auto* check = normalizer->add_subcommand("check", "membership in the normalizer and induced permutation");
  add_common(check, common, false);
  auto* by_name = check->add_option("--auto", auto_name, "named automorphism, e.g. AdB1 or OutI");
  check->add_option("--auto-json", auto_file, "automorphism JSON file, or -")->excludes(by_name);
  check->callback([&] {
    if (auto_name.empty() && auto_file.empty()) throw CLI::RequiredError("--auto or --auto-json");
    status = normalizer_check(common, auto_name, auto_file);
  });
  auto* quotient = normalizer->add_subcommand("quotient", "the quotient N(G)/G as a permutation group");
  add_common(quotient, common, false);
  quotient->callback([&] { normalizer_quotient(common, false); });
  auto* inner = normalizer->add_subcommand("inner", "the subquotient of inner automorphisms");
  add_common(inner, common, false);
  inner->callback([&] { normalizer_quotient(common, true); });
  auto* linearize = normalizer->add_subcommand("linearize", "inner subquotient as 2x2 matrices over Z3");
  add_common(linearize, common, false);
  linearize->callback([&] { normalizer_linearize(common); });

  auto* contract = app.add_subcommand("contract", "binary graded contractions")->require_subcommand(1);
  auto* equations = contract->add_subcommand("equations", "contraction equations with their sources");
  add_common(equations, common, true);
  equations->callback([&] { contract_equations(common); });
  bool orbits = false;
  unsigned jobs = 1;
  auto* solve = contract->add_subcommand("solve", "all 0/1 solutions");
  add_common(solve, common, true);
  solve->add_flag("--orbits", orbits, "group solutions into orbits of the normalizer quotient");
  solve->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1u, 64u));
  solve->callback([&] { contract_solve(common, orbits, jobs); });

  std::string only;
  unsigned check_jobs = 0;
  auto* self = app.add_subcommand("selfcheck", "run the golden checks");
  self->add_option("--only", only, "comma-separated criterion numbers");
  self->add_option("--jobs", check_jobs, "parallel workers (0: all cores)");
  self->callback([&] { status = selfcheck(only, check_jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return status;
}
