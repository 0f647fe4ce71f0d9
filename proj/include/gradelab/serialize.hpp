#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gradelab/contraction.hpp"

namespace gradelab {

using Json = nlohmann::json;

/// {"order":N,"terms":[[num,den,exp],...]}; integers beyond 64 bits are
/// written as decimal strings.
Json to_json(const Cyclo& x);
Cyclo cyclo_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"rows":r,"cols":c,"entries":[...]} in row-major order.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"ambient":d,"basis":[vector,...]}
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {"kind":"inner"|"outer","rep":Matrix}
Json to_json(const Automorphism& f);
Automorphism automorphism_from_json(const SlAlgebra& algebra, const Json& j);

/// Shared instance of sl(n), kept alive for the life of the program.
const SlAlgebra& sl_algebra(std::size_t n);

/// {"n":3,"parts":[Subspace,...]} plus "group" and "labels" when labeled and
/// "names" when given.
Json to_json(const Grading& g, const std::vector<std::string>& part_names = {});
/// Throws InputError on malformed input, including a labeling of the wrong
/// shape; whether the labeling is valid is left to verify_labeling.
Grading grading_from_json(const Json& j);

Json to_json(const Permutation& p);

/// Equations with the basis triple and rank each one comes from.
Json to_json(const ContractionSystem& sys, const Grading& g);

/// Base solutions as pair -> bit maps, the free variables, and the total.
Json to_json(const SolveResult& result, const Grading& g);
Json to_json(const std::vector<Orbit>& orbits, const Grading& g);

/// Parse JSON text, mapping parse failures to InputError.
Json parse_json(const std::string& text);

}  // namespace gradelab
