#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradelab/grading.hpp"

namespace gradelab {

/// 3x3 matrices used throughout the sl(3) catalog: "I", "P", "Q", "B1", "B2",
/// "H", "S" (unnormalized Sylvester matrix (omega^{jk})), "D".
Matrix named_matrix(std::string_view name);

/// "AdX" or "OutX" for any named matrix X, e.g. "AdB1", "OutI".
Automorphism named_automorphism(std::string_view name);

struct CatalogEntry {
  std::string name;  // g1 .. g4
  MadGroupSpec mad;
  /// Fine grading with parts in the published order, labeled.
  Grading grading;
  std::vector<std::string> part_names;
  /// Spanning matrices of each part exactly as listed in the published displays.
  std::vector<std::vector<Matrix>> reference_spans;
  std::vector<Automorphism> normalizer_generators;
  std::vector<std::string> normalizer_generator_names;
  std::vector<std::string> inner_generator_names;
  std::size_t expected_quotient_order;
};

/// Throws InputError for an unknown name.
const CatalogEntry& catalog(std::string_view name);
const std::vector<std::string>& catalog_names();

}  // namespace gradelab
