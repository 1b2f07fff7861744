#pragma once

#include "relsa/catalog.hpp"

namespace relsa {

/// Parse failure with a field-path diagnostic; the CLI maps it to exit 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything one algebra description file carries.
struct AlgebraBundle {
  LieSuperAlgebra alg;
  std::optional<PMap> pmap;
  std::vector<BilinearForm> forms;
  std::vector<GradedMap> derivations;
};

AlgebraBundle parse_algebra(const std::string& json_text);
std::string serialize_algebra(const AlgebraBundle& b);

/// The recipe's derivation is either an index into the bundle's derivation
/// list or an inline matrix.
ExtensionRecipe parse_recipe(const std::string& json_text,
                             const AlgebraBundle& context);
std::string serialize_recipe(const SuperSpace& space,
                             const ExtensionRecipe& r);

AlgebraBundle bundle_from_entry(const ExampleEntry& e);

/// Exact wedge-term presentation of a super-antisymmetric Gram matrix
/// (inverse of gram_from_wedge under the library's convention).
std::vector<WedgeTerm> wedge_terms_from_gram(const SuperSpace& space,
                                             const FpMat& gram);

}  // namespace relsa
