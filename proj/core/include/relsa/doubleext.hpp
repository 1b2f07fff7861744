#pragma once

#include "relsa/qfrob.hpp"

namespace relsa {

/// All data of one symplectic double extension. `z` is the representing
/// vector of the obstruction coboundary: Z_Omega for the even-derivation
/// kinds, a_0 for the odd-derivation kinds (where the a0 field is ignored).
/// Scalars that a kind does not use are ignored by that kind.
struct ExtensionRecipe {
  ExtKind kind = ExtKind::ortho_even;
  char case_tag = 0;  // 'a' | 'b' | 'c', ortho_even only
  GradedMap derivation;
  Fp lambda;
  FpVec z;
  Fp gamma, delta, sigma, lambda_tilde, mu;
  FpVec a0, b0;
  std::map<std::size_t, Fp> p_values;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& msg) {
    ok = false;
    failures.push_back(msg);
  }
};

/// Check every hypothesis of the theorem the recipe invokes, including the
/// scalar identities of the selected case. Nothing is assumed.
ValidationReport validate_recipe(const LieSuperAlgebra& alg, const PMap& pm,
                                 const BilinearForm& form,
                                 const ExtensionRecipe& r);

struct Extension {
  LieSuperAlgebra alg;
  PMap pmap;
  BilinearForm form;
  std::size_t x_index;      // adjoined span of the ideal K
  std::size_t xstar_index;  // adjoined dual generator (x* or e)
};

/// Build g = K + a + K* with the bracket, form and p-map of the recipe's
/// kind. The output is re-verified (algebra axioms, Jacobson compatibility,
/// form axioms); failure there is an internal error.
Extension extend(const LieSuperAlgebra& alg, const PMap& pm,
                 const BilinearForm& form, const ExtensionRecipe& r);

struct ReductionCandidate {
  FpVec x;
  ExtKind kind;
};

/// Vectors satisfying one of the converse theorems' hypotheses, tagged by
/// the applicable kind.
std::vector<ReductionCandidate> find_candidates(const LieSuperAlgebra& g,
                                                const BilinearForm& form,
                                                const PMap& pm);

struct Reduction {
  LieSuperAlgebra alg;
  PMap pmap;
  BilinearForm form;
  ExtensionRecipe recipe;
  /// Basis of the reduced algebra inside g, plus the (x, x*) pair used.
  std::vector<FpVec> a_basis;
  FpVec x, xstar;
  ValidationReport recipe_report;
};

/// Converse construction: split g = K + a + K*, restrict the form, extract
/// the derivation, the representing vector and every recipe scalar. The
/// reduced p-map and algebra are re-verified rather than trusted.
Reduction reduce(const LieSuperAlgebra& g, const BilinearForm& form,
                 const PMap& pm, const FpVec& x, ExtKind kind);

}  // namespace relsa
