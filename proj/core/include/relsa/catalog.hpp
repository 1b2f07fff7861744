#pragma once

#include "relsa/doubleext.hpp"

namespace relsa {

/// Parameters of the catalog builders; unused fields are ignored by
/// entries that do not take them.
struct ExampleParams {
  std::int64_t p = 5;
  std::int64_t q = 2;                    // D7 weight, q not in {0, 1}
  std::int64_t m = 3;                    // K2m chain length
  std::int64_t u = 1;                    // D7: Z = u e2
  std::int64_t lambda = 0;               // recipe lambda
  std::int64_t s1 = 0, s2 = 1;           // K2m p-map coefficients
  std::int64_t u1 = 0, v1 = 0;           // 2A2A: e1^[p] = u1 e1 + v1 e2
  std::int64_t u2 = 0, v2 = 0;           // 2A2A: e2^[p] = u2 e1 + v2 e2
  std::int64_t l1 = 0, l2 = 0;           // K2m_even recipe: a0, b0 in x1
  std::int64_t b01 = 0, b02 = 0;         // 2A2A recipe b0
  std::int64_t mu = 0;                   // peri_odd x^[p] coefficient
};

struct ExampleEntry {
  std::string name;
  LieSuperAlgebra alg;
  std::optional<PMap> pmap;
  std::vector<BilinearForm> forms;
  std::vector<GradedMap> derivations;
  std::vector<ExtensionRecipe> recipes;
};

std::vector<std::string> example_names();

/// Build one catalog algebra with its forms, derivations and recipes.
/// Throws std::invalid_argument on bad parameters (q in {0,1}, wrong m
/// parity, p not an odd prime, ...).
ExampleEntry load_example(const std::string& name, const ExampleParams& prm);

struct ClaimReport {
  struct Claim {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Claim> claims;
  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

/// Run every assertion attached to the entry and report pass/fail per claim.
ClaimReport verify_claims(const std::string& name, const ExampleParams& prm);

/// Structural equality helpers used by the round-trip suites.
bool same_algebra(const LieSuperAlgebra& a, const LieSuperAlgebra& b);
bool same_pmap(const SuperSpace& s, const PMap& a, const PMap& b);

}  // namespace relsa
