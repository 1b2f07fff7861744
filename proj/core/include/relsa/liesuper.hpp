#pragma once

#include <map>

#include "relsa/superspace.hpp"

namespace relsa {

/// A parity-homogeneous linear map, stored as its matrix in the basis.
/// Column j is the image of e_j.
struct GradedMap {
  FpMat mat;
  Parity parity = Parity::even;

  FpVec operator()(const FpVec& v) const { return mat.apply(v); }
};

bool is_graded(const SuperSpace& space, const GradedMap& d);
GradedMap rank_one(const SuperSpace& space, std::size_t out, std::size_t in,
                   const Fp& coeff);  // coeff * e_out (x) e_in^*

/// Finite-dimensional Lie superalgebra given by structure constants.
/// The tensor is stored only for index pairs i <= j; entries with i > j are
/// derived via [e_j, e_i] = -(-1)^(|e_i||e_j|) [e_i, e_j]. The odd-odd
/// diagonal [e_i, e_i] is stored explicitly.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra(SuperSpace space,
                  std::map<std::pair<std::size_t, std::size_t>, FpVec> table);

  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::int64_t p() const { return space_.p(); }

  FpVec bracket_basis(std::size_t i, std::size_t j) const;
  FpVec bracket(const FpVec& a, const FpVec& b) const;

  /// Matrix of ad_a : v -> [a, v].
  FpMat ad(const FpVec& a) const;

  const std::map<std::pair<std::size_t, std::size_t>, FpVec>& table() const {
    return table_;
  }

 private:
  SuperSpace space_;
  std::map<std::pair<std::size_t, std::size_t>, FpVec> table_;
};

struct AlgebraReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks graded antisymmetry (even diagonal zero, parity homogeneity of the
/// stored tensor), graded Jacobi on all basis triples, and for p = 3 the
/// polarized cubic axiom [a,[a,a]] = 0 on odd elements.
AlgebraReport verify_algebra(const LieSuperAlgebra& alg);

FpMat ad_power(const LieSuperAlgebra& alg, const FpVec& a, std::int64_t k);

std::vector<FpVec> center(const LieSuperAlgebra& alg);
std::vector<FpVec> derived_ideal(const LieSuperAlgebra& alg);
std::vector<FpVec> centralizer(const LieSuperAlgebra& alg,
                               const std::vector<FpVec>& ideal);

bool is_derivation(const LieSuperAlgebra& alg, const GradedMap& d);

/// Basis of the space of derivations of the given parity, as the solution
/// space of the graded Leibniz identity.
std::vector<GradedMap> derivation_space(const LieSuperAlgebra& alg,
                                        Parity parity);

}  // namespace relsa
