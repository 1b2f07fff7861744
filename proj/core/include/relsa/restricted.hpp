#pragma once

#include "relsa/liesuper.hpp"

namespace relsa {

/// [p|2p]-structure: images of the even basis vectors under the p-map.
/// Odd elements are handled through squaring, a -> (a^2)^[p] with
/// a^2 = [a,a]/2, so no odd images are stored.
class PMap {
 public:
  PMap() = default;
  explicit PMap(std::map<std::size_t, FpVec> images)
      : images_(std::move(images)) {}

  const std::map<std::size_t, FpVec>& images() const { return images_; }
  const FpVec& image(std::size_t j) const;
  bool has(std::size_t j) const { return images_.count(j) != 0; }
  void set(std::size_t j, FpVec v) { images_[j] = std::move(v); }

 private:
  std::map<std::size_t, FpVec> images_;
};

/// Coefficients in t of (ad_{t a + b})^k (a), degrees 0..k.
std::vector<FpVec> ad_operator_poly(const LieSuperAlgebra& alg, const FpVec& a,
                                    const FpVec& b, std::int64_t k);

/// s_i(a, b) for i = 1..p-1, extracted from the polynomial identity
/// (ad_{t a + b})^{p-1}(a) = sum_i i s_i(a,b) t^{i-1}. Inputs must be even.
std::vector<FpVec> s_i_all(const LieSuperAlgebra& alg, const FpVec& a,
                           const FpVec& b);

FpVec s_i_sum(const LieSuperAlgebra& alg, const FpVec& a, const FpVec& b);

/// Evaluate the p-map on a homogeneous element. Even elements are expanded
/// one basis term at a time in ascending index order with the additivity
/// rule and its s_i corrections; odd elements go through (a^2)^[p].
FpVec pmap_eval(const LieSuperAlgebra& alg, const PMap& pm, const FpVec& a);

/// Jacobson compatibility: ad(e_j^[p]) = (ad e_j)^p for every even basis j.
AlgebraReport verify_restricted(const LieSuperAlgebra& alg, const PMap& pm);

struct JacobsonResult {
  std::optional<PMap> pmap;
  /// Per even basis index, the dimension of the affine solution set for the
  /// image (nonzero when the center makes the image non-unique).
  std::map<std::size_t, std::size_t> ambiguity;
};

/// Solve ad_f = (ad e_j)^p for every even basis vector. Non-unique images
/// are canonicalized by reducing modulo the even center.
JacobsonResult jacobson_complete(const LieSuperAlgebra& alg);

/// D(a^[p]) = (ad_a)^{p-1}(D(a)) on the even basis plus a seeded sample of
/// non-basis even elements.
bool is_restricted_derivation(const LieSuperAlgebra& alg, const PMap& pm,
                              const GradedMap& d, std::uint64_t seed = 2024,
                              std::size_t samples = 64);

struct PProperty {
  Fp gamma;
  FpVec a0;
  /// Basis of the homogeneous solution space, as (gamma, a0) pairs.
  std::vector<std::pair<Fp, FpVec>> alternatives;
};

/// Solve D^p = gamma D + ad_{a0} with D(a0) = 0 and a0 even.
std::optional<PProperty> p_property_solve(const LieSuperAlgebra& alg,
                                          const PMap& pm, const GradedMap& d);

}  // namespace relsa
