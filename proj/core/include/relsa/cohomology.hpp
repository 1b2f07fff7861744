#pragma once

#include "relsa/restricted.hpp"

namespace relsa {

/// 1-cochain with trivial coefficients: a parity-homogeneous covector.
struct Cochain1 {
  FpVec functional;
  Parity parity;

  Fp operator()(const FpVec& v) const;
};

/// Restricted 2-cochain (phi, theta) with trivial coefficients. phi is a
/// super-antisymmetric bilinear form given by its Gram matrix; theta is
/// stored by its values on the even basis and extended canonically (in
/// ascending basis order) through the *-property addition law.
struct Cochain2 {
  FpMat phi;
  Parity parity = Parity::even;
  std::map<std::size_t, Fp> theta;

  Fp phi_at(const FpVec& u, const FpVec& v) const;
  Fp theta_at(std::size_t j) const;
};

bool is_super_antisymmetric(const SuperSpace& space, const FpMat& phi);

/// (d chi)(a, b) = chi([a, b]).
FpMat d1(const LieSuperAlgebra& alg, const Cochain1& chi);

/// Cyclic 2-cocycle identity on all basis triples.
bool is_closed(const LieSuperAlgebra& alg, const FpMat& phi);

/// Ind^1(chi): x -> chi(x^[p]) on the even basis (trivial coefficients).
std::map<std::size_t, Fp> ind1(const LieSuperAlgebra& alg, const PMap& pm,
                               const Cochain1& chi);

/// Ind^2 with trivial coefficients: phi(a, b^[p]) - phi(w, b) where w is a
/// iteratively right-bracketed with b, p-1 times. Inputs must be even.
Fp ind2(const LieSuperAlgebra& alg, const PMap& pm, const Cochain2& c,
        const FpVec& a, const FpVec& b);

/// The trivial-coefficients correction term in the *-property addition law:
/// sum over bracket words x_1 = a, x_2 = b, x_3..x_p in {a, b} of
/// phi([[..[x_1,x_2],x_3],..,x_{p-1}], x_p) / #{i : x_i = a}.
Fp star_correction(const LieSuperAlgebra& alg, const FpMat& phi,
                   const FpVec& a, const FpVec& b);

/// Canonical evaluation of theta on an arbitrary even element.
Fp theta_eval(const LieSuperAlgebra& alg, const Cochain2& c, const FpVec& v);

bool is_restricted_cocycle(const LieSuperAlgebra& alg, const PMap& pm,
                           const Cochain2& c, std::uint64_t seed = 2024,
                           std::size_t samples = 32);

/// Witness chi with chi([e_i,e_j]) = phi(e_i,e_j) and chi(e_k^[p]) = theta_k,
/// or absent when the pair is not a restricted coboundary.
std::optional<Cochain1> is_restricted_coboundary(const LieSuperAlgebra& alg,
                                                 const PMap& pm,
                                                 const Cochain2& c);

}  // namespace relsa
