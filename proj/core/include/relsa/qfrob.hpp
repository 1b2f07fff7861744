#pragma once

#include "relsa/cohomology.hpp"

namespace relsa {

/// Parity-tagged Gram matrix of a bilinear form. Even candidates are
/// orthosymplectic, odd candidates periplectic.
struct BilinearForm {
  FpMat gram;
  Parity parity;

  Fp eval(const FpVec& u, const FpVec& v) const;
  /// Row functional omega(v, .) as a covector.
  FpVec pairing_row(const FpVec& v) const;
};

struct FormCheck {
  bool skew = false;
  bool parity_ok = false;
  bool closed = false;
  bool nondegenerate = false;
  bool all() const { return skew && parity_ok && closed && nondegenerate; }
};

FormCheck form_check(const LieSuperAlgebra& alg, const BilinearForm& form);

std::vector<FpVec> orthogonal_complement(const LieSuperAlgebra& alg,
                                         const BilinearForm& form,
                                         const std::vector<FpVec>& subspace);
bool is_isotropic(const LieSuperAlgebra& alg, const BilinearForm& form,
                  const std::vector<FpVec>& subspace);
bool is_nondegenerate_subspace(const LieSuperAlgebra& alg,
                               const BilinearForm& form,
                               const std::vector<FpVec>& subspace);
bool is_lagrangian(const LieSuperAlgebra& alg, const BilinearForm& form,
                   const std::vector<FpVec>& subspace);

/// Search for a quasi-Frobenius form of the given parity. The space of
/// closed parity-homogeneous forms is computed exactly; a nonzero common
/// radical certifies nonexistence. Otherwise seeded sampling looks for a
/// nondegenerate point; failure without a certificate is inconclusive.
struct QfDetection {
  std::optional<BilinearForm> found;
  std::vector<FpVec> common_radical;
  std::vector<FpMat> closed_space;
  bool inconclusive = false;
  std::uint64_t seed = 0;
};

QfDetection detect_qf(const LieSuperAlgebra& alg, Parity parity,
                      std::size_t budget = 64, std::uint64_t seed = 2024);

/// The adjoint D* with omega(D(a), b) = (-1)^(|a||D|) omega(a, D*(b)).
GradedMap adjoint(const LieSuperAlgebra& alg, const BilinearForm& form,
                  const GradedMap& d);

/// sigma_i(a, b) extracted from
/// omega((D+D*)(mu a + b), (ad_{mu a + b})^{p-2}(a)) = sum_i i sigma_i mu^{i-1}.
std::vector<Fp> sigma_all(const LieSuperAlgebra& alg, const BilinearForm& form,
                          const GradedMap& d, const FpVec& a, const FpVec& b);

/// The 2-cocycle C(a,b) = omega((D+D*)(a), b) paired with the map P given
/// by its even-basis values (canonically *-extended). Throws when the pair
/// fails the restricted cocycle test, naming a violating pair.
Cochain2 build_CP(const LieSuperAlgebra& alg, const PMap& pm,
                  const BilinearForm& form, const GradedMap& d,
                  const std::map<std::size_t, Fp>& p_values = {});

enum class ExtKind { ortho_even, ortho_odd, peri_even, peri_odd };
const char* to_string(ExtKind k);
std::optional<ExtKind> ext_kind_from_string(const std::string& s);

/// Obstruction pair of the requested extension kind: (Omega, T) for
/// ortho_even, (Omega, Delta) for ortho_odd, (Omega, 0) for the periplectic
/// kinds. When it is a restricted coboundary the witness and its
/// representing vector (Z_Omega, resp. a_0) are attached.
struct Obstruction {
  Cochain2 pair;
  std::optional<Cochain1> witness;
  std::optional<FpVec> z;
};

Obstruction build_obstruction(const LieSuperAlgebra& alg, const PMap& pm,
                              const BilinearForm& form, const GradedMap& d,
                              ExtKind kind, const Fp& lambda,
                              const std::map<std::size_t, Fp>& p_values = {});

/// Witness f with f([a,b]) = omega(a,b), i.e. omega exact (Frobenius).
std::optional<Cochain1> frobenius_exact(const LieSuperAlgebra& alg,
                                        const BilinearForm& form);

/// dim z(a) <= dim(a / [a,a]), a necessary condition for quasi-Frobenius.
bool dim_bound_check(const LieSuperAlgebra& alg, const BilinearForm& form);

/// P values induced by a representing vector: a -> omega(Z, a^[p]).
std::map<std::size_t, Fp> P_from_Z(const LieSuperAlgebra& alg, const PMap& pm,
                                   const BilinearForm& form, const FpVec& z);

/// Unique Z with omega(Z, .) = chi (form nondegenerate).
FpVec representing_vector(const LieSuperAlgebra& alg, const BilinearForm& form,
                          const Cochain1& chi);

}  // namespace relsa
