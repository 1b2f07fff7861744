#include "relsa/restricted.hpp"

#include <random>

namespace relsa {

const FpVec& PMap::image(std::size_t j) const {
  auto it = images_.find(j);
  if (it == images_.end())
    throw std::invalid_argument("PMap: no image for basis index " +
                                std::to_string(j));
  return it->second;
}

static void require_even(const SuperSpace& s, const FpVec& v,
                         const char* what) {
  VecParity vp = s.parity_of(v);
  if (vp != VecParity::even && vp != VecParity::zero)
    throw std::invalid_argument(std::string(what) + ": element must be even");
}

std::vector<FpVec> ad_operator_poly(const LieSuperAlgebra& alg, const FpVec& a,
                                    const FpVec& b, std::int64_t k) {
  const SuperSpace& s = alg.space();
  std::vector<FpVec> coeffs(std::size_t(k) + 1, s.zero());
  coeffs[0] = a;
  for (std::int64_t it = 0; it < k; ++it) {
    std::vector<FpVec> next(std::size_t(k) + 1, s.zero());
    for (std::size_t d = 0; d <= std::size_t(k); ++d) {
      FpVec t = alg.bracket(b, coeffs[d]);
      if (d > 0) t = add(t, alg.bracket(a, coeffs[d - 1]));
      next[d] = t;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<FpVec> s_i_all(const LieSuperAlgebra& alg, const FpVec& a,
                           const FpVec& b) {
  const SuperSpace& s = alg.space();
  require_even(s, a, "s_i_all");
  require_even(s, b, "s_i_all");
  const std::int64_t p = alg.p();

  std::vector<FpVec> coeffs = ad_operator_poly(alg, a, b, p - 1);
  if (!is_zero(coeffs[std::size_t(p - 1)]))
    throw std::logic_error("s_i_all: top coefficient (ad_a)^{p-1}(a) nonzero");

  std::vector<FpVec> si;
  for (std::int64_t i = 1; i <= p - 1; ++i)
    si.push_back(scale(Fp(i, p).inverse(), coeffs[std::size_t(i - 1)]));
  return si;
}

FpVec s_i_sum(const LieSuperAlgebra& alg, const FpVec& a, const FpVec& b) {
  FpVec r = alg.space().zero();
  for (const FpVec& v : s_i_all(alg, a, b)) r = add(r, v);
  return r;
}

FpVec pmap_eval(const LieSuperAlgebra& alg, const PMap& pm, const FpVec& a) {
  const SuperSpace& s = alg.space();
  VecParity vp = s.parity_of(a);
  if (vp == VecParity::zero) return s.zero();
  if (vp == VecParity::mixed)
    throw std::invalid_argument("pmap_eval: mixed-parity element");
  if (vp == VecParity::odd) {
    // a^[2p] = (a^2)^[p] with a^2 = [a,a]/2.
    FpVec sq = scale(Fp(2, s.p()).inverse(), alg.bracket(a, a));
    return pmap_eval(alg, pm, sq);
  }

  // Even: fold terms in ascending index order; scalars obey c^p = c over F_p.
  FpVec acc = s.zero();
  FpVec img = s.zero();
  bool first = true;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    FpVec term = scale(a[j], s.e(j));
    FpVec term_img = scale(a[j], pm.image(j));
    if (first) {
      acc = term;
      img = term_img;
      first = false;
      continue;
    }
    img = add(add(img, term_img), s_i_sum(alg, acc, term));
    acc = add(acc, term);
  }
  return img;
}

AlgebraReport verify_restricted(const LieSuperAlgebra& alg, const PMap& pm) {
  AlgebraReport rep;
  const SuperSpace& s = alg.space();
  for (std::size_t j : s.even_indices()) {
    if (!pm.has(j)) {
      rep.ok = false;
      rep.violations.push_back("no p-map image for " + s.name(j));
      continue;
    }
    const FpVec& f = pm.image(j);
    if (!s.homogeneous(f, Parity::even)) {
      rep.ok = false;
      rep.violations.push_back("image of " + s.name(j) + " is not even");
      continue;
    }
    FpMat lhs = alg.ad(f);
    FpMat rhs = ad_power(alg, s.e(j), s.p());
    if (lhs != rhs) {
      rep.ok = false;
      rep.violations.push_back("ad(" + s.name(j) + "^[p]) != (ad " +
                               s.name(j) + ")^p");
    }
  }
  return rep;
}

namespace {

// Reduce v modulo the row-echelon span basis (pivot coordinates zeroed).
FpVec reduce_mod_span(FpVec v, const std::vector<FpVec>& echelon) {
  for (const FpVec& z : echelon) {
    std::size_t piv = 0;
    while (piv < z.size() && z[piv].is_zero()) ++piv;
    if (piv == z.size()) continue;
    v = sub(v, scale(v[piv] / z[piv], z));
  }
  return v;
}

}  // namespace

JacobsonResult jacobson_complete(const LieSuperAlgebra& alg) {
  const SuperSpace& s = alg.space();
  const std::int64_t p = s.p();
  const std::size_t n = s.dim();
  auto even = s.even_indices();

  // Even center in even coordinates, echelonized for canonical reduction.
  std::vector<FpVec> center_even;
  for (const FpVec& z : center(alg)) {
    if (s.parity_of(z) == VecParity::even || s.parity_of(z) == VecParity::zero) {
      FpVec ze = zero_vec(even.size(), p);
      for (std::size_t t = 0; t < even.size(); ++t) ze[t] = z[even[t]];
      center_even.push_back(ze);
    }
  }
  center_even = span_basis(center_even, even.size(), p);

  // Coefficient matrix of f -> ad_f restricted to even f, shared by all j.
  std::vector<FpVec> rows;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      FpVec row = zero_vec(even.size(), p);
      for (std::size_t t = 0; t < even.size(); ++t)
        row[t] = alg.bracket_basis(even[t], l)[m];
      rows.push_back(row);
    }
  FpMat A = from_rows(rows, even.size(), p);

  JacobsonResult result;
  PMap pm;
  for (std::size_t j : even) {
    FpMat target = ad_power(alg, s.e(j), p);
    FpVec rhs = zero_vec(n * n, p);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        rhs[l * n + m] = target.at(m, l);
    SolveResult sol = solve(A, rhs);
    if (!sol.particular) return {};  // no [p]-structure exists
    FpVec fe = reduce_mod_span(*sol.particular, center_even);
    FpVec f = s.zero();
    for (std::size_t t = 0; t < even.size(); ++t) f[even[t]] = fe[t];
    pm.set(j, f);
    result.ambiguity[j] = sol.kernel_basis.size();
  }
  result.pmap = pm;
  return result;
}

namespace {

FpVec random_even_vec(const SuperSpace& s, std::mt19937_64& rng) {
  FpVec v = s.zero();
  std::uniform_int_distribution<std::int64_t> dist(0, s.p() - 1);
  for (std::size_t i : s.even_indices()) v[i] = Fp(dist(rng), s.p());
  return v;
}

}  // namespace

bool is_restricted_derivation(const LieSuperAlgebra& alg, const PMap& pm,
                              const GradedMap& d, std::uint64_t seed,
                              std::size_t samples) {
  const SuperSpace& s = alg.space();
  auto check = [&](const FpVec& a) {
    FpVec lhs = d(pmap_eval(alg, pm, a));
    FpVec rhs = ad_power(alg, a, s.p() - 1).apply(d(a));
    return equal(lhs, rhs);
  };
  for (std::size_t j : s.even_indices())
    if (!check(s.e(j))) return false;
  // The defect's additivity is not established in the super case, so back
  // the basis check with a deterministic sample.
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t)
    if (!check(random_even_vec(s, rng))) return false;
  return true;
}

std::optional<PProperty> p_property_solve(const LieSuperAlgebra& alg,
                                          const PMap& pm, const GradedMap& d) {
  const SuperSpace& s = alg.space();
  const std::int64_t p = s.p();
  const std::size_t n = s.dim();
  if (d.parity != Parity::even)
    throw std::invalid_argument("p_property_solve: derivation must be even");
  if (!is_restricted_derivation(alg, pm, d))
    throw std::invalid_argument(
        "p_property_solve: map is not a restricted derivation");

  auto even = s.even_indices();
  const std::size_t nu = 1 + even.size();  // gamma, then a0 coordinates
  FpMat dp = d.mat.pow(p);

  std::vector<FpVec> rows;
  FpVec rhs;
  // D^p(e_l) = gamma D(e_l) + [a0, e_l] for every basis l.
  for (std::size_t l = 0; l < n; ++l) {
    FpVec dcol = d.mat.col(l);
    FpVec dpcol = dp.col(l);
    for (std::size_t m = 0; m < n; ++m) {
      FpVec row = zero_vec(nu, p);
      row[0] = dcol[m];
      for (std::size_t t = 0; t < even.size(); ++t)
        row[1 + t] = alg.bracket_basis(even[t], l)[m];
      rows.push_back(row);
      rhs.push_back(dpcol[m]);
    }
  }
  // D(a0) = 0.
  for (std::size_t m = 0; m < n; ++m) {
    FpVec row = zero_vec(nu, p);
    for (std::size_t t = 0; t < even.size(); ++t)
      row[1 + t] = d.mat.at(m, even[t]);
    rows.push_back(row);
    rhs.push_back(Fp(0, p));
  }

  SolveResult sol = solve(from_rows(rows, nu, p), rhs);
  if (!sol.particular) return std::nullopt;

  auto unpack = [&](const FpVec& u) {
    FpVec a0 = s.zero();
    for (std::size_t t = 0; t < even.size(); ++t) a0[even[t]] = u[1 + t];
    return std::make_pair(u[0], a0);
  };
  auto [gamma, a0] = unpack(*sol.particular);
  PProperty res{gamma, a0, {}};
  for (const FpVec& k : sol.kernel_basis) res.alternatives.push_back(unpack(k));
  return res;
}

}  // namespace relsa
