#include "relsa/cohomology.hpp"

#include <random>

namespace relsa {

Fp Cochain1::operator()(const FpVec& v) const {
  if (v.size() != functional.size())
    throw std::invalid_argument("Cochain1: dimension mismatch");
  Fp r(0, v.empty() ? 3 : v[0].modulus());
  for (std::size_t i = 0; i < v.size(); ++i) r += functional[i] * v[i];
  return r;
}

Fp Cochain2::phi_at(const FpVec& u, const FpVec& v) const {
  Fp r(0, phi.modulus());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) r += u[i] * phi.at(i, j) * v[j];
  }
  return r;
}

Fp Cochain2::theta_at(std::size_t j) const {
  auto it = theta.find(j);
  if (it == theta.end())
    throw std::invalid_argument("Cochain2: no theta value at index " +
                                std::to_string(j));
  return it->second;
}

bool is_super_antisymmetric(const SuperSpace& space, const FpMat& phi) {
  for (std::size_t k = 0; k < space.dim(); ++k)
    for (std::size_t l = 0; l < space.dim(); ++l)
      if (phi.at(k, l) != -(space.parity_sign(k, l) * phi.at(l, k)))
        return false;
  return true;
}

FpMat d1(const LieSuperAlgebra& alg, const Cochain1& chi) {
  const std::size_t n = alg.dim();
  FpMat m(n, n, alg.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = chi(alg.bracket_basis(i, j));
  return m;
}

bool is_closed(const LieSuperAlgebra& alg, const FpMat& phi) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  Cochain2 c{phi, Parity::even, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Fp sum = s.parity_sign(i, k) * c.phi_at(s.e(i), alg.bracket_basis(j, k));
        sum += s.parity_sign(k, j) * c.phi_at(s.e(k), alg.bracket_basis(i, j));
        sum += s.parity_sign(j, i) * c.phi_at(s.e(j), alg.bracket_basis(k, i));
        if (!sum.is_zero()) return false;
      }
  return true;
}

std::map<std::size_t, Fp> ind1(const LieSuperAlgebra& alg, const PMap& pm,
                               const Cochain1& chi) {
  std::map<std::size_t, Fp> r;
  for (std::size_t j : alg.space().even_indices())
    r[j] = chi(pmap_eval(alg, pm, alg.space().e(j)));
  return r;
}

Fp ind2(const LieSuperAlgebra& alg, const PMap& pm, const Cochain2& c,
        const FpVec& a, const FpVec& b) {
  const SuperSpace& s = alg.space();
  if (s.parity_of(a) == VecParity::mixed || s.parity_of(b) == VecParity::mixed)
    throw std::invalid_argument("ind2: arguments must be even");
  FpVec bp = pmap_eval(alg, pm, b);
  FpVec w = a;
  for (std::int64_t t = 0; t < alg.p() - 1; ++t) w = alg.bracket(w, b);
  return c.phi_at(a, bp) - c.phi_at(w, b);
}

Fp star_correction(const LieSuperAlgebra& alg, const FpMat& phi,
                   const FpVec& a, const FpVec& b) {
  const std::int64_t p = alg.p();
  Cochain2 c{phi, Parity::even, {}};
  Fp total(0, p);
  const std::size_t free_slots = std::size_t(p - 2);  // x_3 .. x_p
  for (std::size_t mask = 0; mask < (std::size_t(1) << free_slots); ++mask) {
    std::vector<const FpVec*> word;
    word.push_back(&a);
    word.push_back(&b);
    std::int64_t count_a = 1;
    for (std::size_t t = 0; t < free_slots; ++t) {
      bool pick_a = (mask >> t) & 1;
      word.push_back(pick_a ? &a : &b);
      if (pick_a) ++count_a;
    }
    FpVec v = alg.bracket(*word[0], *word[1]);
    for (std::size_t t = 2; t + 1 < word.size(); ++t)
      v = alg.bracket(v, *word[t]);
    total += c.phi_at(v, *word.back()) / Fp(count_a, p);
  }
  return total;
}

Fp theta_eval(const LieSuperAlgebra& alg, const Cochain2& c, const FpVec& v) {
  const SuperSpace& s = alg.space();
  VecParity vp = s.parity_of(v);
  if (vp == VecParity::zero) return Fp(0, s.p());
  if (vp != VecParity::even)
    throw std::invalid_argument("theta_eval: element must be even");
  FpVec acc = s.zero();
  Fp val(0, s.p());
  bool first = true;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    FpVec term = scale(v[j], s.e(j));
    Fp term_val = v[j] * c.theta_at(j);  // theta(c e) = c^p theta(e) = c theta(e)
    if (first) {
      acc = term;
      val = term_val;
      first = false;
      continue;
    }
    val = val + term_val + star_correction(alg, c.phi, acc, term);
    acc = add(acc, term);
  }
  return val;
}

namespace {

FpVec random_even_vec(const SuperSpace& s, std::mt19937_64& rng) {
  FpVec v = s.zero();
  std::uniform_int_distribution<std::int64_t> dist(0, s.p() - 1);
  for (std::size_t i : s.even_indices()) v[i] = Fp(dist(rng), s.p());
  return v;
}

}  // namespace

bool is_restricted_cocycle(const LieSuperAlgebra& alg, const PMap& pm,
                           const Cochain2& c, std::uint64_t seed,
                           std::size_t samples) {
  const SuperSpace& s = alg.space();
  if (!is_closed(alg, c.phi)) return false;
  auto even = s.even_indices();
  for (std::size_t a : even)
    for (std::size_t b : even)
      if (!ind2(alg, pm, c, s.e(a), s.e(b)).is_zero()) return false;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    FpVec a = random_even_vec(s, rng), b = random_even_vec(s, rng);
    if (!ind2(alg, pm, c, a, b).is_zero()) return false;
  }
  return true;
}

std::optional<Cochain1> is_restricted_coboundary(const LieSuperAlgebra& alg,
                                                 const PMap& pm,
                                                 const Cochain2& c) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();

  std::vector<FpVec> rows;
  FpVec rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      rows.push_back(alg.bracket_basis(i, j));
      rhs.push_back(c.phi.at(i, j));
    }
  for (std::size_t k : s.even_indices()) {
    rows.push_back(pmap_eval(alg, pm, s.e(k)));
    rhs.push_back(c.theta_at(k));
  }
  SolveResult sol = solve(from_rows(rows, n, p), rhs);
  if (!sol.particular) return std::nullopt;
  return Cochain1{*sol.particular, c.parity};
}

}  // namespace relsa
