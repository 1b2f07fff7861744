#include "relsa/qfrob.hpp"

#include <random>

namespace relsa {

Fp BilinearForm::eval(const FpVec& u, const FpVec& v) const {
  Fp r(0, gram.modulus());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) r += u[i] * gram.at(i, j) * v[j];
  }
  return r;
}

FpVec BilinearForm::pairing_row(const FpVec& v) const {
  return gram.transpose().apply(v);
}

FormCheck form_check(const LieSuperAlgebra& alg, const BilinearForm& form) {
  const SuperSpace& s = alg.space();
  FormCheck r;
  r.skew = is_super_antisymmetric(s, form.gram);
  r.parity_ok = true;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      bool allowed = (s.parity(i) + s.parity(j)) == form.parity;
      if (!allowed && !form.gram.at(i, j).is_zero()) r.parity_ok = false;
    }
  r.closed = is_closed(alg, form.gram);
  r.nondegenerate = rank(form.gram) == s.dim();
  return r;
}

std::vector<FpVec> orthogonal_complement(const LieSuperAlgebra& alg,
                                         const BilinearForm& form,
                                         const std::vector<FpVec>& subspace) {
  const std::size_t n = alg.dim();
  if (rank(form.gram) != n)
    throw std::domain_error("orthogonal_complement: form is degenerate");
  std::vector<FpVec> rows;
  for (const FpVec& sv : subspace) rows.push_back(form.gram.apply(sv));
  if (rows.empty()) {
    std::vector<FpVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(alg.space().e(i));
    return all;
  }
  return kernel_basis(from_rows(rows, n, alg.p()));
}

bool is_isotropic(const LieSuperAlgebra& alg, const BilinearForm& form,
                  const std::vector<FpVec>& subspace) {
  (void)alg;
  for (const FpVec& u : subspace)
    for (const FpVec& v : subspace)
      if (!form.eval(u, v).is_zero()) return false;
  return true;
}

bool is_nondegenerate_subspace(const LieSuperAlgebra& alg,
                               const BilinearForm& form,
                               const std::vector<FpVec>& subspace) {
  std::vector<FpVec> perp = orthogonal_complement(alg, form, subspace);
  std::vector<FpVec> joint = subspace;
  joint.insert(joint.end(), perp.begin(), perp.end());
  std::size_t rs = span_basis(subspace, alg.dim(), alg.p()).size();
  std::size_t rj = span_basis(joint, alg.dim(), alg.p()).size();
  return rj == rs + perp.size();  // sum direct <=> intersection trivial
}

bool is_lagrangian(const LieSuperAlgebra& alg, const BilinearForm& form,
                   const std::vector<FpVec>& subspace) {
  std::vector<FpVec> perp = orthogonal_complement(alg, form, subspace);
  auto sb = span_basis(subspace, alg.dim(), alg.p());
  auto pb = span_basis(perp, alg.dim(), alg.p());
  if (sb.size() != pb.size()) return false;
  for (const FpVec& v : pb)
    if (!in_span(sb, v, alg.dim(), alg.p())) return false;
  return true;
}

namespace {

// Independent Gram slots of a parity-homogeneous super-antisymmetric form.
struct FormSlots {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  FpMat materialize(const SuperSpace& s, const FpVec& u) const {
    FpMat g(s.dim(), s.dim(), s.p());
    for (std::size_t t = 0; t < slots.size(); ++t) {
      auto [i, j] = slots[t];
      g.at(i, j) = u[t];
      if (i != j) {
        // G[j][i] = -(-1)^(|i||j|) G[i][j]
        g.at(j, i) = -(s.parity_sign(i, j) * u[t]);
      }
    }
    return g;
  }
};

FormSlots form_slots(const SuperSpace& s, Parity parity) {
  FormSlots fs;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      if ((s.parity(i) + s.parity(j)) != parity) continue;
      if (i == j && s.parity(i) == Parity::even) continue;  // forced zero
      fs.slots.push_back({i, j});
    }
  return fs;
}

}  // namespace

QfDetection detect_qf(const LieSuperAlgebra& alg, Parity parity,
                      std::size_t budget, std::uint64_t seed) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();
  QfDetection out;
  out.seed = seed;

  FormSlots fs = form_slots(s, parity);
  if (fs.slots.empty()) return out;  // no forms at all: radical is everything

  // Closure is linear in the slots; row per (triple, i<=j<=k).
  std::vector<FpVec> rows;
  std::vector<FpMat> slot_grams;
  for (std::size_t t = 0; t < fs.slots.size(); ++t) {
    FpVec u = unit_vec(fs.slots.size(), t, p);
    slot_grams.push_back(fs.materialize(s, u));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        FpVec row = zero_vec(fs.slots.size(), p);
        bool nonzero = false;
        for (std::size_t t = 0; t < fs.slots.size(); ++t) {
          Cochain2 c{slot_grams[t], parity, {}};
          Fp v = s.parity_sign(i, k) * c.phi_at(s.e(i), alg.bracket_basis(j, k));
          v += s.parity_sign(k, j) * c.phi_at(s.e(k), alg.bracket_basis(i, j));
          v += s.parity_sign(j, i) * c.phi_at(s.e(j), alg.bracket_basis(k, i));
          row[t] = v;
          nonzero = nonzero || !v.is_zero();
        }
        if (nonzero) rows.push_back(row);
      }

  std::vector<FpVec> closed =
      rows.empty() ? std::vector<FpVec>{} : kernel_basis(from_rows(rows, fs.slots.size(), p));
  if (rows.empty())
    for (std::size_t t = 0; t < fs.slots.size(); ++t)
      closed.push_back(unit_vec(fs.slots.size(), t, p));

  for (const FpVec& u : closed) out.closed_space.push_back(fs.materialize(s, u));

  // Common radical of every closed form: v with G^T v = 0 for all G.
  std::vector<FpVec> rad_rows;
  for (const FpMat& g : out.closed_space) {
    FpMat gt = g.transpose();
    for (std::size_t r = 0; r < n; ++r) rad_rows.push_back(gt.row(r));
  }
  out.common_radical =
      rad_rows.empty()
          ? [&] {
              std::vector<FpVec> all;
              for (std::size_t i = 0; i < n; ++i) all.push_back(s.e(i));
              return all;
            }()
          : kernel_basis(from_rows(rad_rows, n, p));
  if (!out.common_radical.empty()) return out;  // certified nonexistence

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (std::size_t t = 0; t < budget; ++t) {
    FpVec u = zero_vec(closed.size(), p);
    for (Fp& c : u) c = Fp(dist(rng), p);
    FpVec combo = zero_vec(fs.slots.size(), p);
    for (std::size_t k = 0; k < closed.size(); ++k)
      combo = add(combo, scale(u[k], closed[k]));
    FpMat g = fs.materialize(s, combo);
    if (rank(g) == n) {
      out.found = BilinearForm{g, parity};
      return out;
    }
  }
  out.inconclusive = true;
  return out;
}

GradedMap adjoint(const LieSuperAlgebra& alg, const BilinearForm& form,
                  const GradedMap& d) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  if (rank(form.gram) != n)
    throw std::domain_error("adjoint: form is degenerate");
  // omega(D(e_i), e_j) = (-1)^(|e_i||D|) omega(e_i, D*(e_j)) as matrices:
  // D^T W = S W D*  with S = diag((-1)^(|e_i||D|)).
  FpMat lhs = d.mat.transpose() * form.gram;
  if (d.parity == Parity::odd) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s.parity(i) != Parity::odd) continue;
      for (std::size_t j = 0; j < n; ++j) lhs.at(i, j) = -lhs.at(i, j);
    }
  }
  GradedMap dst{solve_matrix(form.gram, lhs), d.parity};
  if (!is_graded(s, dst))
    throw std::logic_error("adjoint: result is not parity-homogeneous");
  return dst;
}

std::vector<Fp> sigma_all(const LieSuperAlgebra& alg, const BilinearForm& form,
                          const GradedMap& d, const FpVec& a, const FpVec& b) {
  const SuperSpace& s = alg.space();
  const std::int64_t p = s.p();
  if (s.parity_of(a) == VecParity::odd || s.parity_of(b) == VecParity::odd ||
      s.parity_of(a) == VecParity::mixed || s.parity_of(b) == VecParity::mixed)
    throw std::invalid_argument("sigma_all: arguments must be even");

  GradedMap ds = adjoint(alg, form, d);
  FpMat dsum = d.mat + ds.mat;
  FpVec ua = dsum.apply(a), ub = dsum.apply(b);

  std::vector<FpVec> coeffs = ad_operator_poly(alg, a, b, p - 2);
  // omega((D+D*)(mu a + b), X(mu)): degree d term.
  std::vector<Fp> poly(std::size_t(p), Fp(0, p));
  BilinearForm w = form;
  for (std::size_t deg = 0; deg < std::size_t(p); ++deg) {
    Fp v(0, p);
    if (deg < coeffs.size()) v += w.eval(ub, coeffs[deg]);
    if (deg >= 1 && deg - 1 < coeffs.size()) v += w.eval(ua, coeffs[deg - 1]);
    poly[deg] = v;
  }
  if (!poly[std::size_t(p - 1)].is_zero())
    throw std::logic_error("sigma_all: unexpected top coefficient");
  std::vector<Fp> sigma;
  for (std::int64_t i = 1; i <= p - 1; ++i)
    sigma.push_back(poly[std::size_t(i - 1)] / Fp(i, p));
  return sigma;
}

namespace {

std::map<std::size_t, Fp> complete_p_values(
    const SuperSpace& s, const std::map<std::size_t, Fp>& p_values) {
  std::map<std::size_t, Fp> out;
  for (std::size_t j : s.even_indices()) {
    auto it = p_values.find(j);
    out[j] = it == p_values.end() ? Fp(0, s.p()) : it->second;
  }
  return out;
}

}  // namespace

Cochain2 build_CP(const LieSuperAlgebra& alg, const PMap& pm,
                  const BilinearForm& form, const GradedMap& d,
                  const std::map<std::size_t, Fp>& p_values) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  GradedMap ds = adjoint(alg, form, d);
  FpMat dsum = d.mat + ds.mat;

  FpMat c(n, n, s.p());
  for (std::size_t i = 0; i < n; ++i) {
    FpVec u = dsum.col(i);
    for (std::size_t j = 0; j < n; ++j)
      c.at(i, j) = form.eval(u, s.e(j));
  }
  Cochain2 pair{c, d.parity + form.parity, complete_p_values(s, p_values)};
  if (!is_super_antisymmetric(s, c))
    throw std::logic_error("build_CP: C is not super-antisymmetric");

  if (!is_closed(alg, c))
    throw std::domain_error("build_CP: C is not closed");
  auto even = s.even_indices();
  for (std::size_t a : even)
    for (std::size_t b : even)
      if (!ind2(alg, pm, pair, s.e(a), s.e(b)).is_zero())
        throw std::domain_error("build_CP: Ind^2(C,P) nonzero at (" +
                                s.name(a) + "," + s.name(b) + ")");
  return pair;
}

const char* to_string(ExtKind k) {
  switch (k) {
    case ExtKind::ortho_even: return "ortho_even";
    case ExtKind::ortho_odd: return "ortho_odd";
    case ExtKind::peri_even: return "peri_even";
    case ExtKind::peri_odd: return "peri_odd";
  }
  return "?";
}

std::optional<ExtKind> ext_kind_from_string(const std::string& s) {
  if (s == "ortho_even") return ExtKind::ortho_even;
  if (s == "ortho_odd") return ExtKind::ortho_odd;
  if (s == "peri_even") return ExtKind::peri_even;
  if (s == "peri_odd") return ExtKind::peri_odd;
  return std::nullopt;
}

Obstruction build_obstruction(const LieSuperAlgebra& alg, const PMap& pm,
                              const BilinearForm& form, const GradedMap& d,
                              ExtKind kind, const Fp& lambda,
                              const std::map<std::size_t, Fp>& p_values) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();

  bool even_kind = kind == ExtKind::ortho_even || kind == ExtKind::peri_even;
  if ((d.parity == Parity::even) != even_kind)
    throw std::invalid_argument(
        "build_obstruction: derivation parity does not match kind");
  bool ortho = kind == ExtKind::ortho_even || kind == ExtKind::ortho_odd;
  if ((form.parity == Parity::even) != ortho)
    throw std::invalid_argument(
        "build_obstruction: form parity does not match kind");

  GradedMap ds = adjoint(alg, form, d);
  FpMat m(n, n, p);
  if (even_kind) {
    // D.D + 2 D*.D + D*.D* + lambda (D + D*)
    m = d.mat * d.mat + (ds.mat * d.mat) * Fp(2, p) + ds.mat * ds.mat +
        (d.mat + ds.mat) * lambda;
  } else {
    // D.D - D*.D*
    m = d.mat * d.mat - ds.mat * ds.mat;
  }

  FpMat omega(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    FpVec u = m.col(i);
    for (std::size_t j = 0; j < n; ++j) omega.at(i, j) = form.eval(u, s.e(j));
  }
  if (!is_super_antisymmetric(s, omega))
    throw std::logic_error("build_obstruction: Omega not super-antisymmetric");

  std::map<std::size_t, Fp> second;
  auto pv = complete_p_values(s, p_values);
  FpMat dsum = d.mat + ds.mat;
  for (std::size_t k : s.even_indices()) {
    Fp v(0, p);
    if (kind == ExtKind::ortho_even || kind == ExtKind::ortho_odd) {
      FpVec ek = s.e(k);
      FpVec w = ad_power(alg, ek, p - 2).apply(d.mat.apply(ek));
      v = form.eval(dsum.apply(ek), w);
      if (kind == ExtKind::ortho_even) v += lambda * pv[k];
    }
    second[k] = v;  // periplectic kinds: second component 0
  }

  Obstruction out{Cochain2{omega, form.parity, second}, std::nullopt,
                  std::nullopt};
  out.witness = is_restricted_coboundary(alg, pm, out.pair);
  if (out.witness)
    out.z = representing_vector(alg, form, *out.witness);
  return out;
}

std::optional<Cochain1> frobenius_exact(const LieSuperAlgebra& alg,
                                        const BilinearForm& form) {
  const std::size_t n = alg.dim();
  std::vector<FpVec> rows;
  FpVec rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      rows.push_back(alg.bracket_basis(i, j));
      rhs.push_back(form.gram.at(i, j));
    }
  SolveResult sol = solve(from_rows(rows, n, alg.p()), rhs);
  if (!sol.particular) return std::nullopt;
  return Cochain1{*sol.particular, form.parity};
}

bool dim_bound_check(const LieSuperAlgebra& alg, const BilinearForm& form) {
  (void)form;
  std::size_t z = center(alg).size();
  std::size_t der = derived_ideal(alg).size();
  return z <= alg.dim() - der;
}

std::map<std::size_t, Fp> P_from_Z(const LieSuperAlgebra& alg, const PMap& pm,
                                   const BilinearForm& form, const FpVec& z) {
  std::map<std::size_t, Fp> out;
  for (std::size_t j : alg.space().even_indices())
    out[j] = form.eval(z, pmap_eval(alg, pm, alg.space().e(j)));
  return out;
}

FpVec representing_vector(const LieSuperAlgebra& alg, const BilinearForm& form,
                          const Cochain1& chi) {
  // omega(Z, e_j) = chi_j  <=>  G^T Z = chi.
  (void)alg;
  FpMat gt = form.gram.transpose();
  SolveResult sol = solve(gt, chi.functional);
  if (!sol.particular)
    throw std::domain_error("representing_vector: no solution (degenerate form?)");
  return *sol.particular;
}

}  // namespace relsa
