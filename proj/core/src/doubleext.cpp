#include "relsa/doubleext.hpp"

#include <sstream>

namespace relsa {

namespace {

// (|x|, |x*|) for each kind.
std::pair<Parity, Parity> kind_parities(ExtKind k) {
  switch (k) {
    case ExtKind::ortho_even: return {Parity::even, Parity::even};
    case ExtKind::ortho_odd: return {Parity::odd, Parity::odd};
    case ExtKind::peri_even: return {Parity::odd, Parity::even};
    case ExtKind::peri_odd: return {Parity::even, Parity::odd};
  }
  throw std::logic_error("kind_parities");
}

Parity form_parity_of(ExtKind k) {
  return (k == ExtKind::ortho_even || k == ExtKind::ortho_odd) ? Parity::even
                                                               : Parity::odd;
}

FpVec or_zero(const FpVec& v, std::size_t n, std::int64_t p) {
  if (v.empty()) return zero_vec(n, p);
  if (v.size() != n)
    throw std::invalid_argument("recipe vector has wrong dimension");
  return v;
}

FpMat c_gram(const LieSuperAlgebra& alg, const BilinearForm& form,
             const FpMat& dsum) {
  const std::size_t n = alg.dim();
  FpMat c(n, n, alg.p());
  for (std::size_t i = 0; i < n; ++i) {
    FpVec u = dsum.col(i);
    for (std::size_t j = 0; j < n; ++j)
      c.at(i, j) = form.eval(u, alg.space().e(j));
  }
  return c;
}

bool is_central(const LieSuperAlgebra& alg, const FpVec& v) {
  return alg.ad(v).is_zero();
}

// sum_{i=1..p-1} (-lambda)^{p-1-i} (D*)^i (z)
FpVec adjoint_tail_sum(const LieSuperAlgebra& alg, const FpMat& dstar,
                       const Fp& lambda, const FpVec& z) {
  const std::int64_t p = alg.p();
  FpVec w = z, sum = alg.space().zero();
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    w = dstar.apply(w);
    sum = add(sum, scale((-lambda).pow(p - 1 - i), w));
  }
  return sum;
}

// sum_{i=0..p-1} (-lambda)^{p-1-i} (D*)^i (z)
FpVec adjoint_full_sum(const LieSuperAlgebra& alg, const FpMat& dstar,
                       const Fp& lambda, const FpVec& z) {
  FpVec sum = scale((-lambda).pow(alg.p() - 1), z);
  return add(sum, adjoint_tail_sum(alg, dstar, lambda, z));
}

}  // namespace

ValidationReport validate_recipe(const LieSuperAlgebra& alg, const PMap& pm,
                                 const BilinearForm& form,
                                 const ExtensionRecipe& r) {
  ValidationReport rep;
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();
  const std::string tag =
      std::string("[") + to_string(r.kind) +
      (r.case_tag ? std::string(":") + r.case_tag : std::string()) + "] ";

  if (form.parity != form_parity_of(r.kind)) {
    rep.fail(tag + "form parity does not match kind");
    return rep;
  }
  if (!form_check(alg, form).all()) {
    rep.fail(tag + "ambient form is not quasi-Frobenius");
    return rep;
  }
  bool even_kind =
      r.kind == ExtKind::ortho_even || r.kind == ExtKind::peri_even;
  if ((r.derivation.parity == Parity::even) != even_kind) {
    rep.fail(tag + "derivation parity does not match kind");
    return rep;
  }
  if (!verify_restricted(alg, pm).ok) {
    rep.fail(tag + "ambient p-map fails Jacobson compatibility");
    return rep;
  }
  if (!is_derivation(alg, r.derivation)) {
    rep.fail(tag + "map is not a derivation");
    return rep;
  }
  if (!is_restricted_derivation(alg, pm, r.derivation))
    rep.fail(tag + "derivation is not restricted");

  FpVec z = or_zero(r.z, n, p);
  FpVec a0 = even_kind ? or_zero(r.a0, n, p) : z;
  FpVec b0 = or_zero(r.b0, n, p);
  for (auto [v, name] : {std::pair<const FpVec*, const char*>{&z, "Z"},
                         {&a0, "a0"},
                         {&b0, "b0"}})
    if (!s.homogeneous(*v, Parity::even))
      rep.fail(tag + std::string(name) + " must be even");
  if (!rep.ok) return rep;

  GradedMap dstar = adjoint(alg, form, r.derivation);
  const FpMat& D = r.derivation.mat;
  const FpMat& Ds = dstar.mat;

  auto check_pair = [&](const FpVec& rep_vec, const FpMat& omega,
                        const std::map<std::size_t, Fp>& second,
                        const char* what) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (form.eval(rep_vec, alg.bracket_basis(i, j)) != omega.at(i, j)) {
          rep.fail(tag + std::string(what) +
                   ": representing vector mismatch at (" + s.name(i) + "," +
                   s.name(j) + ")");
          return;
        }
    for (std::size_t k : s.even_indices())
      if (form.eval(rep_vec, pmap_eval(alg, pm, s.e(k))) != second.at(k)) {
        rep.fail(tag + std::string(what) +
                 ": second component mismatch at " + s.name(k));
        return;
      }
  };

  // Obstruction pair of this kind, with the recipe's lambda and P.
  Obstruction obs;
  try {
    obs = build_obstruction(alg, pm, form, r.derivation, r.kind, r.lambda,
                            r.p_values);
  } catch (const std::exception& e) {
    rep.fail(tag + e.what());
    return rep;
  }

  if (r.kind == ExtKind::ortho_even) {
    // (C, P) must be a restricted 2-cocycle.
    Cochain2 cp{c_gram(alg, form, D + Ds), form.parity, obs.pair.theta};
    cp.theta.clear();
    for (std::size_t k : s.even_indices()) {
      auto it = r.p_values.find(k);
      cp.theta[k] = it == r.p_values.end() ? Fp(0, p) : it->second;
    }
    if (!is_restricted_cocycle(alg, pm, cp))
      rep.fail(tag + "(C,P) is not a restricted 2-cocycle");

    check_pair(z, obs.pair.phi, obs.pair.theta, "(Omega,T)");

    if (!(D.pow(p) == D * r.gamma + alg.ad(a0)))
      rep.fail(tag + "p-property D^p = gamma D + ad_{a0} fails");
    if (!is_zero(D.apply(a0))) rep.fail(tag + "D(a0) != 0");

    if (r.case_tag == 'a') {
      if (r.lambda.is_zero()) rep.fail(tag + "case (a) needs lambda != 0");
      else {
        Fp li = r.lambda.inverse();
        if (r.gamma != r.lambda.pow(p - 1)) rep.fail(tag + "gamma != lambda^(p-1)");
        if (!r.delta.is_zero()) rep.fail(tag + "delta != 0");
        if (r.lambda_tilde != li * form.eval(z, a0))
          rep.fail(tag + "lambda~ != lambda^{-1} omega(Z,a0)");
        if (r.sigma != li * form.eval(z, b0))
          rep.fail(tag + "sigma != lambda^{-1} omega(Z,b0)");
        if (!is_zero(D.apply(b0))) rep.fail(tag + "D(b0) != 0");
        if (!is_zero(Ds.apply(b0))) rep.fail(tag + "D*(b0) != 0");
        if (!is_central(alg, b0)) rep.fail(tag + "b0 is not central");
        if (!equal(Ds.apply(a0), adjoint_tail_sum(alg, Ds, r.lambda, z)))
          rep.fail(tag + "D*(a0) != sum (-1)^(p-1-i) lambda^(p-1-i) D*^i(Z)");
      }
    } else if (r.case_tag == 'b') {
      if (!r.lambda.is_zero()) rep.fail(tag + "case (b) needs lambda = 0");
      if (!r.delta.is_zero()) rep.fail(tag + "case (b) needs delta = 0");
      if (!form.eval(z, a0).is_zero()) rep.fail(tag + "omega(Z,a0) != 0");
      if (!form.eval(z, b0).is_zero()) rep.fail(tag + "omega(Z,b0) != 0");
      if (!is_zero(D.apply(b0))) rep.fail(tag + "D(b0) != 0");
      if (!is_zero(Ds.apply(b0))) rep.fail(tag + "D*(b0) != 0");
      if (!is_central(alg, b0)) rep.fail(tag + "b0 is not central");
      if (!equal(add(Ds.apply(a0), scale(r.gamma, z)),
                 Ds.pow(p - 1).apply(z)))
        rep.fail(tag + "D*(a0) + gamma Z != D*^(p-1)(Z)");
    } else if (r.case_tag == 'c') {
      if (!r.lambda.is_zero()) rep.fail(tag + "case (c) needs lambda = 0");
      if (r.delta.is_zero()) rep.fail(tag + "case (c) needs delta != 0");
      else {
        if (D != alg.ad(b0) * (-r.delta.inverse()))
          rep.fail(tag + "D != -delta^{-1} ad_{b0}");
        if (!form.eval(z, a0).is_zero()) rep.fail(tag + "omega(Z,a0) != 0");
        if (!form.eval(z, b0).is_zero()) rep.fail(tag + "omega(Z,b0) != 0");
        if (!is_zero(D.apply(b0))) rep.fail(tag + "D(b0) != 0");
        if (!equal(Ds.apply(b0), scale(-r.delta, z)))
          rep.fail(tag + "D*(b0) != -delta Z");
        if (!equal(add(Ds.apply(a0), scale(r.gamma, z)),
                   Ds.pow(p - 1).apply(z)))
          rep.fail(tag + "D*(a0) + gamma Z != D*^(p-1)(Z)");
      }
    } else {
      rep.fail(tag + "ortho_even recipe needs case tag a, b or c");
    }
  } else if (r.kind == ExtKind::ortho_odd) {
    if (!(D * D == alg.ad(a0))) rep.fail(tag + "D^2 != ad_{a0}");
    if (!is_zero(D.apply(a0))) rep.fail(tag + "D(a0) != 0");
    check_pair(a0, obs.pair.phi, obs.pair.theta, "(Omega,Delta)");
  } else if (r.kind == ExtKind::peri_even) {
    if (!(D.pow(p) == D * r.gamma + alg.ad(a0)))
      rep.fail(tag + "p-property D^p = gamma D + ad_{a0} fails");
    if (!is_zero(D.apply(a0))) rep.fail(tag + "D(a0) != 0");
    check_pair(z, obs.pair.phi, obs.pair.theta, "(Omega,0)");
    if (r.lambda * r.gamma != r.lambda.pow(p))
      rep.fail(tag + "lambda gamma != lambda^p");
    if (!form.eval(z, a0).is_zero()) rep.fail(tag + "omega(Z,a0) != 0");
    if (!equal(adjoint_full_sum(alg, Ds, r.lambda, z),
               add(Ds.apply(a0), scale(r.gamma, z))))
      rep.fail(tag + "sum (-lambda)^j D*^i(Z) != D*(a0) + gamma Z");
  } else {  // peri_odd
    if (!(D * D == alg.ad(a0))) rep.fail(tag + "D^2 != ad_{a0}");
    if (!is_zero(D.apply(a0))) rep.fail(tag + "D(a0) != 0");
    if (!is_zero(Ds.apply(a0))) rep.fail(tag + "D*(a0) != 0");
    check_pair(a0, obs.pair.phi, obs.pair.theta, "(Omega,0)");
    Cochain2 cp{c_gram(alg, form, D + Ds), form.parity, {}};
    for (std::size_t k : s.even_indices()) {
      auto it = r.p_values.find(k);
      cp.theta[k] = it == r.p_values.end() ? Fp(0, p) : it->second;
    }
    if (!is_restricted_cocycle(alg, pm, cp))
      rep.fail(tag + "(C,P) is not a restricted 2-cocycle");
    if (!is_central(alg, b0)) rep.fail(tag + "b0 is not central");
    if (!is_zero(D.apply(b0))) rep.fail(tag + "D(b0) != 0");
    if (!is_zero(Ds.apply(b0))) rep.fail(tag + "D*(b0) != 0");
    if (!form.eval(a0, b0).is_zero()) rep.fail(tag + "omega(a0,b0) != 0");
  }
  return rep;
}

Extension extend(const LieSuperAlgebra& alg, const PMap& pm,
                 const BilinearForm& form, const ExtensionRecipe& r) {
  ValidationReport rep = validate_recipe(alg, pm, form, r);
  if (!rep.ok) {
    std::ostringstream os;
    os << "extend: recipe validation failed:";
    for (const auto& f : rep.failures) os << "\n  " << f;
    throw std::domain_error(os.str());
  }

  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();
  auto [px, pxs] = kind_parities(r.kind);
  bool even_kind =
      r.kind == ExtKind::ortho_even || r.kind == ExtKind::peri_even;

  FpVec z = or_zero(r.z, n, p);
  FpVec a0 = even_kind ? or_zero(r.a0, n, p) : z;
  FpVec b0 = or_zero(r.b0, n, p);

  std::string xn = "x", xsn = "x*";
  for (std::size_t i = 0; i < n; ++i) {
    if (s.name(i) == xn) xn = "_" + xn;
    if (s.name(i) == xsn) xsn = "_" + xsn;
  }
  std::vector<BasisVector> basis;
  basis.push_back({xn, px});
  for (const auto& b : s.basis()) basis.push_back(b);
  basis.push_back({xsn, pxs});
  SuperSpace gs(basis, p);

  const std::size_t ng = n + 2;
  const std::size_t xi = 0, xsi = n + 1;
  auto embed = [&](const FpVec& v) {
    FpVec w = zero_vec(ng, p);
    for (std::size_t i = 0; i < n; ++i) w[i + 1] = v[i];
    return w;
  };

  GradedMap dstar = adjoint(alg, form, r.derivation);
  FpMat dsum = r.derivation.mat + dstar.mat;
  FpMat cg = c_gram(alg, form, dsum);

  std::map<std::pair<std::size_t, std::size_t>, FpVec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FpVec v = embed(alg.bracket_basis(i, j));
      v[xi] += cg.at(i, j);
      if (!is_zero(v)) table[{i + 1, j + 1}] = v;
    }

  // [x*, a] (or [e, a]); stored as [a, x*] with the antisymmetry sign.
  for (std::size_t i = 0; i < n; ++i) {
    FpVec da = r.derivation.mat.col(i);
    Fp xc(0, p);
    switch (r.kind) {
      case ExtKind::ortho_even:
      case ExtKind::peri_even:
        xc = form.eval(z, s.e(i));
        break;
      case ExtKind::ortho_odd:
        xc = -form.eval(s.e(i), a0);
        break;
      case ExtKind::peri_odd:
        xc = form.eval(a0, s.e(i));
        break;
    }
    FpVec v = embed(da);
    v[xi] += xc;
    if (is_zero(v)) continue;
    bool both_odd = s.parity(i) == Parity::odd && pxs == Parity::odd;
    table[{i + 1, xsi}] = scale(Fp(both_odd ? 1 : -1, p), v);
  }

  if (even_kind && !r.lambda.is_zero()) {
    FpVec v = zero_vec(ng, p);
    v[xi] = r.lambda;  // [x, x*] = lambda x
    table[{xi, xsi}] = v;
  }
  if (!even_kind && !is_zero(a0))
    table[{xsi, xsi}] = scale(Fp(2, p), embed(a0));  // [x*, x*] = 2 a0

  LieSuperAlgebra g(gs, table);

  FpMat gram(ng, ng, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.at(i + 1, j + 1) = form.gram.at(i, j);
  gram.at(xsi, xi) = Fp(1, p);
  gram.at(xi, xsi) = -(gs.parity_sign(xi, xsi) * Fp(1, p));
  BilinearForm gform{gram, form.parity};

  PMap gpm;
  bool carries_P =
      r.kind == ExtKind::ortho_even || r.kind == ExtKind::peri_odd;
  for (std::size_t k : s.even_indices()) {
    FpVec img = embed(pm.image(k));
    if (carries_P) {
      auto it = r.p_values.find(k);
      if (it != r.p_values.end()) img[xi] += it->second;
    }
    gpm.set(k + 1, img);
  }
  if (r.kind == ExtKind::ortho_even) {
    FpVec xp = embed(b0);
    xp[xi] += r.sigma;
    xp[xsi] += r.delta;
    gpm.set(xi, xp);
    FpVec xsp = embed(a0);
    xsp[xsi] += r.gamma;
    xsp[xi] += r.lambda_tilde;
    gpm.set(xsi, xsp);
  } else if (r.kind == ExtKind::peri_even) {
    FpVec ep = embed(a0);
    ep[xsi] += r.gamma;
    gpm.set(xsi, ep);
  } else if (r.kind == ExtKind::peri_odd) {
    FpVec xp = embed(b0);
    xp[xi] += r.mu;
    gpm.set(xi, xp);
  }

  AlgebraReport ar = verify_algebra(g);
  if (!ar.ok)
    throw std::logic_error("extend: output fails verify_algebra: " +
                           ar.violations.front());
  AlgebraReport rr = verify_restricted(g, gpm);
  if (!rr.ok)
    throw std::logic_error("extend: output fails verify_restricted: " +
                           rr.violations.front());
  if (!form_check(g, gform).all())
    throw std::logic_error("extend: output form fails form_check");

  return {g, gpm, gform, xi, xsi};
}

namespace {

// Vectors of the span supported entirely on one parity block.
std::vector<FpVec> parity_slice(const SuperSpace& s,
                                const std::vector<FpVec>& span, Parity pr) {
  if (span.empty()) return {};
  const std::int64_t p = s.p();
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.parity(i) == pr) continue;
    FpVec row = zero_vec(span.size(), p);
    for (std::size_t t = 0; t < span.size(); ++t) row[t] = span[t][i];
    rows.push_back(row);
  }
  std::vector<FpVec> combos =
      rows.empty() ? std::vector<FpVec>{} : kernel_basis(from_rows(rows, span.size(), p));
  if (rows.empty())
    for (std::size_t t = 0; t < span.size(); ++t)
      combos.push_back(unit_vec(span.size(), t, p));
  std::vector<FpVec> out;
  for (const FpVec& c : combos) {
    FpVec v = zero_vec(s.dim(), p);
    for (std::size_t t = 0; t < span.size(); ++t)
      v = add(v, scale(c[t], span[t]));
    if (!is_zero(v)) out.push_back(v);
  }
  return span_basis(out, s.dim(), p);
}

bool spans_ideal_line(const LieSuperAlgebra& g, const FpVec& x) {
  std::vector<FpVec> line{x};
  for (std::size_t k = 0; k < g.dim(); ++k) {
    FpVec w = g.bracket(x, g.space().e(k));
    if (!in_span(line, w, g.dim(), g.p())) return false;
  }
  return true;
}

bool is_p_ideal(const LieSuperAlgebra& g, const PMap& pm,
                const std::vector<FpVec>& span) {
  for (const FpVec& w : span)
    for (std::size_t k = 0; k < g.dim(); ++k)
      if (!in_span(span, g.bracket(w, g.space().e(k)), g.dim(), g.p()))
        return false;
  for (const FpVec& w : parity_slice(g.space(), span, Parity::even))
    if (!in_span(span, pmap_eval(g, pm, w), g.dim(), g.p())) return false;
  return true;
}

void push_unique(std::vector<ReductionCandidate>& out, const FpVec& x,
                 ExtKind kind, std::size_t dim, std::int64_t p) {
  if (is_zero(x)) return;
  // scale-normalize: leading coefficient 1
  FpVec v = x;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      v = scale(v[i].inverse(), v);
      break;
    }
  (void)dim;
  (void)p;
  for (const auto& c : out)
    if (c.kind == kind && equal(c.x, v)) return;
  out.push_back({v, kind});
}

}  // namespace

std::vector<ReductionCandidate> find_candidates(const LieSuperAlgebra& g,
                                                const BilinearForm& form,
                                                const PMap& pm) {
  std::vector<ReductionCandidate> out;
  const SuperSpace& s = g.space();
  std::vector<FpVec> der = derived_ideal(g);
  std::vector<FpVec> derp = orthogonal_complement(g, form, der);
  std::vector<FpVec> zc = center(g);

  auto consider = [&](const std::vector<FpVec>& pool, ExtKind kind) {
    for (const FpVec& x : pool) {
      if (is_zero(x)) continue;
      bool ortho_line =
          kind == ExtKind::ortho_even || kind == ExtKind::peri_even;
      if (ortho_line) {
        if (!spans_ideal_line(g, x)) continue;
        if (!is_p_ideal(g, pm, orthogonal_complement(g, form, {x}))) continue;
      } else if (kind == ExtKind::ortho_odd) {
        if (!is_central(g, x)) continue;
        if (!form.eval(x, x).is_zero()) continue;
      } else {
        if (!is_central(g, x)) continue;
      }
      push_unique(out, x, kind, g.dim(), g.p());
    }
  };

  if (form.parity == Parity::even) {
    std::vector<FpVec> pool = parity_slice(s, derp, Parity::even);
    // include plain basis vectors of the slice's span
    for (std::size_t i : s.even_indices())
      if (in_span(pool, s.e(i), s.dim(), s.p())) pool.push_back(s.e(i));
    consider(pool, ExtKind::ortho_even);

    std::vector<FpVec> zodd = parity_slice(s, zc, Parity::odd);
    for (std::size_t i : s.odd_indices())
      if (in_span(zodd, s.e(i), s.dim(), s.p())) zodd.push_back(s.e(i));
    consider(zodd, ExtKind::ortho_odd);
  } else {
    std::vector<FpVec> pool = parity_slice(s, derp, Parity::odd);
    for (std::size_t i : s.odd_indices())
      if (in_span(pool, s.e(i), s.dim(), s.p())) pool.push_back(s.e(i));
    consider(pool, ExtKind::peri_even);

    std::vector<FpVec> zeven = parity_slice(s, zc, Parity::even);
    for (std::size_t i : s.even_indices())
      if (in_span(zeven, s.e(i), s.dim(), s.p())) zeven.push_back(s.e(i));
    consider(zeven, ExtKind::peri_odd);
  }
  return out;
}

namespace {

bool is_unit_vector(const FpVec& v, std::size_t& where) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      ++hits;
      where = i;
      if (v[i].value() != 1) return false;
    }
  return hits == 1;
}

}  // namespace

Reduction reduce(const LieSuperAlgebra& g, const BilinearForm& form,
                 const PMap& pm, const FpVec& x, ExtKind kind) {
  const SuperSpace& s = g.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();
  auto [px, pxs] = kind_parities(kind);
  bool even_kind = kind == ExtKind::ortho_even || kind == ExtKind::peri_even;

  if (form.parity != form_parity_of(kind))
    throw std::domain_error("reduce: form parity does not match kind");
  if (is_zero(x)) throw std::domain_error("reduce: x must be nonzero");
  if (!s.homogeneous(x, px))
    throw std::domain_error(std::string("reduce: x must be ") +
                            to_string(px) + " for kind " + to_string(kind));
  if (even_kind) {
    for (const FpVec& w : derived_ideal(g))
      if (!form.eval(x, w).is_zero())
        throw std::domain_error("reduce: x is not orthogonal to [g,g]");
    if (!spans_ideal_line(g, x))
      throw std::domain_error("reduce: span{x} is not an ideal");
    if (!is_p_ideal(g, pm, orthogonal_complement(g, form, {x})))
      throw std::domain_error("reduce: span{x}-perp is not a p-ideal");
  } else {
    if (!is_central(g, x)) throw std::domain_error("reduce: x is not central");
    if (kind == ExtKind::ortho_odd && !form.eval(x, x).is_zero())
      throw std::domain_error(
          "reduce: omega(x,x) = 0 is necessary for the odd orthosymplectic "
          "reduction and fails here");
  }

  // x* (or e) of the dual parity with omega(x*, x) = 1; prefer a basis
  // vector, lowest index first.
  FpVec xstar = s.zero();
  bool found = false;
  for (std::size_t k = 0; k < n && !found; ++k) {
    if (s.parity(k) != pxs) continue;
    Fp c = form.eval(s.e(k), x);
    if (!c.is_zero()) {
      xstar = scale(c.inverse(), s.e(k));
      found = true;
    }
  }
  if (!found) {
    // general solve: omega(v, x) = 1 with v supported on the pxs block
    FpVec row = form.gram.apply(x);
    std::vector<FpVec> rows{row};
    FpVec rhs{Fp(1, p)};
    for (std::size_t i = 0; i < n; ++i)
      if (s.parity(i) != pxs) {
        rows.push_back(unit_vec(n, i, p));
        rhs.push_back(Fp(0, p));
      }
    SolveResult sr = solve(from_rows(rows, n, p), rhs);
    if (!sr.particular)
      throw std::domain_error("reduce: no dual vector with omega(x*,x)=1");
    xstar = *sr.particular;
    found = true;
  }
  if (kind == ExtKind::ortho_odd) {
    Fp c = form.eval(xstar, xstar);
    if (!c.is_zero())
      xstar = sub(xstar, scale(c / Fp(2, p), x));  // force omega(x*,x*) = 0
  }
  if (!form.eval(xstar, xstar).is_zero())
    throw std::domain_error("reduce: could not normalize omega(x*,x*) = 0");

  // a := (K + K*)-perp, homogeneous echelon basis.
  std::vector<FpVec> aperp = orthogonal_complement(g, form, {x, xstar});
  bool all_homog = true;
  for (const FpVec& v : aperp) {
    VecParity vp = s.parity_of(v);
    if (vp == VecParity::mixed) all_homog = false;
  }
  std::vector<FpVec> abasis;
  if (all_homog) {
    abasis = aperp;
  } else {
    std::vector<FpVec> parts;
    for (const FpVec& v : aperp) {
      FpVec ev = s.zero(), ov = s.zero();
      for (std::size_t i = 0; i < n; ++i)
        (s.parity(i) == Parity::even ? ev[i] : ov[i]) = v[i];
      if (!is_zero(ev)) parts.push_back(ev);
      if (!is_zero(ov)) parts.push_back(ov);
    }
    abasis = span_basis(parts, n, p);
    for (const FpVec& v : abasis)
      if (s.parity_of(v) == VecParity::mixed)
        throw std::domain_error("reduce: (K+K*)-perp is not graded");
  }
  const std::size_t na = abasis.size();
  if (na != n - 2)
    throw std::domain_error("reduce: (K+K*)-perp has wrong dimension");

  // Change of basis g -> (x, a_1.., x*).
  std::vector<FpVec> cols;
  cols.push_back(x);
  for (const FpVec& v : abasis) cols.push_back(v);
  cols.push_back(xstar);
  FpMat B = from_cols(cols, n, p);
  auto coords = [&](const FpVec& w) {
    SolveResult sr = solve(B, w);
    if (!sr.particular)
      throw std::logic_error("reduce: decomposition failed");
    return *sr.particular;
  };
  auto apart = [&](const FpVec& co) {
    FpVec v = zero_vec(na, p);
    for (std::size_t t = 0; t < na; ++t) v[t] = co[t + 1];
    return v;
  };

  // Reduced space: keep original names where the basis vector is a plain
  // basis vector of g.
  std::vector<BasisVector> rb;
  for (std::size_t t = 0; t < na; ++t) {
    std::size_t where = 0;
    std::string nm = is_unit_vector(abasis[t], where)
                         ? s.name(where)
                         : "a" + std::to_string(t + 1);
    Parity pr = s.parity_of(abasis[t]) == VecParity::odd ? Parity::odd
                                                         : Parity::even;
    rb.push_back({nm, pr});
  }
  SuperSpace rs(rb, p);

  // Structure constants, the C-values and omega_a.
  std::map<std::pair<std::size_t, std::size_t>, FpVec> table;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i; j < na; ++j) {
      FpVec co = coords(g.bracket(abasis[i], abasis[j]));
      if (!co[na + 1].is_zero())
        throw std::domain_error("reduce: [a,a] leaks into K*");
      FpVec v = apart(co);
      if (!is_zero(v)) table[{i, j}] = v;
    }
  LieSuperAlgebra ra(rs, table);

  FpMat rgram(na, na, p);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      rgram.at(i, j) = form.eval(abasis[i], abasis[j]);
  BilinearForm rform{rgram, form.parity};

  // Derivation and the bracket's x-components.
  FpMat dmat(na, na, p);
  FpVec xcomps = zero_vec(na, p);
  for (std::size_t i = 0; i < na; ++i) {
    FpVec co = coords(g.bracket(xstar, abasis[i]));
    if (!co[na + 1].is_zero())
      throw std::domain_error("reduce: [x*,a] leaks into K*");
    dmat.set_col(i, apart(co));
    xcomps[i] = co[0];
  }
  GradedMap rd{dmat, even_kind ? Parity::even : Parity::odd};
  if (!is_graded(rs, rd))
    throw std::domain_error("reduce: extracted map is not homogeneous");

  // lambda from [x, x*].
  Fp lambda(0, p);
  if (even_kind) {
    FpVec co = coords(g.bracket(x, xstar));
    for (std::size_t t = 1; t < co.size(); ++t)
      if (!co[t].is_zero())
        throw std::domain_error("reduce: [x,x*] is not in span{x}");
    lambda = co[0];
  }

  // Reduced p-map plus P from the x-components of the images.
  PMap rpm;
  std::map<std::size_t, Fp> pv;
  for (std::size_t t = 0; t < na; ++t) {
    if (rs.parity(t) != Parity::even) continue;
    FpVec co = coords(pmap_eval(g, pm, abasis[t]));
    if (!co[na + 1].is_zero())
      throw std::domain_error("reduce: a^[p] leaks into K*");
    rpm.set(t, apart(co));
    pv[t] = co[0];
  }

  ExtensionRecipe rec;
  rec.kind = kind;
  rec.derivation = rd;
  rec.lambda = lambda;
  rec.gamma = rec.delta = rec.sigma = rec.lambda_tilde = rec.mu = Fp(0, p);
  rec.p_values = pv;

  if (kind == ExtKind::ortho_even || kind == ExtKind::peri_even) {
    // Z from the x-components: omega_a(Z, a_i) = xcomps[i].
    SolveResult sr = solve(rgram.transpose(), xcomps);
    if (!sr.particular)
      throw std::domain_error("reduce: no representing vector Z");
    rec.z = *sr.particular;
  }

  if (kind == ExtKind::ortho_even) {
    FpVec co = coords(pmap_eval(g, pm, xstar));
    rec.gamma = co[na + 1];
    rec.lambda_tilde = co[0];
    rec.a0 = apart(co);
    FpVec cox = coords(pmap_eval(g, pm, x));
    rec.b0 = apart(cox);
    rec.sigma = cox[0];
    rec.delta = cox[na + 1];
    rec.case_tag = !lambda.is_zero() ? 'a' : (rec.delta.is_zero() ? 'b' : 'c');
  } else if (kind == ExtKind::peri_even) {
    FpVec co = coords(pmap_eval(g, pm, xstar));
    rec.gamma = co[na + 1];
    rec.a0 = apart(co);
    if (!co[0].is_zero())
      throw std::domain_error("reduce: e^[p] has an x-component");
  } else if (kind == ExtKind::ortho_odd) {
    FpVec co = coords(g.bracket(xstar, xstar));
    rec.z = scale(Fp(2, p).inverse(), apart(co));  // a0
    if (!co[0].is_zero() || !co[na + 1].is_zero())
      throw std::domain_error("reduce: [x*,x*] not in the reduced algebra");
    for (std::size_t i = 0; i < na; ++i)
      if (xcomps[i] != -rform.eval(rs.e(i), rec.z))
        throw std::domain_error("reduce: bracket x-components disagree with a0");
  } else {  // peri_odd
    FpVec co = coords(g.bracket(xstar, xstar));
    rec.z = scale(Fp(2, p).inverse(), apart(co));  // a0
    if (!co[0].is_zero())
      throw std::domain_error("reduce: [e,e] has an x-component");
    for (std::size_t i = 0; i < na; ++i)
      if (xcomps[i] != rform.eval(rec.z, rs.e(i)))
        throw std::domain_error("reduce: bracket x-components disagree with a0");
    FpVec cox = coords(pmap_eval(g, pm, x));
    rec.b0 = apart(cox);
    rec.mu = cox[0];
  }

  AlgebraReport ar = verify_algebra(ra);
  if (!ar.ok)
    throw std::domain_error("reduce: reduced algebra fails verify_algebra: " +
                            ar.violations.front());
  AlgebraReport rr = verify_restricted(ra, rpm);
  if (!rr.ok)
    throw std::domain_error(
        "reduce: reduced p-map fails verify_restricted: " +
        rr.violations.front());
  if (!form_check(ra, rform).all())
    throw std::domain_error("reduce: reduced form fails form_check");

  Reduction out{ra, rpm, rform, rec, abasis, x, xstar, {}};
  out.recipe_report = validate_recipe(ra, rpm, rform, rec);
  return out;
}

}  // namespace relsa
