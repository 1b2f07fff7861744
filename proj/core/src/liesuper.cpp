#include "relsa/liesuper.hpp"

#include <sstream>

namespace relsa {

bool is_graded(const SuperSpace& space, const GradedMap& d) {
  const std::size_t n = space.dim();
  if (d.mat.rows() != n || d.mat.cols() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Parity target = space.parity(j) + d.parity;
    for (std::size_t i = 0; i < n; ++i)
      if (!d.mat.at(i, j).is_zero() && space.parity(i) != target) return false;
  }
  return true;
}

GradedMap rank_one(const SuperSpace& space, std::size_t out, std::size_t in,
                   const Fp& coeff) {
  FpMat m(space.dim(), space.dim(), space.p());
  m.at(out, in) = coeff;
  return {m, space.parity(out) + space.parity(in)};
}

LieSuperAlgebra::LieSuperAlgebra(
    SuperSpace space, std::map<std::pair<std::size_t, std::size_t>, FpVec> table)
    : space_(std::move(space)), table_(std::move(table)) {
  for (const auto& [key, v] : table_) {
    if (key.first > key.second)
      throw std::invalid_argument("LieSuperAlgebra: table keys must have i <= j");
    if (key.second >= space_.dim())
      throw std::invalid_argument("LieSuperAlgebra: table index out of range");
    if (v.size() != space_.dim())
      throw std::invalid_argument("LieSuperAlgebra: table entry has wrong size");
  }
}

FpVec LieSuperAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i <= j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? space_.zero() : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return space_.zero();
  return scale(-space_.parity_sign(i, j), it->second);
}

FpVec LieSuperAlgebra::bracket(const FpVec& a, const FpVec& b) const {
  FpVec r = space_.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r = add(r, scale(a[i] * b[j], bracket_basis(i, j)));
    }
  }
  return r;
}

FpMat LieSuperAlgebra::ad(const FpVec& a) const {
  FpMat m(dim(), dim(), p());
  for (std::size_t j = 0; j < dim(); ++j)
    m.set_col(j, bracket(a, space_.e(j)));
  return m;
}

FpMat ad_power(const LieSuperAlgebra& alg, const FpVec& a, std::int64_t k) {
  return alg.ad(a).pow(k);
}

namespace {

std::string triple_str(const SuperSpace& s, std::size_t i, std::size_t j,
                       std::size_t k) {
  return "(" + s.name(i) + "," + s.name(j) + "," + s.name(k) + ")";
}

// Cyclic graded Jacobi: (-1)^(|a||c|)[a,[b,c]] + (-1)^(|c||b|)[c,[a,b]]
//                       + (-1)^(|b||a|)[b,[c,a]].
FpVec jacobi_sum(const LieSuperAlgebra& alg, std::size_t i, std::size_t j,
                 std::size_t k) {
  const SuperSpace& s = alg.space();
  FpVec r = scale(s.parity_sign(i, k),
                  alg.bracket(s.e(i), alg.bracket_basis(j, k)));
  r = add(r, scale(s.parity_sign(k, j),
                   alg.bracket(s.e(k), alg.bracket_basis(i, j))));
  r = add(r, scale(s.parity_sign(j, i),
                   alg.bracket(s.e(j), alg.bracket_basis(k, i))));
  return r;
}

FpVec cube(const LieSuperAlgebra& alg, const FpVec& a) {
  return alg.bracket(a, alg.bracket(a, a));
}

}  // namespace

AlgebraReport verify_algebra(const LieSuperAlgebra& alg) {
  AlgebraReport rep;
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();

  for (const auto& [key, v] : alg.table()) {
    auto [i, j] = key;
    Parity target = s.parity(i) + s.parity(j);
    if (!s.homogeneous(v, target)) {
      rep.ok = false;
      rep.violations.push_back("bracket [" + s.name(i) + "," + s.name(j) +
                               "] is not homogeneous of parity " +
                               to_string(target));
    }
    if (i == j && s.parity(i) == Parity::even && !is_zero(v)) {
      rep.ok = false;
      rep.violations.push_back("antisymmetry: [" + s.name(i) + "," +
                               s.name(i) + "] must vanish for even " +
                               s.name(i));
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        FpVec jac = jacobi_sum(alg, i, j, k);
        if (!is_zero(jac)) {
          rep.ok = false;
          rep.violations.push_back("Jacobi violated at " +
                                   triple_str(s, i, j, k) + ": " +
                                   s.describe(jac));
        }
      }

  if (s.p() == 3) {
    // [a,[a,a]] = 0 on the odd part is an axiom at p = 3; it is cubic, so
    // check its full polarization (inclusion-exclusion over subsets) on
    // odd basis triples.
    auto odd = s.odd_indices();
    for (std::size_t a = 0; a < odd.size(); ++a)
      for (std::size_t b = a; b < odd.size(); ++b)
        for (std::size_t c = b; c < odd.size(); ++c) {
          FpVec ea = s.e(odd[a]), eb = s.e(odd[b]), ec = s.e(odd[c]);
          FpVec sum = cube(alg, add(add(ea, eb), ec));
          sum = sub(sum, cube(alg, add(ea, eb)));
          sum = sub(sum, cube(alg, add(ea, ec)));
          sum = sub(sum, cube(alg, add(eb, ec)));
          sum = add(sum, cube(alg, ea));
          sum = add(sum, cube(alg, eb));
          sum = add(sum, cube(alg, ec));
          if (!is_zero(sum)) {
            rep.ok = false;
            rep.violations.push_back("p=3 cubic axiom violated at " +
                                     triple_str(s, odd[a], odd[b], odd[c]));
          }
        }
  }
  return rep;
}

std::vector<FpVec> center(const LieSuperAlgebra& alg) {
  const std::size_t n = alg.dim();
  // v central iff [v, e_k] = 0 for all k; stack the maps v -> [v, e_k].
  std::vector<FpVec> rows;
  for (std::size_t k = 0; k < n; ++k) {
    FpMat m(n, n, alg.p());
    for (std::size_t i = 0; i < n; ++i) m.set_col(i, alg.bracket_basis(i, k));
    for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
  }
  return kernel_basis(from_rows(rows, n, alg.p()));
}

std::vector<FpVec> derived_ideal(const LieSuperAlgebra& alg) {
  std::vector<FpVec> images;
  for (const auto& [key, v] : alg.table()) {
    (void)key;
    if (!is_zero(v)) images.push_back(v);
  }
  return span_basis(images, alg.dim(), alg.p());
}

std::vector<FpVec> centralizer(const LieSuperAlgebra& alg,
                               const std::vector<FpVec>& ideal) {
  const std::size_t n = alg.dim();
  std::vector<FpVec> rows;
  for (const FpVec& s : ideal) {
    FpMat m(n, n, alg.p());
    for (std::size_t i = 0; i < n; ++i)
      m.set_col(i, alg.bracket(alg.space().e(i), s));
    for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
  }
  if (rows.empty()) {
    std::vector<FpVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(alg.space().e(i));
    return all;
  }
  return kernel_basis(from_rows(rows, n, alg.p()));
}

bool is_derivation(const LieSuperAlgebra& alg, const GradedMap& d) {
  if (!is_graded(alg.space(), d)) return false;
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  Fp dsign(sign_of(d.parity), s.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FpVec lhs = d(alg.bracket_basis(i, j));
      FpVec rhs = alg.bracket(d(s.e(i)), s.e(j));
      Fp sg = s.parity(i) == Parity::odd ? dsign : Fp(1, s.p());
      rhs = add(rhs, scale(sg, alg.bracket(s.e(i), d(s.e(j)))));
      if (!equal(lhs, rhs)) return false;
    }
  return true;
}

std::vector<GradedMap> derivation_space(const LieSuperAlgebra& alg,
                                        Parity parity) {
  const SuperSpace& s = alg.space();
  const std::size_t n = s.dim();
  const std::int64_t p = s.p();

  // Unknowns: matrix entries (r, c) allowed by the parity constraint.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (s.parity(r) == s.parity(c) + parity) slots.push_back({r, c});

  std::vector<FpVec> rows;
  Fp dsign(sign_of(parity), p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FpVec bij = alg.bracket_basis(i, j);
      Fp sg = s.parity(i) == Parity::odd ? dsign : Fp(1, p);
      for (std::size_t k = 0; k < n; ++k) {
        FpVec row = zero_vec(slots.size(), p);
        for (std::size_t t = 0; t < slots.size(); ++t) {
          auto [r, c] = slots[t];
          Fp coeff(0, p);
          // D([e_i,e_j])_k picks up D[k][c] weighted by bracket coords.
          if (r == k) coeff += bij[c];
          // -[D e_i, e_j]_k: unknown D[r][i] contributes [e_r, e_j]_k.
          if (c == i) coeff -= alg.bracket_basis(r, j)[k];
          // -sg * [e_i, D e_j]_k.
          if (c == j) coeff -= sg * alg.bracket_basis(i, r)[k];
          row[t] = coeff;
        }
        rows.push_back(row);
      }
    }

  std::vector<GradedMap> result;
  std::vector<FpVec> sols =
      rows.empty() ? std::vector<FpVec>{}
                   : kernel_basis(from_rows(rows, slots.size(), p));
  if (rows.empty()) {
    for (std::size_t t = 0; t < slots.size(); ++t)
      sols.push_back(unit_vec(slots.size(), t, p));
  }
  for (const FpVec& sol : sols) {
    FpMat m(n, n, p);
    for (std::size_t t = 0; t < slots.size(); ++t)
      m.at(slots[t].first, slots[t].second) = sol[t];
    result.push_back({m, parity});
  }
  return result;
}

}  // namespace relsa
