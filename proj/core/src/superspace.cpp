#include "relsa/superspace.hpp"

#include <set>
#include <sstream>

namespace relsa {

SuperSpace::SuperSpace(std::vector<BasisVector> basis, std::int64_t p)
    : basis_(std::move(basis)), p_(p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("SuperSpace: p must be an odd prime");
  std::set<std::string> names;
  for (const auto& b : basis_)
    if (!names.insert(b.name).second)
      throw std::invalid_argument("SuperSpace: duplicate basis name " + b.name);
}

std::size_t SuperSpace::dim_even() const { return even_indices().size(); }
std::size_t SuperSpace::dim_odd() const { return odd_indices().size(); }

std::vector<std::size_t> SuperSpace::even_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].parity == Parity::even) r.push_back(i);
  return r;
}

std::vector<std::size_t> SuperSpace::odd_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].parity == Parity::odd) r.push_back(i);
  return r;
}

std::size_t SuperSpace::index(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw std::invalid_argument("SuperSpace: no basis vector named " + name);
}

VecParity SuperSpace::parity_of(const FpVec& v) const {
  if (v.size() != dim())
    throw std::invalid_argument("SuperSpace: vector dimension mismatch");
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    (parity(i) == Parity::even ? has_even : has_odd) = true;
  }
  if (!has_even && !has_odd) return VecParity::zero;
  if (has_even && has_odd) return VecParity::mixed;
  return has_even ? VecParity::even : VecParity::odd;
}

bool SuperSpace::homogeneous(const FpVec& v, Parity pv) const {
  VecParity vp = parity_of(v);
  if (vp == VecParity::zero) return true;
  return (pv == Parity::even) ? vp == VecParity::even : vp == VecParity::odd;
}

Fp SuperSpace::parity_sign(std::size_t i, std::size_t j) const {
  bool both_odd = parity(i) == Parity::odd && parity(j) == Parity::odd;
  return Fp(both_odd ? -1 : 1, p_);
}

std::string SuperSpace::describe(const FpVec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    if (v[i].value() != 1) os << v[i].value() << "*";
    os << name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FpMat gram_from_wedge(const SuperSpace& space,
                      const std::vector<WedgeTerm>& terms) {
  const std::size_t n = space.dim();
  FpMat g(n, n, space.p());
  for (const WedgeTerm& t : terms) {
    if (t.i >= n || t.j >= n)
      throw std::invalid_argument("gram_from_wedge: index out of range");
    g.at(t.i, t.j) += t.coeff * space.parity_sign(t.i, t.j);
    if (t.i != t.j) g.at(t.j, t.i) -= t.coeff;
  }
  return g;
}

}  // namespace relsa
