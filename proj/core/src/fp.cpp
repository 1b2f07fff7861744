#include "relsa/fp.hpp"

#include <sstream>

namespace relsa {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Fp::Fp(std::int64_t v, std::int64_t p) : p_(p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("Fp: modulus " + std::to_string(p) +
                                " is not an odd prime");
  v_ = v % p;
  if (v_ < 0) v_ += p;
}

void Fp::check_compatible(const Fp& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("Fp: modulus mismatch (" + std::to_string(p_) +
                                " vs " + std::to_string(o.p_) + ")");
}

Fp Fp::operator-() const { return Fp(-v_, p_); }

Fp Fp::operator+(const Fp& o) const {
  check_compatible(o);
  return Fp(v_ + o.v_, p_);
}

Fp Fp::operator-(const Fp& o) const {
  check_compatible(o);
  return Fp(v_ - o.v_, p_);
}

Fp Fp::operator*(const Fp& o) const {
  check_compatible(o);
  return Fp(v_ * o.v_, p_);
}

Fp Fp::operator/(const Fp& o) const {
  check_compatible(o);
  return *this * o.inverse();
}

bool Fp::operator==(const Fp& o) const {
  check_compatible(o);
  return v_ == o.v_;
}

Fp Fp::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Fp r(1, p_), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: division by zero");
  return pow(p_ - 2);  // Fermat
}

std::string Fp::str() const { return std::to_string(v_); }

FpVec zero_vec(std::size_t n, std::int64_t p) { return FpVec(n, Fp(0, p)); }

FpVec unit_vec(std::size_t n, std::size_t i, std::int64_t p) {
  FpVec v = zero_vec(n, p);
  v.at(i) = Fp(1, p);
  return v;
}

bool is_zero(const FpVec& v) {
  for (const Fp& c : v)
    if (!c.is_zero()) return false;
  return true;
}

static void check_same_size(const FpVec& a, const FpVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("FpVec: dimension mismatch");
}

FpVec add(const FpVec& a, const FpVec& b) {
  check_same_size(a, b);
  FpVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

FpVec sub(const FpVec& a, const FpVec& b) {
  check_same_size(a, b);
  FpVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

FpVec neg(const FpVec& a) {
  FpVec r = a;
  for (Fp& c : r) c = -c;
  return r;
}

FpVec scale(const Fp& c, const FpVec& a) {
  FpVec r = a;
  for (Fp& x : r) x *= c;
  return r;
}

bool equal(const FpVec& a, const FpVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string str(const FpVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].value();
  os << ")";
  return os.str();
}

}  // namespace relsa
