#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace relsa {

bool is_odd_prime(std::int64_t p);

/// A residue in the prime field F_p, p an odd prime. Every scalar carries
/// its modulus; mixing moduli in one expression throws.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::int64_t v, std::int64_t p);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const;
  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const;
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inverse() const;
  Fp pow(std::int64_t e) const;

  std::string str() const;

 private:
  void check_compatible(const Fp& o) const;
  std::int64_t v_;
  std::int64_t p_;
};

inline Fp fp(std::int64_t v, std::int64_t p) { return Fp(v, p); }

/// Coordinate vector over F_p.
using FpVec = std::vector<Fp>;

FpVec zero_vec(std::size_t n, std::int64_t p);
FpVec unit_vec(std::size_t n, std::size_t i, std::int64_t p);
bool is_zero(const FpVec& v);
FpVec add(const FpVec& a, const FpVec& b);
FpVec sub(const FpVec& a, const FpVec& b);
FpVec neg(const FpVec& a);
FpVec scale(const Fp& c, const FpVec& a);
bool equal(const FpVec& a, const FpVec& b);
std::string str(const FpVec& v);

}  // namespace relsa
