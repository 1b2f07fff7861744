#pragma once

#include "relsa/linalg.hpp"

namespace relsa {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((int(a) + int(b)) % 2);
}
inline int sign_of(Parity a) { return a == Parity::odd ? -1 : 1; }
inline const char* to_string(Parity a) {
  return a == Parity::even ? "even" : "odd";
}

/// Classification of a coordinate vector by the parity of its support.
enum class VecParity { zero, even, odd, mixed };

struct BasisVector {
  std::string name;
  Parity parity;
};

/// Ordered homogeneous basis of a Z/2-graded space over F_p.
class SuperSpace {
 public:
  SuperSpace(std::vector<BasisVector> basis, std::int64_t p);

  std::size_t dim() const { return basis_.size(); }
  std::int64_t p() const { return p_; }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  const std::string& name(std::size_t i) const { return basis_.at(i).name; }
  const std::vector<BasisVector>& basis() const { return basis_; }

  std::size_t dim_even() const;
  std::size_t dim_odd() const;
  std::vector<std::size_t> even_indices() const;
  std::vector<std::size_t> odd_indices() const;

  std::size_t index(const std::string& name) const;  // throws if absent
  FpVec e(std::size_t i) const { return unit_vec(dim(), i, p_); }
  Fp scalar(std::int64_t v) const { return Fp(v, p_); }
  FpVec zero() const { return zero_vec(dim(), p_); }

  VecParity parity_of(const FpVec& v) const;
  bool homogeneous(const FpVec& v, Parity p) const;

  /// -1 to the product of parities of basis vectors i and j.
  Fp parity_sign(std::size_t i, std::size_t j) const;

  std::string describe(const FpVec& v) const;  // "2*e1 + 3*e4"

 private:
  std::vector<BasisVector> basis_;
  std::int64_t p_;
};

/// One term c * e_i^* ^ e_j^* of a bilinear form given in wedge notation.
struct WedgeTerm {
  std::size_t i, j;
  Fp coeff;
};

/// Gram matrix of sum(c * e_i^* ^ e_j^*). Convention, fixed once for the
/// whole library: a term (i, j, c) contributes
///     G[i][j] += c * (-1)^(|e_i||e_j|),  and for i != j  G[j][i] += -c.
/// The odd-odd wedge is symmetric and e_i^* ^ e_i^* is nonzero (it
/// contributes -c on the diagonal). The result always satisfies
/// G[k][l] = -(-1)^(|e_k||e_l|) G[l][k].
FpMat gram_from_wedge(const SuperSpace& space,
                      const std::vector<WedgeTerm>& terms);

}  // namespace relsa
