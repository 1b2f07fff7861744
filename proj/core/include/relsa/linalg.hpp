#pragma once

#include <optional>

#include "relsa/fp.hpp"

namespace relsa {

/// Dense matrix over F_p, row-major.
class FpMat {
 public:
  FpMat() : rows_(0), cols_(0), p_(0) {}  // empty placeholder
  FpMat(std::size_t rows, std::size_t cols, std::int64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t modulus() const { return p_; }

  Fp& at(std::size_t i, std::size_t j);
  const Fp& at(std::size_t i, std::size_t j) const;

  static FpMat identity(std::size_t n, std::int64_t p);

  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  FpMat operator*(const FpMat& o) const;
  FpMat operator*(const Fp& c) const;
  bool operator==(const FpMat& o) const;
  bool operator!=(const FpMat& o) const { return !(*this == o); }

  FpMat transpose() const;
  FpMat pow(std::int64_t k) const;  // square only, k >= 0
  bool is_zero() const;

  FpVec apply(const FpVec& v) const;  // matrix * column vector
  FpVec row(std::size_t i) const;
  FpVec col(std::size_t j) const;
  void set_col(std::size_t j, const FpVec& v);

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::int64_t p_;
  FpVec data_;
};

FpMat from_rows(const std::vector<FpVec>& rows, std::size_t cols,
                std::int64_t p);
FpMat from_cols(const std::vector<FpVec>& cols, std::size_t rows,
                std::int64_t p);

/// Row-reduced echelon form. Pivoting is deterministic: scan columns left to
/// right, take the first nonzero entry below the current row. This makes
/// kernel bases and particular solutions reproducible.
struct Rref {
  FpMat m;
  std::vector<std::size_t> pivot_cols;
};
Rref rref(const FpMat& a);

std::size_t rank(const FpMat& a);
Fp det(const FpMat& a);  // square only

/// Solution of A x = b: one particular solution when consistent, plus a
/// basis of the null space (free variable set to 1, echelon order).
struct SolveResult {
  std::optional<FpVec> particular;
  std::vector<FpVec> kernel_basis;
};
SolveResult solve(const FpMat& a, const FpVec& b);

std::vector<FpVec> kernel_basis(const FpMat& a);

/// Solve A X = B for X (A square nondegenerate); throws if A is singular.
FpMat solve_matrix(const FpMat& a, const FpMat& b);

/// Basis of the column span, reduced to echelon form (deterministic).
std::vector<FpVec> span_basis(const std::vector<FpVec>& vecs, std::size_t dim,
                              std::int64_t p);

/// Membership of v in the span of basis vectors.
bool in_span(const std::vector<FpVec>& basis, const FpVec& v, std::size_t dim,
             std::int64_t p);

}  // namespace relsa
