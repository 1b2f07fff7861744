#include "relsa/linalg.hpp"

#include <sstream>

namespace relsa {

FpMat::FpMat(std::size_t rows, std::size_t cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, Fp(0, p)) {}

Fp& FpMat::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("FpMat::at");
  return data_[i * cols_ + j];
}

const Fp& FpMat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("FpMat::at");
  return data_[i * cols_ + j];
}

FpMat FpMat::identity(std::size_t n, std::int64_t p) {
  FpMat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp(1, p);
  return m;
}

static void check_shape(bool ok) {
  if (!ok) throw std::invalid_argument("FpMat: dimension mismatch");
}

FpMat FpMat::operator+(const FpMat& o) const {
  check_shape(rows_ == o.rows_ && cols_ == o.cols_);
  FpMat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
  check_shape(rows_ == o.rows_ && cols_ == o.cols_);
  FpMat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
  check_shape(cols_ == o.rows_);
  FpMat r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fp& c = at(i, k);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += c * o.at(k, j);
    }
  return r;
}

FpMat FpMat::operator*(const Fp& c) const {
  FpMat r = *this;
  for (Fp& x : r.data_) x *= c;
  return r;
}

bool FpMat::operator==(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

FpMat FpMat::transpose() const {
  FpMat r(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FpMat FpMat::pow(std::int64_t k) const {
  check_shape(rows_ == cols_);
  if (k < 0) throw std::invalid_argument("FpMat::pow: negative exponent");
  FpMat r = identity(rows_, p_), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool FpMat::is_zero() const {
  for (const Fp& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

FpVec FpMat::apply(const FpVec& v) const {
  check_shape(cols_ == v.size());
  FpVec r = zero_vec(rows_, p_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
  }
  return r;
}

FpVec FpMat::row(std::size_t i) const {
  FpVec r = zero_vec(cols_, p_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

FpVec FpMat::col(std::size_t j) const {
  FpVec r = zero_vec(rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

void FpMat::set_col(std::size_t j, const FpVec& v) {
  check_shape(v.size() == rows_);
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::string FpMat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j).value();
  }
  os << "]";
  return os.str();
}

FpMat from_rows(const std::vector<FpVec>& rows, std::size_t cols,
                std::int64_t p) {
  FpMat m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_shape(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

FpMat from_cols(const std::vector<FpVec>& cols, std::size_t rows,
                std::int64_t p) {
  FpMat m(rows, cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Rref rref(const FpMat& a) {
  FpMat m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    Fp inv = m.at(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Fp f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

std::size_t rank(const FpMat& a) { return rref(a).pivot_cols.size(); }

Fp det(const FpMat& a) {
  check_shape(a.rows() == a.cols());
  FpMat m = a;
  const std::int64_t p = a.modulus();
  Fp d(1, p);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t piv = c;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) return Fp(0, p);
    if (piv != c) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Fp inv = m.at(c, c).inverse();
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      Fp f = m.at(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

SolveResult solve(const FpMat& a, const FpVec& b) {
  check_shape(a.rows() == b.size());
  const std::int64_t p = a.modulus();
  FpMat aug(a.rows(), a.cols() + 1, p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Rref rr = rref(aug);

  SolveResult res;
  bool consistent = true;
  for (std::size_t c : rr.pivot_cols)
    if (c == a.cols()) consistent = false;

  std::vector<std::size_t> pivots;
  for (std::size_t c : rr.pivot_cols)
    if (c < a.cols()) pivots.push_back(c);

  if (consistent) {
    FpVec x = zero_vec(a.cols(), p);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = rr.m.at(r, a.cols());
    res.particular = x;
  }

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < a.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    FpVec k = zero_vec(a.cols(), p);
    k[fc] = Fp(1, p);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k[pivots[r]] = -rr.m.at(r, fc);
    res.kernel_basis.push_back(k);
  }
  return res;
}

std::vector<FpVec> kernel_basis(const FpMat& a) {
  return solve(a, zero_vec(a.rows(), a.modulus())).kernel_basis;
}

FpMat solve_matrix(const FpMat& a, const FpMat& b) {
  check_shape(a.rows() == a.cols() && a.rows() == b.rows());
  const std::int64_t p = a.modulus();
  FpMat aug(a.rows(), a.cols() + b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      aug.at(i, a.cols() + j) = b.at(i, j);
  }
  Rref rr = rref(aug);
  if (rr.pivot_cols.size() < a.cols() ||
      (!rr.pivot_cols.empty() && rr.pivot_cols.back() >= a.cols()))
    throw std::domain_error("solve_matrix: singular matrix");
  FpMat x(a.cols(), b.cols(), p);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(i, j) = rr.m.at(i, a.cols() + j);
  return x;
}

std::vector<FpVec> span_basis(const std::vector<FpVec>& vecs, std::size_t dim,
                              std::int64_t p) {
  if (vecs.empty()) return {};
  FpMat m = from_rows(vecs, dim, p);
  Rref rr = rref(m);
  std::vector<FpVec> basis;
  for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
    basis.push_back(rr.m.row(r));
  return basis;
}

bool in_span(const std::vector<FpVec>& basis, const FpVec& v, std::size_t dim,
             std::int64_t p) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  FpMat m = from_cols(basis, dim, p);
  return solve(m, v).particular.has_value();
}

}  // namespace relsa
