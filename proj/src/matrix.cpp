#include "ut/matrix.hpp"

#include <utility>

namespace ut {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a >= rows_ || b >= rows_) throw DimensionError("matrix: row swap out of range");
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::submatrix(std::size_t r0, std::size_t r1,
                                         std::size_t c0, std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_)
    throw DimensionError("matrix: submatrix range out of bounds");
  RationalMatrix s(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) s.at(i - r0, j - c0) = at(i, j);
  return s;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix: add shape mismatch");
  RationalMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix: sub shape mismatch");
  RationalMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix: mul shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
  return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Rational trace(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace: matrix not square");
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

namespace {

struct Echelon {
  RationalMatrix m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;  // parity of row swaps
};

// One-step fraction-free elimination (Bareiss).  Each update is
// m(i,j) <- (m(i,j)*pivot - m(i,c)*m(r,j)) / prev, where prev is the
// previous pivot; over the rationals the division is always exact and
// when no pivot column is skipped the entries stay integral for
// integral input.  After the sweep, pivot r holds the leading minor of
// order r+1 of the row-permuted matrix.
Echelon bareiss(RationalMatrix a) {
  const std::size_t nr = a.rows(), nc = a.cols();
  Echelon e{RationalMatrix(), {}, 1};
  Rational prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a.at(p, c).is_zero()) ++p;
    if (p == nr) continue;
    if (p != r) {
      a.swap_rows(p, r);
      e.sign = -e.sign;
    }
    const Rational pivot = a.at(r, c);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j)
        a.at(i, j) = (a.at(i, j) * pivot - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = Rational(0);
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(a);
  return e;
}

}  // namespace

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Echelon e = bareiss(m);
  if (e.pivot_cols.size() < n) return Rational(0);
  Rational d = e.m.at(n - 1, n - 1);
  return e.sign < 0 ? -d : d;
}

Rational minor_of(const RationalMatrix& m,
                  const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw DimensionError("minor: row/col counts differ");
  auto check = [&](const std::vector<std::size_t>& idx, std::size_t limit) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (idx[t] >= limit) throw DimensionError("minor: index out of range");
      if (t > 0 && idx[t] <= idx[t - 1]) throw DimensionError("minor: indices not increasing");
    }
  };
  check(rows, m.rows());
  check(cols, m.cols());
  RationalMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
  return det(s);
}

std::size_t rank(const RationalMatrix& m) { return bareiss(m).pivot_cols.size(); }

SolveResult solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) throw DimensionError("solve: rhs shape mismatch");
  const std::size_t nr = a.rows(), nc = a.cols();
  RationalMatrix aug(nr, nc + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, nc) = b.at(i, 0);
  }
  Echelon e = bareiss(aug);
  for (std::size_t t = 0; t < e.pivot_cols.size(); ++t)
    if (e.pivot_cols[t] == nc) return {SolveResult::Status::NoSolution, RationalMatrix()};
  if (e.pivot_cols.size() < nc) return {SolveResult::Status::Underdetermined, RationalMatrix()};
  RationalMatrix x(nc, 1);
  for (std::size_t t = nc; t-- > 0;) {
    Rational s = e.m.at(t, nc);
    for (std::size_t j = t + 1; j < nc; ++j) s -= e.m.at(t, j) * x.at(j, 0);
    x.at(t, 0) = s / e.m.at(t, t);
  }
  return {SolveResult::Status::Unique, std::move(x)};
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const std::size_t nc = m.cols();
  Echelon e = bareiss(m);
  const auto& piv = e.pivot_cols;
  // Reduce to RREF so each free column reads off a kernel vector.
  RationalMatrix r = e.m;
  for (std::size_t t = piv.size(); t-- > 0;) {
    const std::size_t pc = piv[t];
    const Rational p = r.at(t, pc);
    for (std::size_t j = pc; j < nc; ++j) r.at(t, j) /= p;
    for (std::size_t i = 0; i < t; ++i) {
      const Rational f = r.at(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < nc; ++j) r.at(i, j) -= f * r.at(t, j);
    }
  }
  std::vector<std::size_t> free_cols;
  {
    std::size_t t = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      if (t < piv.size() && piv[t] == c)
        ++t;
      else
        free_cols.push_back(c);
    }
  }
  RationalMatrix basis(nc, free_cols.size());
  for (std::size_t v = 0; v < free_cols.size(); ++v) {
    const std::size_t fc = free_cols[v];
    basis.at(fc, v) = Rational(1);
    for (std::size_t t = 0; t < piv.size(); ++t) basis.at(piv[t], v) = -r.at(t, fc);
  }
  return basis;
}

}  // namespace ut
