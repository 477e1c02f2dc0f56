#pragma once

// Dense matrices over the rationals, with exact elimination-based
// kernels: determinant, rank, minors, linear solve, nullspace.

#include <cstddef>
#include <optional>
#include <vector>

#include "ut/errors.hpp"
#include "ut/rational.hpp"

namespace ut {

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

  Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  void swap_rows(std::size_t a, std::size_t b);

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  RationalMatrix transpose() const;

  // Rows [r0, r1) and columns [c0, c1).
  RationalMatrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix: index out of range");
    return i * cols_ + j;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Rational trace(const RationalMatrix& m);

// Determinant via fraction-free one-step elimination.  det of the empty
// (0 x 0) matrix is 1.
Rational det(const RationalMatrix& m);

// Determinant of the submatrix picked out by strictly increasing row and
// column index lists of equal length (0-based).
Rational minor_of(const RationalMatrix& m,
                  const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols);

std::size_t rank(const RationalMatrix& m);

struct SolveResult {
  enum class Status { Unique, NoSolution, Underdetermined };
  Status status;
  RationalMatrix x;  // cols(a) x 1, valid only for Unique
};

// Solves a x = b for a column vector b.
SolveResult solve(const RationalMatrix& a, const RationalMatrix& b);

// Basis of { v : m v = 0 }, one column per basis vector (cols(m) x nullity).
RationalMatrix kernel_basis(const RationalMatrix& m);

}  // namespace ut
