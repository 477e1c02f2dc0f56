#pragma once

// The unitriangular group UT(n, Q), its Lie algebra of strictly upper
// triangular matrices, and the dual realized as strictly lower
// triangular matrices via the trace pairing f(x) = tr(f x).

#include <cstddef>
#include <vector>

#include "ut/matrix.hpp"

namespace ut {

// Upper triangular, ones on the diagonal.
class GroupElement {
public:
  explicit GroupElement(RationalMatrix m);
  static GroupElement identity(std::size_t n) { return GroupElement(RationalMatrix::identity(n)); }

  std::size_t n() const { return m_.rows(); }
  const RationalMatrix& mat() const { return m_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

private:
  RationalMatrix m_;
};

// Strictly upper triangular.
class AlgebraElement {
public:
  explicit AlgebraElement(RationalMatrix m);
  static AlgebraElement zero(std::size_t n) { return AlgebraElement(RationalMatrix(n, n)); }
  // Single matrix unit e_{ij}, i < j, scaled.
  static AlgebraElement unit(std::size_t n, std::size_t i, std::size_t j,
                             const Rational& c = Rational(1));

  std::size_t n() const { return m_.rows(); }
  const RationalMatrix& mat() const { return m_; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.m_ == b.m_; }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.m_ + b.m_);
  }
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
    return AlgebraElement(s * a.m_);
  }

private:
  RationalMatrix m_;
};

// Strictly lower triangular; stands for the functional x -> tr(f x).
class CoadjointElement {
public:
  explicit CoadjointElement(RationalMatrix m);
  static CoadjointElement zero(std::size_t n) { return CoadjointElement(RationalMatrix(n, n)); }

  std::size_t n() const { return m_.rows(); }
  const RationalMatrix& mat() const { return m_; }

  friend bool operator==(const CoadjointElement& a, const CoadjointElement& b) {
    return a.m_ == b.m_;
  }

private:
  RationalMatrix m_;
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& g);
// h g h^{-1}
GroupElement conjugate(const GroupElement& h, const GroupElement& g);

// Both series terminate: (g - 1) and x are nilpotent of order <= n.
GroupElement group_exp(const AlgebraElement& x);
AlgebraElement group_log(const GroupElement& g);

Rational dual_pairing(const CoadjointElement& f, const AlgebraElement& x);

// Strictly lower projection of g f g^{-1}.
CoadjointElement coadjoint_act(const GroupElement& g, const CoadjointElement& f);

// Consecutive block sizes along the diagonal.  Blocks are numbered
// 1..count to match the C_{ij} naming used throughout; matrix entries
// stay 0-based.
class BlockPartition {
public:
  explicit BlockPartition(std::vector<std::size_t> sizes);

  std::size_t total() const { return total_; }
  std::size_t count() const { return sizes_.size(); }
  std::size_t size(std::size_t block) const { return sizes_[check(block)]; }
  // 0-based row/col where block starts.
  std::size_t offset(std::size_t block) const { return offsets_[check(block)]; }

  const std::vector<std::size_t>& sizes() const { return sizes_; }

private:
  std::size_t check(std::size_t block) const {
    if (block < 1 || block > sizes_.size()) throw DimensionError("partition: block index out of range");
    return block - 1;
  }

  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// Copy of block C_{bi,bj} of m.
RationalMatrix block(const RationalMatrix& m, const BlockPartition& p,
                     std::size_t bi, std::size_t bj);

// Writes b into block (bi, bj) of m.
void set_block(RationalMatrix& m, const BlockPartition& p,
               std::size_t bi, std::size_t bj, const RationalMatrix& b);

}  // namespace ut
