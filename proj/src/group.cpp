#include "ut/group.hpp"

#include <numeric>

namespace ut {

namespace {

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix not square");
}

}  // namespace

GroupElement::GroupElement(RationalMatrix m) : m_(std::move(m)) {
  require_square(m_, "group element");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (m_.at(i, i) != Rational(1))
      throw ConstraintError("group element: diagonal entry != 1");
    for (std::size_t j = 0; j < i; ++j)
      if (!m_.at(i, j).is_zero())
        throw ConstraintError("group element: nonzero below diagonal");
  }
}

AlgebraElement::AlgebraElement(RationalMatrix m) : m_(std::move(m)) {
  require_square(m_, "algebra element");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!m_.at(i, j).is_zero())
        throw ConstraintError("algebra element: nonzero on or below diagonal");
}

AlgebraElement AlgebraElement::unit(std::size_t n, std::size_t i, std::size_t j,
                                    const Rational& c) {
  if (i >= j || j >= n) throw DimensionError("algebra unit: need i < j < n");
  RationalMatrix m(n, n);
  m.at(i, j) = c;
  return AlgebraElement(std::move(m));
}

CoadjointElement::CoadjointElement(RationalMatrix m) : m_(std::move(m)) {
  require_square(m_, "dual element");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (!m_.at(i, j).is_zero())
        throw ConstraintError("dual element: nonzero on or above diagonal");
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (a.n() != b.n()) throw DimensionError("mul: size mismatch");
  return GroupElement(a.mat() * b.mat());
}

GroupElement inv(const GroupElement& g) {
  // (1 + N)^{-1} = sum (-N)^p, N nilpotent.
  const std::size_t n = g.n();
  RationalMatrix nmat = g.mat() - RationalMatrix::identity(n);
  RationalMatrix acc = RationalMatrix::identity(n);
  RationalMatrix pw = RationalMatrix::identity(n);
  for (std::size_t p = 1; p < n; ++p) {
    pw = pw * nmat;
    if (pw.is_zero()) break;
    acc = (p % 2 == 1) ? acc - pw : acc + pw;
  }
  return GroupElement(std::move(acc));
}

GroupElement conjugate(const GroupElement& h, const GroupElement& g) {
  return mul(mul(h, g), inv(h));
}

GroupElement group_exp(const AlgebraElement& x) {
  const std::size_t n = x.n();
  RationalMatrix acc = RationalMatrix::identity(n);
  RationalMatrix pw = RationalMatrix::identity(n);
  Rational fact(1);
  for (std::size_t p = 1; p < n; ++p) {
    pw = pw * x.mat();
    if (pw.is_zero()) break;
    fact *= Rational(static_cast<long>(p));
    acc = acc + (Rational(1) / fact) * pw;
  }
  return GroupElement(std::move(acc));
}

AlgebraElement group_log(const GroupElement& g) {
  const std::size_t n = g.n();
  RationalMatrix nmat = g.mat() - RationalMatrix::identity(n);
  RationalMatrix acc(n, n);
  RationalMatrix pw = RationalMatrix::identity(n);
  for (std::size_t p = 1; p < n; ++p) {
    pw = pw * nmat;
    if (pw.is_zero()) break;
    Rational coef = Rational(p % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(p));
    acc = acc + coef * pw;
  }
  return AlgebraElement(std::move(acc));
}

Rational dual_pairing(const CoadjointElement& f, const AlgebraElement& x) {
  if (f.n() != x.n()) throw DimensionError("pairing: size mismatch");
  return trace(f.mat() * x.mat());
}

CoadjointElement coadjoint_act(const GroupElement& g, const CoadjointElement& f) {
  if (g.n() != f.n()) throw DimensionError("coadjoint: size mismatch");
  RationalMatrix full = g.mat() * f.mat() * inv(g).mat();
  RationalMatrix low(f.n(), f.n());
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < i; ++j) low.at(i, j) = full.at(i, j);
  return CoadjointElement(std::move(low));
}

BlockPartition::BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (std::size_t s : sizes_) {
    offsets_.push_back(total_);
    total_ += s;
  }
}

RationalMatrix block(const RationalMatrix& m, const BlockPartition& p,
                     std::size_t bi, std::size_t bj) {
  if (m.rows() != p.total() || m.cols() != p.total())
    throw DimensionError("block: matrix does not match partition");
  const std::size_t r0 = p.offset(bi), c0 = p.offset(bj);
  return m.submatrix(r0, r0 + p.size(bi), c0, c0 + p.size(bj));
}

void set_block(RationalMatrix& m, const BlockPartition& p,
               std::size_t bi, std::size_t bj, const RationalMatrix& b) {
  if (m.rows() != p.total() || m.cols() != p.total())
    throw DimensionError("set_block: matrix does not match partition");
  if (b.rows() != p.size(bi) || b.cols() != p.size(bj))
    throw DimensionError("set_block: block shape mismatch");
  const std::size_t r0 = p.offset(bi), c0 = p.offset(bj);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
}

}  // namespace ut
