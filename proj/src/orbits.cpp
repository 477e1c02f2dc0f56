#include "ut/orbits.hpp"

#include <string>

namespace ut {

bool is_subregular(OrbitVariant v) {
  return v == OrbitVariant::SubregularEven || v == OrbitVariant::SubregularOdd;
}

std::size_t OrbitParams::n() const {
  switch (variant) {
    case OrbitVariant::RegularEven: return 2 * k;
    case OrbitVariant::RegularOdd: return 2 * k + 1;
    case OrbitVariant::SubregularEven: return 2 * (k + m + 2);
    case OrbitVariant::SubregularOdd: return 2 * (k + m) + 5;
  }
  throw ConstraintError("orbit params: unknown variant");
}

BlockPartition OrbitParams::partition() const {
  switch (variant) {
    case OrbitVariant::RegularEven: return BlockPartition({k, k});
    case OrbitVariant::RegularOdd: return BlockPartition({k, 1, k});
    case OrbitVariant::SubregularEven: return BlockPartition({m, 1, 1, k, k, 1, 1, m});
    case OrbitVariant::SubregularOdd: return BlockPartition({m, 1, 1, k, 1, k, 1, 1, m});
  }
  throw ConstraintError("orbit params: unknown variant");
}

void OrbitParams::validate() const {
  auto need_nonzero = [](const std::vector<Rational>& v, std::size_t upto, const char* what) {
    for (std::size_t i = 0; i < upto; ++i)
      if (v[i].is_zero())
        throw ConstraintError(std::string(what) + " entry " + std::to_string(i + 1) +
                              " must be nonzero");
  };
  if (lambdas.size() != k) throw ConstraintError("orbit params: lambdas length != k");
  switch (variant) {
    case OrbitVariant::RegularEven:
      if (k < 1) throw ConstraintError("orbit params: k >= 1 required");
      need_nonzero(lambdas, k - 1, "lambdas");
      break;
    case OrbitVariant::RegularOdd:
      if (k < 1) throw ConstraintError("orbit params: k >= 1 required");
      need_nonzero(lambdas, k, "lambdas");
      break;
    case OrbitVariant::SubregularEven:
    case OrbitVariant::SubregularOdd:
      if (lambdas1.size() != m) throw ConstraintError("orbit params: lambdas1 length != m");
      need_nonzero(lambdas1, m, "lambdas1");
      need_nonzero(lambdas, variant == OrbitVariant::SubregularOdd ? k : (k > 0 ? k - 1 : 0),
                   "lambdas");
      if (gammas[0].is_zero()) throw ConstraintError("orbit params: gamma1 must be nonzero");
      if (gammas[1].is_zero()) throw ConstraintError("orbit params: gamma2 must be nonzero");
      break;
  }
}

namespace {

// lambdas[0] in the bottom-left corner, lambdas[size-1] top-right.
RationalMatrix antidiagonal(const std::vector<Rational>& lambdas) {
  const std::size_t s = lambdas.size();
  RationalMatrix a(s, s);
  for (std::size_t j = 0; j < s; ++j) a.at(s - 1 - j, j) = lambdas[j];
  return a;
}

RationalMatrix one_by_one(const Rational& v) {
  RationalMatrix m(1, 1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace

CoadjointElement canonical_form(const OrbitParams& p) {
  p.validate();
  const BlockPartition part = p.partition();
  RationalMatrix f(p.n(), p.n());
  switch (p.variant) {
    case OrbitVariant::RegularEven:
      set_block(f, part, 2, 1, antidiagonal(p.lambdas));
      break;
    case OrbitVariant::RegularOdd:
      set_block(f, part, 3, 1, antidiagonal(p.lambdas));
      break;
    case OrbitVariant::SubregularEven:
      set_block(f, part, 5, 4, antidiagonal(p.lambdas));
      set_block(f, part, 8, 1, antidiagonal(p.lambdas1));
      set_block(f, part, 6, 2, one_by_one(p.gammas[0]));
      set_block(f, part, 7, 3, one_by_one(p.gammas[1]));
      set_block(f, part, 7, 6, one_by_one(p.gammas[2]));
      break;
    case OrbitVariant::SubregularOdd:
      set_block(f, part, 6, 4, antidiagonal(p.lambdas));
      set_block(f, part, 9, 1, antidiagonal(p.lambdas1));
      set_block(f, part, 7, 2, one_by_one(p.gammas[0]));
      set_block(f, part, 8, 3, one_by_one(p.gammas[1]));
      set_block(f, part, 8, 7, one_by_one(p.gammas[2]));
      break;
  }
  return CoadjointElement(std::move(f));
}

std::vector<std::pair<std::size_t, std::size_t>> upper_positions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  pos.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pos.emplace_back(i, j);
  return pos;
}

RationalMatrix skew_form(const CoadjointElement& f) {
  const std::size_t n = f.n();
  const auto pos = upper_positions(n);
  const std::size_t nb = pos.size();
  const RationalMatrix& fm = f.mat();
  RationalMatrix b(nb, nb);
  // pairing(f, [E_ij, E_ab]) = [j==a] f(b,i) - [b==i] f(j,a)
  for (std::size_t r = 0; r < nb; ++r) {
    const auto [i, j] = pos[r];
    for (std::size_t c = 0; c < nb; ++c) {
      const auto [a, bb] = pos[c];
      Rational v;
      if (j == a && bb > i) v += fm.at(bb, i);
      if (bb == i && j > a) v -= fm.at(j, a);
      b.at(r, c) = v;
    }
  }
  return b;
}

std::size_t orbit_dimension(const CoadjointElement& f) { return rank(skew_form(f)); }

StabilizerBasis stabilizer_algebra(const CoadjointElement& f) {
  const std::size_t n = f.n();
  const auto pos = upper_positions(n);
  RationalMatrix kb = kernel_basis(skew_form(f));
  StabilizerBasis basis;
  basis.elements.reserve(kb.cols());
  for (std::size_t v = 0; v < kb.cols(); ++v) {
    RationalMatrix x(n, n);
    for (std::size_t r = 0; r < pos.size(); ++r) x.at(pos[r].first, pos[r].second) = kb.at(r, v);
    basis.elements.push_back(AlgebraElement(std::move(x)));
  }
  return basis;
}

StabilizerBasis predicted_stabilizer(const OrbitParams& p) {
  if (!is_subregular(p.variant))
    throw ConstraintError("predicted stabilizer: only subregular variants have one");
  p.validate();
  const std::size_t n = p.n();
  const BlockPartition part = p.partition();
  const bool even = p.variant == OrbitVariant::SubregularEven;
  // Even blocks: inner antidiagonal system in C45, outer in C18, units
  // in C26, C27, C37, and gamma2 E23 + gamma1 E67.  Odd: C46, C19,
  // C27, C28, C38, and gamma2 E23 + gamma1 E78.
  const std::size_t inner_row = 4, inner_col = even ? 5 : 6;
  const std::size_t outer_col = even ? 8 : 9;
  const std::size_t far_col1 = even ? 6 : 7;   // C26 / C27
  const std::size_t far_col2 = even ? 7 : 8;   // C27 / C28, C37 / C38
  const std::size_t last_row = even ? 6 : 7;   // E67 / E78 row block
  StabilizerBasis basis;
  auto unit_at = [&](std::size_t bi, std::size_t bj, std::size_t li, std::size_t lj) {
    return AlgebraElement::unit(n, part.offset(bi) + li, part.offset(bj) + lj);
  };
  for (std::size_t i = 0; i < p.k; ++i)
    basis.elements.push_back(unit_at(inner_row, inner_col, i, p.k - 1 - i));
  for (std::size_t i = 0; i < p.m; ++i)
    basis.elements.push_back(unit_at(1, outer_col, i, p.m - 1 - i));
  basis.elements.push_back(unit_at(2, far_col1, 0, 0));
  basis.elements.push_back(unit_at(2, far_col2, 0, 0));
  basis.elements.push_back(unit_at(3, far_col2, 0, 0));
  basis.elements.push_back(p.gammas[1] * unit_at(2, 3, 0, 0) +
                           p.gammas[0] * unit_at(last_row, last_row + 1, 0, 0));
  return basis;
}

GroupElement stabilizer_group_sample(const OrbitParams& p, Rng& rng) {
  StabilizerBasis basis = predicted_stabilizer(p);
  RationalMatrix x(p.n(), p.n());
  for (const AlgebraElement& e : basis.elements) x = x + rng.rational(6, 4) * e.mat();
  return GroupElement(RationalMatrix::identity(p.n()) + x);
}

bool same_span(const StabilizerBasis& a, const StabilizerBasis& b, std::size_t n) {
  const auto pos = upper_positions(n);
  auto columns = [&](const StabilizerBasis& s, RationalMatrix& m, std::size_t c0) {
    for (std::size_t v = 0; v < s.elements.size(); ++v) {
      if (s.elements[v].n() != n) throw DimensionError("same_span: element size mismatch");
      for (std::size_t r = 0; r < pos.size(); ++r)
        m.at(r, c0 + v) = s.elements[v].mat().at(pos[r].first, pos[r].second);
    }
  };
  const std::size_t na = a.elements.size(), nb = b.elements.size();
  RationalMatrix joint(pos.size(), na + nb);
  columns(a, joint, 0);
  columns(b, joint, na);
  const std::size_t ra = rank(joint.submatrix(0, pos.size(), 0, na));
  const std::size_t rb = rank(joint.submatrix(0, pos.size(), na, na + nb));
  return ra == rb && rb == rank(joint);
}

}  // namespace ut
