#include "ut/characters.hpp"

#include <algorithm>
#include <string>

namespace ut {

Rational delta_s(const RationalMatrix& c, std::size_t s) {
  if (!c.is_square()) throw DimensionError("delta_s: block not square");
  const std::size_t k = c.rows();
  if (s < 1 || s > k + 1) throw DimensionError("delta_s: s out of range");
  return det(c.submatrix(s - 1, k, 0, k - s + 1));
}

std::optional<Rational> p_s(const RationalMatrix& c, std::size_t s) {
  const std::size_t k = c.rows();
  if (s < 1 || s > k) throw DimensionError("p_s: s out of range");
  const Rational den = delta_s(c, s + 1);
  if (den.is_zero()) return std::nullopt;
  Rational v = delta_s(c, s) / den;
  return ((k - s) % 2 == 1) ? -v : v;
}

CharacterValue chi_star(const RationalMatrix& c, const std::vector<Rational>& lambdas) {
  if (!c.is_square()) throw DimensionError("chi_star: block not square");
  const std::size_t k = c.rows();
  if (lambdas.size() != k) throw DimensionError("chi_star: lambdas length mismatch");
  Rational mu0(1);
  for (std::size_t s = 1; s <= k; ++s) mu0 *= lambdas[s - 1].abs().pow(static_cast<long>(k - s));
  if (mu0.is_zero())
    throw ConstraintError("chi_star: lambda_1..lambda_{k-1} must be nonzero");
  CharacterValue out;
  out.on_support = true;
  Rational denom = mu0;
  for (std::size_t s = 2; s <= k; ++s) {
    const Rational d = delta_s(c, s);
    if (d.is_zero()) {
      out.singular = true;
      return out;
    }
    denom *= d.abs();
  }
  Rational phase;
  for (std::size_t s = 1; s <= k; ++s) phase += lambdas[s - 1] * *p_s(c, s);
  out.modulus = Rational(1) / denom;
  out.phase = phase.frac();
  return out;
}

namespace {

bool block_is_identity(const GroupElement& g, const BlockPartition& p, std::size_t b) {
  const RationalMatrix blk = block(g.mat(), p, b, b);
  for (std::size_t i = 0; i < blk.rows(); ++i)
    for (std::size_t j = i + 1; j < blk.cols(); ++j)
      if (!blk.at(i, j).is_zero()) return false;
  return true;
}

CharacterValue off_support() {
  CharacterValue v;
  v.on_support = false;
  return v;
}

}  // namespace

CharacterValue regular_character(const GroupElement& g, const OrbitParams& p) {
  p.validate();
  if (is_subregular(p.variant)) throw ConstraintError("regular_character: subregular params");
  if (g.n() != p.n()) throw DimensionError("regular_character: size mismatch");
  const BlockPartition part = p.partition();
  if (p.variant == OrbitVariant::RegularEven) {
    if (!block_is_identity(g, part, 1) || !block_is_identity(g, part, 2)) return off_support();
    return chi_star(block(g.mat(), part, 1, 2), p.lambdas);
  }
  if (!block_is_identity(g, part, 1) || !block_is_identity(g, part, 3) ||
      !block(g.mat(), part, 1, 2).is_zero() || !block(g.mat(), part, 2, 3).is_zero())
    return off_support();
  CharacterValue v = chi_star(block(g.mat(), part, 1, 3), p.lambdas);
  if (v.singular) return v;
  Rational det_l(1);
  for (const Rational& l : p.lambdas) det_l *= l.abs();
  v.modulus /= det_l;
  return v;
}

PhiSet phi_even() { return PhiSet{{{2, 3}, {4, 5}, {6, 7}}}; }
PhiSet phi_odd() { return PhiSet{{{2, 3}, {4, 6}, {7, 8}}}; }

PhiSet phi_subset(std::pair<std::size_t, std::size_t> block_pos, const PhiSet& phi) {
  PhiSet out;
  for (const auto& [a, b] : phi.pairs)
    if (a > block_pos.first && b < block_pos.second) out.pairs.push_back({a, b});
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> block_of(const BlockPartition& part, std::size_t row,
                                             std::size_t col) {
  auto find = [&](std::size_t idx) {
    for (std::size_t b = 1; b <= part.count(); ++b)
      if (idx >= part.offset(b) && idx < part.offset(b) + part.size(b)) return b;
    throw DimensionError("c_tilde: position outside the partition");
  };
  return {find(row), find(col)};
}

void append_range(std::vector<std::size_t>& out, std::size_t from, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) out.push_back(from + i);
}

}  // namespace

std::optional<Rational> c_tilde(const GroupElement& g, const BlockPartition& part,
                                std::size_t row, std::size_t col, const PhiSet& phi) {
  if (g.n() != part.total()) throw DimensionError("c_tilde: partition size mismatch");
  const PhiSet sub = phi_subset(block_of(part, row, col), phi);
  std::vector<std::size_t> rows, cols;
  for (const auto& [a, b] : sub.pairs) {
    append_range(rows, part.offset(a), part.size(a));
    append_range(cols, part.offset(b), part.size(b));
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  const Rational delta = minor_of(g.mat(), rows, cols);
  if (delta.is_zero()) return std::nullopt;
  std::vector<std::size_t> rows2 = rows, cols2 = cols;
  rows2.insert(std::upper_bound(rows2.begin(), rows2.end(), row), row);
  cols2.insert(std::upper_bound(cols2.begin(), cols2.end(), col), col);
  const Rational delta_t = minor_of(g.mat(), rows2, cols2);
  const std::size_t ri = std::lower_bound(rows2.begin(), rows2.end(), row) - rows2.begin();
  const std::size_t ci = std::lower_bound(cols2.begin(), cols2.end(), col) - cols2.begin();
  Rational v = delta_t / delta;
  return ((ri + ci) % 2 == 1) ? -v : v;
}

SupportSystem support_system(const OrbitParams& p) {
  if (!is_subregular(p.variant))
    throw ConstraintError("support_system: only subregular variants have one");
  p.validate();
  const bool even = p.variant == OrbitVariant::SubregularEven;
  const BlockPartition part = p.partition();
  SupportSystem sys;
  sys.denom_blocks = even ? phi_even() : phi_odd();

  const std::vector<std::size_t> diag_blocks =
      even ? std::vector<std::size_t>{1, 4, 5, 8} : std::vector<std::size_t>{1, 4, 6, 9};
  for (std::size_t b : diag_blocks) {
    const std::size_t off = part.offset(b), sz = part.size(b);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) sys.s0.push_back({b, off + i, off + j});
  }

  using BP = std::pair<std::size_t, std::size_t>;
  const std::vector<BP> bullets =
      even ? std::vector<BP>{{1, 2}, {1, 4}, {1, 6}, {3, 4}, {3, 6}, {3, 8},
                             {5, 6}, {5, 8}, {7, 8}}
           : std::vector<BP>{{1, 2}, {1, 4}, {1, 5}, {1, 7}, {3, 4}, {3, 5}, {3, 7}, {3, 9},
                             {4, 5}, {5, 6}, {5, 7}, {5, 9}, {6, 7}, {6, 9}, {8, 9}};
  for (const auto& [bi, bj] : bullets)
    for (std::size_t i = 0; i < part.size(bi); ++i)
      for (std::size_t j = 0; j < part.size(bj); ++j)
        sys.s1.push_back({bi, bj, part.offset(bi) + i, part.offset(bj) + j});

  auto term = [](Rational coeff, std::vector<std::pair<std::size_t, std::size_t>> blocks) {
    return S2Member::Term{std::move(coeff), std::move(blocks)};
  };
  if (even) {
    sys.s2.push_back({{term(1, {{2, 3}, {3, 5}}), term(1, {{2, 4}, {4, 5}})}});
    sys.s2.push_back({{term(1, {{4, 5}, {5, 7}}), term(1, {{4, 6}, {6, 7}})}});
    sys.s2.push_back({{term(p.gammas[0], {{2, 3}}), term(-p.gammas[1], {{6, 7}})}});
  } else {
    sys.s2.push_back({{term(1, {{2, 3}, {3, 6}}), term(1, {{2, 4}, {4, 6}})}});
    sys.s2.push_back({{term(1, {{4, 6}, {6, 8}}), term(1, {{4, 7}, {7, 8}})}});
    sys.s2.push_back({{term(p.gammas[0], {{2, 3}}), term(-p.gammas[1], {{7, 8}})}});
  }
  return sys;
}

RationalMatrix eval_s2(const S2Member& member, const GroupElement& g,
                       const BlockPartition& part) {
  RationalMatrix sum;
  bool first = true;
  for (const auto& t : member.terms) {
    RationalMatrix prod = block(g.mat(), part, t.blocks[0].first, t.blocks[0].second);
    for (std::size_t i = 1; i < t.blocks.size(); ++i)
      prod = prod * block(g.mat(), part, t.blocks[i].first, t.blocks[i].second);
    prod = t.coeff * prod;
    sum = first ? prod : sum + prod;
    first = false;
  }
  return sum;
}

Rational d_of_g(const GroupElement& g, const OrbitParams& p) {
  if (!is_subregular(p.variant)) throw ConstraintError("d_of_g: subregular params required");
  if (g.n() != p.n()) throw DimensionError("d_of_g: size mismatch");
  const BlockPartition part = p.partition();
  const PhiSet phi = p.variant == OrbitVariant::SubregularEven ? phi_even() : phi_odd();
  Rational d(1);
  for (const auto& [a, b] : phi.pairs) d *= det(block(g.mat(), part, a, b));
  return d;
}

SupportStatus support_membership(const GroupElement& g, const OrbitParams& p) {
  if (d_of_g(g, p).is_zero()) return SupportStatus::OutsideLocalization;
  const BlockPartition part = p.partition();
  const SupportSystem sys = support_system(p);
  for (const auto& e : sys.s0)
    if (!g.mat().at(e.row, e.col).is_zero()) return SupportStatus::OffSupport;
  // d(g) != 0 makes every phi-subset minor nonzero, so each c-tilde is
  // defined here.
  for (const auto& e : sys.s1)
    if (!c_tilde(g, part, e.row, e.col, sys.denom_blocks)->is_zero())
      return SupportStatus::OffSupport;
  for (const auto& member : sys.s2)
    if (!eval_s2(member, g, part).is_zero()) return SupportStatus::OffSupport;
  return SupportStatus::OnSupport;
}

CharacterValue subregular_character(const GroupElement& g, const OrbitParams& p,
                                    PhaseRoute route) {
  p.validate();
  if (!is_subregular(p.variant))
    throw ConstraintError("subregular_character: subregular params required");
  if (g.n() != p.n()) throw DimensionError("subregular_character: size mismatch");
  const SupportStatus status = support_membership(g, p);
  if (status == SupportStatus::OutsideLocalization) {
    CharacterValue v = off_support();
    v.outside_localization = true;
    return v;
  }
  if (status == SupportStatus::OffSupport) return off_support();

  const bool even = p.variant == OrbitVariant::SubregularEven;
  const BlockPartition part = p.partition();
  const PhiSet phi = even ? phi_even() : phi_odd();
  const std::size_t outer_col = even ? 8 : 9;
  const std::size_t inner_col = even ? 5 : 6;

  // Matrix of c-tilde values over the far upper-right block.
  RationalMatrix ct(p.m, p.m);
  for (std::size_t i = 0; i < p.m; ++i)
    for (std::size_t j = 0; j < p.m; ++j)
      ct.at(i, j) = *c_tilde(g, part, part.offset(1) + i, part.offset(outer_col) + j, phi);

  CharacterValue chi1 = chi_star(ct, p.lambdas1);
  CharacterValue chi2 = chi_star(block(g.mat(), part, 4, inner_col), p.lambdas);
  if (chi1.singular || chi2.singular) {
    CharacterValue v;
    v.on_support = true;
    v.singular = true;
    return v;
  }

  const Rational d = d_of_g(g, p);
  const Rational c23 = block(g.mat(), part, 2, 3).at(0, 0);
  const std::size_t corner_row = even ? 6 : 7;
  const Rational corner = block(g.mat(), part, corner_row, corner_row + 1).at(0, 0);

  Rational q;
  for (std::size_t t = 3; t <= corner_row; ++t) {
    const RationalMatrix prod =
        block(g.mat(), part, 2, t) * block(g.mat(), part, t, corner_row + 1);
    q += prod.at(0, 0);
  }

  Rational mod0 = Rational(1) /
                  ((p.gammas[0].abs() * p.gammas[1].abs()).pow(static_cast<long>(p.k)) *
                   d.abs().pow(static_cast<long>(p.m)));
  if (!even) mod0 /= p.gammas[0].abs() * c23.abs();

  const Rational ratio =
      route == PhaseRoute::Gamma1OverCorner ? p.gammas[0] / corner : p.gammas[1] / c23;
  const Rational phase0 = ratio * q + p.gammas[2] * corner;

  CharacterValue out;
  out.on_support = true;
  out.modulus = chi1.modulus * chi2.modulus * mod0;
  if (!even) {
    Rational det_l2(1);
    for (const Rational& l : p.lambdas) det_l2 *= l.abs();
    out.modulus /= det_l2;
  }
  out.phase = (chi1.phase + chi2.phase + phase0).frac();
  return out;
}

CharacterValue character_value(const GroupElement& g, const OrbitParams& p) {
  return is_subregular(p.variant) ? subregular_character(g, p) : regular_character(g, p);
}

}  // namespace ut
