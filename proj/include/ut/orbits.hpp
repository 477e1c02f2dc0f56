#pragma once

// Canonical regular and subregular coadjoint elements, the skew form
// f([x,y]), orbit dimension, and stabilizer bases (computed and
// closed-form).

#include <array>
#include <cstdint>
#include <vector>

#include "ut/group.hpp"
#include "ut/rng.hpp"

namespace ut {

enum class OrbitVariant { RegularEven, RegularOdd, SubregularEven, SubregularOdd };

bool is_subregular(OrbitVariant v);

struct OrbitParams {
  OrbitVariant variant = OrbitVariant::RegularEven;
  std::size_t k = 0;
  std::size_t m = 0;                 // subregular only
  std::vector<Rational> lambdas;     // antidiagonal of the k-block (regular) or of the inner k-block (subregular)
  std::vector<Rational> lambdas1;    // antidiagonal of the outer m-block, subregular only
  std::array<Rational, 3> gammas{};  // subregular only; gammas[2] unconstrained

  std::size_t n() const;
  BlockPartition partition() const;

  // Throws ConstraintError unless all nonzero-ness and length
  // requirements hold.
  void validate() const;
};

// The unique orbit representative for the given parameters.
CoadjointElement canonical_form(const OrbitParams& p);

// Matrix of B[(i,j),(a,b)] = pairing(f, [E_ij, E_ab]) over the
// n(n-1)/2 strictly-upper positions in lexicographic order.
RationalMatrix skew_form(const CoadjointElement& f);

// Lexicographic strictly-upper positions (0-based), the basis order
// used by skew_form.
std::vector<std::pair<std::size_t, std::size_t>> upper_positions(std::size_t n);

std::size_t orbit_dimension(const CoadjointElement& f);

struct StabilizerBasis {
  std::vector<AlgebraElement> elements;
};

// Exact kernel of the skew form: { x : f([x,y]) = 0 for all y }.
StabilizerBasis stabilizer_algebra(const CoadjointElement& f);

// Closed-form stabilizer basis for the subregular variants: the two
// antidiagonal matrix-unit systems, three corner units, and the
// gamma-weighted combination.
StabilizerBasis predicted_stabilizer(const OrbitParams& p);

// E + (random rational combination of predicted_stabilizer elements);
// fixes canonical_form(p) under coadjoint_act.
GroupElement stabilizer_group_sample(const OrbitParams& p, Rng& rng);

// Exact subspace equality of the two spans inside ut(n).
bool same_span(const StabilizerBasis& a, const StabilizerBasis& b, std::size_t n);

}  // namespace ut
