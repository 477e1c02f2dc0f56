#pragma once

// Distributional character values for regular and subregular orbits:
// a support predicate plus an exact density (modulus, phase) on the
// support.  Includes the minor machinery: the lower-left minor chain
// Delta_s, the signed ratios P_s, the bordered-minor ratios c-tilde,
// the support system S = {S0, S1, S2} and the localization
// denominator d(g).

#include <optional>
#include <utility>
#include <vector>

#include "ut/group.hpp"
#include "ut/orbits.hpp"

namespace ut {

// value = modulus * e^{2 pi i phase}, both exact rationals.
struct CharacterValue {
  bool on_support = false;
  bool singular = false;              // a required minor vanished; value undefined
  bool outside_localization = false;  // d(g) = 0; subregular only
  Rational modulus;                   // valid when on_support && !singular
  Rational phase;                     // in [0, 1)
};

// Lower-left minor of a k x k block: rows s..k, columns 1..k-s+1
// (1-based); s = k+1 gives the empty minor, which is 1.
Rational delta_s(const RationalMatrix& c, std::size_t s);

// (-1)^{k-s} delta_s / delta_{s+1}; nullopt when delta_{s+1} = 0.
std::optional<Rational> p_s(const RationalMatrix& c, std::size_t s);

// Density factor of the regular character: modulus
// 1/(mu0 |Delta_2 ... Delta_k|) with mu0 = |l1^{k-1} ... lk^0|, phase
// frac(l1 P1 + ... + lk Pk).  Singular when some Delta_{s+1} = 0.
CharacterValue chi_star(const RationalMatrix& c, const std::vector<Rational>& lambdas);

CharacterValue regular_character(const GroupElement& g, const OrbitParams& p);

// Ordered pairs of (blockRow, blockCol) whose blocks carry the
// localization denominators.
struct PhiSet {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

PhiSet phi_even();  // {(2,3),(4,5),(6,7)}
PhiSet phi_odd();   // {(2,3),(4,6),(7,8)}

// Pairs (a,b) of phi with a > blockRow and b < blockCol.
PhiSet phi_subset(std::pair<std::size_t, std::size_t> block_pos, const PhiSet& phi);

// The signed bordered-minor ratio for the entry of g at the 0-based
// global position (row, col): +/- Delta(c)^{-1} Delta~(c), where
// Delta(c) is the minor on the rows/columns of the phi-subset blocks,
// Delta~(c) adds c's row and column, and the sign is c's cofactor
// sign inside Delta~(c).  nullopt when Delta(c) = 0.
std::optional<Rational> c_tilde(const GroupElement& g, const BlockPartition& part,
                                std::size_t row, std::size_t col, const PhiSet& phi);

struct S0Entry {
  std::size_t block;     // diagonal block index
  std::size_t row, col;  // 0-based global position
};

struct CtildeDescriptor {
  std::size_t block_row, block_col;
  std::size_t row, col;  // 0-based global position
};

// Sum of scalar-coefficient products of blocks; evaluates to a matrix
// that must vanish on the support.
struct S2Member {
  struct Term {
    Rational coeff;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
  };
  std::vector<Term> terms;
};

struct SupportSystem {
  std::vector<S0Entry> s0;
  std::vector<CtildeDescriptor> s1;
  std::vector<S2Member> s2;  // exactly 3
  PhiSet denom_blocks;
};

SupportSystem support_system(const OrbitParams& p);

RationalMatrix eval_s2(const S2Member& member, const GroupElement& g, const BlockPartition& part);

// Product of the determinants of the phi (resp. phi') blocks.
Rational d_of_g(const GroupElement& g, const OrbitParams& p);

enum class SupportStatus { OnSupport, OffSupport, OutsideLocalization };

// OnSupport iff d(g) != 0 and every member of S0, S1, S2 vanishes.
SupportStatus support_membership(const GroupElement& g, const OrbitParams& p);

// Which equivalent quotient feeds the subregular phase; the two agree
// on the support because gamma1*C23 - gamma2*C(corner) lies in S2.
enum class PhaseRoute { Gamma1OverCorner, Gamma2OverC23 };

CharacterValue subregular_character(const GroupElement& g, const OrbitParams& p,
                                    PhaseRoute route = PhaseRoute::Gamma1OverCorner);

// Dispatches on p.variant.
CharacterValue character_value(const GroupElement& g, const OrbitParams& p);

}  // namespace ut
