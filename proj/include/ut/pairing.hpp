#pragma once

// Numerical verification harness.  Pairs the exact character
// densities with separable Gaussian test functions (quadrature) and,
// independently, estimates the pre-reduction operator-trace integrals
// by Monte Carlo with Gaussian windows on the oscillatory
// coordinates.  Everything here is double precision; exact rationals
// are converted at the boundary.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ut/characters.hpp"
#include "ut/group.hpp"
#include "ut/orbits.hpp"

namespace ut {

struct GaussianFactor {
  double center = 0.0;
  double sigma = 1.0;  // > 0
};

// Separable product of per-coordinate Gaussians exp(-(x-c)^2/(2 s^2))
// over the above-diagonal coordinates of UT(n).
class TestFunction {
public:
  explicit TestFunction(std::size_t n, GaussianFactor all = {});

  std::size_t n() const { return n_; }
  const GaussianFactor& factor(std::size_t i, std::size_t j) const;
  void set_factor(std::size_t i, std::size_t j, GaussianFactor f);

  double value(const std::vector<double>& coords) const;  // lexicographic order

private:
  std::size_t n_;
  std::vector<GaussianFactor> factors_;  // lexicographic (i,j), i < j
};

double gaussian_value(const GaussianFactor& f, double x);
// Integral of f(x) e^{2 pi i w x} dx, closed form.
std::complex<double> gaussian_ft(const GaussianFactor& f, double w);

struct WindowEstimate {
  double width = 0.0;
  std::complex<double> value;
  double std_error = 0.0;
};

struct MCEstimate {
  std::complex<double> value;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<WindowEstimate> windows;  // per-window diagnostics when windows apply
};

struct TraceOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  double base_width = 3.0;  // W0; windows are {W0, 2W0, 4W0}
  // Optional conjugation h: estimates the pairing against
  // phi(h g h^{-1}) instead of phi.
  std::optional<GroupElement> conj;
};

// Pairing of the character with phi, computed from the exact density
// over the support coordinates: Gaussian Fourier factors in closed
// form plus low-dimensional quadrature.  Regular variants with k <= 2
// (n in {2,3,4,5}); the k >= 3 estimand is not absolutely integrable,
// so no sampling estimator is offered for it.
MCEstimate pair_character(const OrbitParams& p, const TestFunction& phi);

// Monte Carlo estimate of the pre-reduction kernel-trace integral:
// importance sampling from phi's Gaussians in the group coordinates,
// Gaussian windows of widths {W0, 2W0, 4W0} on the oscillatory
// coordinates, and extrapolation of the widening limit in h = W^{-2}.
// Regular variants, n in {2, 3, 4}.
MCEstimate operator_trace(const OrbitParams& p, const TestFunction& phi,
                          const TraceOptions& opts);

struct DeltaReport {
  double lambda = 0.0;
  double window = 0.0;
  std::complex<double> estimate;
  double reference = 0.0;  // phi(0)/|lambda|
  double rel_error = 0.0;
};

// Quadrature evaluation of the double integral
// f(a) e^{2 pi i lambda a x} against a Gaussian window in x, compared
// with the exact limit phi(0)/|lambda|.
DeltaReport delta_identity_check(double lambda, const GaussianFactor& phi,
                                 double window = 0.0 /* 0: auto 6/|lambda| */);

// Exact rational stream h s h^{-1} with s in E + (stabilizer algebra)
// and random unitriangular h.
class SupportSampler {
public:
  SupportSampler(OrbitParams p, std::uint64_t seed);
  GroupElement next();

private:
  OrbitParams p_;
  Rng rng_;
};

}  // namespace ut
