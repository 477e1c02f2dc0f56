#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "ut/characters.hpp"
#include "ut/errors.hpp"
#include "ut/pairing.hpp"

using ut::GaussianFactor;
using ut::OrbitParams;
using ut::OrbitVariant;
using ut::Rational;
using ut::TestFunction;
using ut::TraceOptions;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

OrbitParams regular(std::size_t n, std::vector<Rational> lambdas) {
  OrbitParams p;
  p.variant = n % 2 == 0 ? OrbitVariant::RegularEven : OrbitVariant::RegularOdd;
  p.k = n / 2;
  p.lambdas = std::move(lambdas);
  return p;
}

std::complex<double> simpson_ft(const GaussianFactor& f, double w) {
  const double lo = f.center - 14.0 * f.sigma, hi = f.center + 14.0 * f.sigma;
  const int steps = 40000;
  const double h = (hi - lo) / steps;
  std::complex<double> acc = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + h * i;
    const double weight = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += weight * ut::gaussian_value(f, x) * std::polar(1.0, kTau * w * x);
  }
  return acc * (h / 3.0);
}

// The windowed double integral of the delta-identity check in closed
// form: one Gaussian transform inside another.
double windowed_delta_closed(double lambda, const GaussianFactor& f, double w) {
  const double alpha = 2.0 * std::numbers::pi * std::numbers::pi * f.sigma * f.sigma *
                           lambda * lambda +
                       0.5 / (w * w);
  const double beta = kTau * f.center * lambda;
  return f.sigma * std::sqrt(kTau) * std::sqrt(std::numbers::pi / alpha) *
         std::exp(-beta * beta / (4.0 * alpha));
}

}  // namespace

TEST_CASE("gaussian transform matches quadrature and the closed form") {
  const GaussianFactor f{0.6, 0.35};
  for (double w : {0.0, 0.5, -1.5, 2.5}) {
    const auto lib = ut::gaussian_ft(f, w);
    CHECK(std::abs(lib - simpson_ft(f, w)) < 1e-10);
    CHECK(std::abs(lib - oracle::gaussian_ft_closed(f.center, f.sigma, w)) < 1e-14);
  }
  CHECK(ut::gaussian_value(f, f.center) == 1.0);
}

TEST_CASE("test function is a product over the above-diagonal coordinates") {
  TestFunction phi(3, {0.1, 0.5});
  phi.set_factor(0, 2, {1.0, 0.2});
  CHECK(phi.factor(0, 2).center == 1.0);
  CHECK(phi.factor(0, 1).center == 0.1);
  const double direct = ut::gaussian_value(phi.factor(0, 1), 0.3) *
                        ut::gaussian_value(phi.factor(0, 2), -0.2) *
                        ut::gaussian_value(phi.factor(1, 2), 0.9);
  CHECK(phi.value({0.3, -0.2, 0.9}) == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(phi.value({0.0, 0.0}), ut::DimensionError);
  CHECK_THROWS_AS(phi.factor(1, 1), ut::DimensionError);
  CHECK_THROWS_AS(phi.set_factor(0, 1, {0.0, -1.0}), ut::ConstraintError);
  CHECK_THROWS_AS(TestFunction(2, {0.0, 0.0}), ut::ConstraintError);
}

TEST_CASE("n=2 pairing equals the analytic transform") {
  OrbitParams p = regular(2, {Rational(3, 2)});
  TestFunction phi(2);
  phi.set_factor(0, 1, {0.4, 0.3});
  const auto est = ut::pair_character(p, phi);
  const auto exact = ut::gaussian_ft(phi.factor(0, 1), 1.5);
  CHECK(std::abs(est.value - exact) < 1e-10);
  CHECK(est.std_error < 1e-10);
  CHECK(est.samples == 0);
}

TEST_CASE("n=3 pairing pins both vanishing coordinates of the support") {
  OrbitParams p = regular(3, {Rational(5, 4)});
  TestFunction phi(3, {0.0, 0.25});
  phi.set_factor(0, 1, {0.5, 0.2});
  phi.set_factor(1, 2, {0.8, 0.3});
  phi.set_factor(0, 2, {-0.3, 0.4});
  const auto est = ut::pair_character(p, phi);
  const std::complex<double> exact = ut::gaussian_value(phi.factor(0, 1), 0.0) *
                                     ut::gaussian_value(phi.factor(1, 2), 0.0) *
                                     ut::gaussian_ft(phi.factor(0, 2), 1.25) / 1.25;
  CHECK(std::abs(est.value - exact) < 1e-9 * std::abs(exact) + 1e-13);
}

TEST_CASE("n=2 trace is deterministic and equals the pairing") {
  OrbitParams p = regular(2, {Rational(-2, 3)});
  TestFunction phi(2);
  phi.set_factor(0, 1, {-0.2, 0.5});
  const auto t = ut::operator_trace(p, phi, {.samples = 64, .seed = 9});
  CHECK(t.std_error < 1e-12);
  CHECK(t.windows.empty());
  CHECK(std::abs(t.value - ut::gaussian_ft(phi.factor(0, 1), -2.0 / 3.0)) < 1e-12);
}

TEST_CASE("trace and pairing agree within noise for off-center factors") {
  SUBCASE("n=3") {
    OrbitParams p = regular(3, {Rational(1)});
    TestFunction phi(3, {0.0, 0.25});
    phi.set_factor(1, 2, {0.6, 0.3});
    phi.set_factor(0, 2, {0.2, 0.3});
    const auto pair = ut::pair_character(p, phi);
    const auto tr = ut::operator_trace(p, phi, {.samples = 120000, .seed = 5});
    const double gate = 3.0 * std::hypot(tr.std_error, pair.std_error) + 1e-9;
    CHECK(std::abs(tr.value - pair.value) < gate);
    CHECK(tr.windows.size() == 3);
  }
  SUBCASE("n=4") {
    OrbitParams p = regular(4, {Rational(1, 2), Rational(1, 2)});
    TestFunction phi(4, {0.0, 0.25});
    phi.set_factor(0, 1, {0.3, 0.25});
    phi.set_factor(1, 3, {-0.2, 0.3});
    const auto pair = ut::pair_character(p, phi);
    const auto tr = ut::operator_trace(p, phi, {.samples = 150000, .seed = 11});
    const double gate = 3.0 * std::hypot(tr.std_error, pair.std_error) + 1e-9;
    CHECK(std::abs(tr.value - pair.value) < gate);
  }
}

TEST_CASE("trace is invariant under conjugation of the test function") {
  OrbitParams p = regular(3, {Rational(1)});
  TestFunction phi(3, {0.0, 0.3});
  ut::Rng rng(23);
  const ut::GroupElement h = oracle::random_group(rng, 3, 2, 2);
  TraceOptions opts{.samples = 80000, .seed = 17};
  opts.conj = h;
  const auto tr = ut::operator_trace(p, phi, opts);
  const auto pair = ut::pair_character(p, phi);
  CHECK(std::abs(tr.value - pair.value) <
        3.0 * std::hypot(tr.std_error, pair.std_error) + 1e-9);
}

TEST_CASE("standard error scales like one over root samples") {
  OrbitParams p = regular(3, {Rational(1)});
  TestFunction phi(3, {0.0, 0.25});
  const auto a = ut::operator_trace(p, phi, {.samples = 20000, .seed = 3});
  const auto b = ut::operator_trace(p, phi, {.samples = 80000, .seed = 3});
  const double ratio = b.std_error / a.std_error;
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);
}

TEST_CASE("the extrapolated value is the pinned combination of the windows") {
  OrbitParams p = regular(4, {Rational(1), Rational(1)});
  TestFunction phi(4, {0.0, 0.25});
  const auto t = ut::operator_trace(p, phi, {.samples = 20000, .seed = 7});
  REQUIRE(t.windows.size() == 3);
  CHECK(t.windows[0].width == doctest::Approx(3.0));
  CHECK(t.windows[1].width == doctest::Approx(6.0));
  CHECK(t.windows[2].width == doctest::Approx(12.0));
  const std::complex<double> combo = (1.0 / 45.0) * t.windows[0].value -
                                     (4.0 / 9.0) * t.windows[1].value +
                                     (64.0 / 45.0) * t.windows[2].value;
  CHECK(std::abs(t.value - combo) < 1e-10 * (1.0 + std::abs(combo)));
}

TEST_CASE("identical seeds reproduce the estimate bit for bit") {
  OrbitParams p = regular(4, {Rational(1), Rational(1)});
  TestFunction phi(4, {0.0, 0.25});
  const auto a = ut::operator_trace(p, phi, {.samples = 5000, .seed = 42});
  const auto b = ut::operator_trace(p, phi, {.samples = 5000, .seed = 42});
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  const auto c = ut::operator_trace(p, phi, {.samples = 5000, .seed = 43});
  CHECK(a.value != c.value);
}

TEST_CASE("out-of-scope requests are refused rather than approximated") {
  ut::Rng rng(31);
  const OrbitParams big = regular(5, {Rational(1), Rational(1)});
  CHECK_THROWS_AS(ut::operator_trace(big, TestFunction(5), {}), ut::UnsupportedError);
  CHECK_NOTHROW(ut::pair_character(big, TestFunction(5)));

  const OrbitParams deep = regular(6, {Rational(1), Rational(1), Rational(1)});
  CHECK_THROWS_AS(ut::pair_character(deep, TestFunction(6)), ut::UnsupportedError);

  const OrbitParams sub =
      oracle::random_orbit_params(OrbitVariant::SubregularEven, 1, 1, rng);
  CHECK_THROWS_AS(ut::pair_character(sub, TestFunction(8)), ut::UnsupportedError);
  CHECK_THROWS_AS(ut::operator_trace(sub, TestFunction(8), {}), ut::UnsupportedError);

  const OrbitParams p2 = regular(2, {Rational(1)});
  CHECK_THROWS_AS(ut::operator_trace(p2, TestFunction(2), {.samples = 0}),
                  ut::ConstraintError);
  CHECK_THROWS_AS(
      ut::operator_trace(p2, TestFunction(2), {.samples = 10, .seed = 1, .base_width = -1.0}),
      ut::ConstraintError);
  CHECK_THROWS_AS(ut::operator_trace(p2, TestFunction(3), {}), ut::DimensionError);
  CHECK_THROWS_AS(ut::pair_character(p2, TestFunction(3)), ut::DimensionError);
}

TEST_CASE("windowed oscillatory integral collapses to the point evaluation") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    const GaussianFactor f{0.3, 1.0};
    const auto rep = ut::delta_identity_check(lambda, f);
    CHECK(rep.window == doctest::Approx(6.0 / lambda));
    CHECK(rep.reference == doctest::Approx(ut::gaussian_value(f, 0.0) / lambda));
    CHECK(rep.rel_error < 1e-3);
    const double closed = windowed_delta_closed(lambda, f, rep.window);
    CHECK(std::abs(rep.estimate - std::complex<double>(closed)) < 1e-6 * closed);
  }
  // narrow factors keep quadrature accuracy even though the window
  // truncation floor (~ 1/(8 pi^2 s^2 l^2 W^2)) is larger
  const GaussianFactor narrow_f{-0.2, 0.4};
  const auto rep = ut::delta_identity_check(2.0, narrow_f);
  const double closed = windowed_delta_closed(2.0, narrow_f, rep.window);
  CHECK(std::abs(rep.estimate - std::complex<double>(closed)) < 1e-6 * closed);
  CHECK_THROWS_AS(ut::delta_identity_check(0.0, {}), ut::ConstraintError);
  // wider window: closer to the limit
  const auto wide = ut::delta_identity_check(1.0, {0.0, 0.25}, 14.0);
  const auto base = ut::delta_identity_check(1.0, {0.0, 0.25});
  CHECK(wide.rel_error < base.rel_error);
}

TEST_CASE("support stream stays inside the support set") {
  ut::Rng rng(77);
  const OrbitParams p = oracle::random_orbit_params(OrbitVariant::SubregularOdd, 1, 1, rng);
  ut::SupportSampler sampler(p, 19);
  for (int t = 0; t < 20; ++t) {
    const ut::GroupElement g = sampler.next();
    CHECK(ut::support_membership(g, p) != ut::SupportStatus::OffSupport);
  }
  const OrbitParams reg = regular(2, {Rational(1)});
  CHECK_THROWS_AS(ut::SupportSampler(reg, 1), ut::ConstraintError);
}
