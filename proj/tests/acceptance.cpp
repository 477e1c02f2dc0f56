// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero
// exit when anything fails.  Tolerances and time limits are pinned
// here, not configurable.

#include <chrono>
#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ut/characters.hpp"
#include "ut/orbits.hpp"
#include "ut/pairing.hpp"

using ut::CharacterValue;
using ut::GroupElement;
using ut::OrbitParams;
using ut::OrbitVariant;
using ut::Rational;
using ut::RationalMatrix;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double elapsed, double limit /* <= 0: none */) {
  const bool in_time = limit <= 0 || elapsed <= limit;
  if (!(pass && in_time)) ++g_failures;
  std::ostringstream line;
  line << (pass && in_time ? "[PASS]" : "[FAIL]") << " " << id << " " << name << ": " << detail;
  line << " (" << elapsed << " s";
  if (limit > 0) line << ", limit " << limit << " s";
  line << ")";
  std::puts(line.str().c_str());
}

// --- 1: closed-form stabilizer span ---------------------------------

void criterion_1() {
  Timer t;
  ut::Rng rng(101);
  const std::vector<std::pair<std::size_t, std::size_t>> kms = {{0, 1}, {1, 0}, {1, 1},
                                                                {2, 1}, {1, 2}, {2, 2}};
  int checked = 0, equal = 0;
  for (const OrbitVariant v : {OrbitVariant::SubregularEven, OrbitVariant::SubregularOdd})
    for (const auto& [k, m] : kms)
      for (int trial = 0; trial < 20; ++trial) {
        const OrbitParams p = oracle::random_orbit_params(v, k, m, rng);
        const ut::CoadjointElement f = ut::canonical_form(p);
        ++checked;
        if (ut::same_span(ut::stabilizer_algebra(f), ut::predicted_stabilizer(p), p.n()))
          ++equal;
      }
  std::ostringstream d;
  d << equal << "/" << checked << " random instantiations give equal spans";
  report(1, "stabilizer closed form", equal == checked, d.str(), t.seconds(), 10.0);
}

// --- 2: subregular codimension --------------------------------------

void criterion_2() {
  Timer t;
  ut::Rng rng(102);
  int checked = 0, good = 0;
  for (std::size_t n = 8; n <= 13; ++n) {
    const bool even = n % 2 == 0;
    OrbitParams reg;
    reg.variant = even ? OrbitVariant::RegularEven : OrbitVariant::RegularOdd;
    reg.k = n / 2;
    for (std::size_t i = 0; i < reg.k; ++i) reg.lambdas.push_back(rng.nonzero_rational(5, 3));
    const std::size_t d_reg = ut::orbit_dimension(ut::canonical_form(reg));

    const std::size_t budget = even ? n / 2 - 2 : (n - 5) / 2;  // k + m
    for (std::size_t k = 1; k + 1 <= budget; ++k) {
      const std::size_t m = budget - k;
      const OrbitParams sub = oracle::random_orbit_params(
          even ? OrbitVariant::SubregularEven : OrbitVariant::SubregularOdd, k, m, rng);
      ++checked;
      if (ut::orbit_dimension(ut::canonical_form(sub)) + 2 == d_reg) ++good;
    }
  }
  std::ostringstream d;
  d << good << "/" << checked << " subregular orbits sit two below the regular dimension";
  report(2, "subregular codimension", good == checked && checked > 0, d.str(), t.seconds(),
         0.0);
}

// --- 3: signed minor ratios vs the linear-system oracle -------------

void criterion_3() {
  Timer t;
  ut::Rng rng(103);
  int checked = 0, equal = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    int accepted = 0;
    while (accepted < 100) {
      const RationalMatrix c = oracle::random_matrix(rng, k, k);
      bool chain_ok = true;
      for (std::size_t s = 1; s <= k; ++s)
        if (ut::delta_s(c, s).is_zero()) chain_ok = false;
      if (!chain_ok) continue;
      ++accepted;
      for (std::size_t s = 1; s <= k; ++s) {
        const auto lib = ut::p_s(c, s);
        const auto ora = oracle::cramer_p(c, s);
        ++checked;
        if (lib && ora && *lib == *ora) ++equal;
      }
    }
  }
  std::ostringstream d;
  d << equal << "/" << checked << " ratios match over 100 chain-regular blocks per size";
  report(3, "minor ratios vs linear solve", equal == checked, d.str(), t.seconds(), 5.0);
}

// --- 4: bordered-minor ratios vs the displayed closed forms ---------

void criterion_4() {
  Timer t;
  ut::Rng rng(104);
  OrbitParams p = oracle::random_orbit_params(OrbitVariant::SubregularEven, 1, 1, rng);
  const ut::BlockPartition part = p.partition();
  const ut::PhiSet phi = ut::phi_even();
  int points = 0, checked = 0, equal = 0;
  while (points < 100) {
    const GroupElement g = oracle::random_group(rng, 8);
    std::vector<oracle::CtildeClosedForms> forms;
    try {
      forms = oracle::ctilde_closed_forms(g);
    } catch (const std::domain_error&) {
      continue;  // a denominator minor vanished; resample
    }
    ++points;
    for (const auto& cf : forms) {
      const auto got = ut::c_tilde(g, part, cf.row - 1, cf.col - 1, phi);
      ++checked;
      if (got && *got == cf.value) ++equal;
    }
  }
  std::ostringstream d;
  d << equal << "/" << checked << " closed-form values reproduced at 100 random points";
  report(4, "bordered-minor ground truth", equal == checked, d.str(), t.seconds(), 5.0);
}

// --- 5: conjugated stabilizer samples satisfy the support system ----

void criterion_5() {
  Timer t;
  ut::Rng prng(105);
  int failures = 0, on = 0, outside = 0;
  for (const OrbitVariant v : {OrbitVariant::SubregularEven, OrbitVariant::SubregularOdd})
    for (const auto& [k, m] :
         std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}}) {
      const OrbitParams p = oracle::random_orbit_params(v, k, m, prng);
      ut::SupportSampler sampler(p, 1050 + static_cast<std::uint64_t>(k * 10 + m));
      for (int s = 0; s < 200; ++s) {
        const GroupElement g = sampler.next();
        const ut::SupportStatus st = ut::support_membership(g, p);
        if (ut::d_of_g(g, p).is_zero()) {
          st == ut::SupportStatus::OutsideLocalization ? ++outside : ++failures;
        } else {
          st == ut::SupportStatus::OnSupport ? ++on : ++failures;
        }
      }
    }
  std::ostringstream d;
  d << failures << " failures over 800 samples (" << on << " on-support, " << outside
    << " outside the localization)";
  report(5, "support zero set", failures == 0, d.str(), t.seconds(), 60.0);
}

// --- 6: trace vs pairing over (lambda, phi) grids --------------------

struct TraceConfig {
  std::vector<Rational> lambdas;
  ut::TestFunction phi;
  std::uint64_t seed;
};

std::vector<TraceConfig> configs_for(std::size_t n) {
  auto mk = [&](std::vector<Rational> ls, double sigma,
                std::vector<std::tuple<std::size_t, std::size_t, double, double>> tweaks,
                std::uint64_t seed) {
    ut::TestFunction phi(n, {0.0, sigma});
    for (const auto& [i, j, c, s] : tweaks) phi.set_factor(i, j, {c, s});
    return TraceConfig{std::move(ls), std::move(phi), seed};
  };
  switch (n) {
    case 2:
      return {mk({Rational(1)}, 0.25, {}, 601),
              mk({Rational(1, 2)}, 0.3, {{0, 1, 0.4, 0.3}}, 602),
              mk({Rational(3)}, 0.2, {}, 603),
              mk({Rational(-2)}, 0.25, {}, 604),
              mk({Rational(5, 4)}, 0.35, {{0, 1, -0.2, 0.35}}, 605)};
    case 3:
      return {mk({Rational(1)}, 0.25, {{1, 2, 0.6, 0.25}}, 611),
              mk({Rational(1, 2)}, 0.3, {}, 612),
              mk({Rational(-1)}, 0.25, {{0, 2, 0.4, 0.25}}, 613),
              mk({Rational(3, 2)}, 0.2, {{0, 1, 0.5, 0.2}}, 614),
              mk({Rational(2)}, 0.15, {}, 615)};
    default:
      return {mk({Rational(1, 2), Rational(1, 2)}, 0.25, {}, 621),
              mk({Rational(1), Rational(1)}, 0.2, {}, 622),
              mk({Rational(1, 2), Rational(-1, 2)}, 0.3, {}, 623),
              mk({Rational(3, 4), Rational(1, 2)}, 0.25, {{2, 3, 0.3, 0.25}}, 624),
              mk({Rational(1), Rational(1, 2)}, 0.25, {{0, 3, 0.3, 0.25}}, 625)};
  }
}

ut::MCEstimate run_trace(std::size_t n, const TraceConfig& c, std::uint64_t samples) {
  OrbitParams p;
  p.variant = n % 2 == 0 ? OrbitVariant::RegularEven : OrbitVariant::RegularOdd;
  p.k = n / 2;
  p.lambdas = c.lambdas;
  ut::TraceOptions opts;
  opts.samples = samples;
  opts.seed = c.seed;
  return ut::operator_trace(p, c.phi, opts);
}

void criterion_6() {
  Timer t;
  const std::uint64_t samples = 1000000;
  int checked = 0, good = 0;
  std::ostringstream worst;
  for (const std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
    for (const TraceConfig& c : configs_for(n)) {
      OrbitParams p;
      p.variant = n % 2 == 0 ? OrbitVariant::RegularEven : OrbitVariant::RegularOdd;
      p.k = n / 2;
      p.lambdas = c.lambdas;
      const ut::MCEstimate tr = run_trace(n, c, samples);
      const ut::MCEstimate pr = ut::pair_character(p, c.phi);
      const double diff = std::abs(tr.value - pr.value);
      const double gate =
          n == 2 ? 1e-12 : 3.0 * std::hypot(tr.std_error, pr.std_error);
      ++checked;
      if (diff <= gate)
        ++good;
      else
        worst << " [n=" << n << " seed=" << c.seed << " diff=" << diff << " > " << gate << "]";
    }
  }
  std::ostringstream d;
  d << good << "/" << checked << " configurations agree (n=2 to 1e-12, else 3 sigma, 1e6 samples)"
    << worst.str();
  report(6, "trace vs pairing", good == checked, d.str(), t.seconds(), 600.0);
}

// --- 7: windowed delta identity --------------------------------------

void criterion_7() {
  Timer t;
  double worst = 0.0;
  for (const double lambda : {0.5, 1.0, 3.0}) {
    const ut::DeltaReport rep = ut::delta_identity_check(lambda, {0.0, 1.0});
    if (rep.rel_error > worst) worst = rep.rel_error;
  }
  std::ostringstream d;
  d << "worst relative error " << worst << " against 1e-3";
  report(7, "delta identity", worst < 1e-3, d.str(), t.seconds(), 10.0);
}

// --- 8: the two subregular phase routes ------------------------------

void criterion_8() {
  Timer t;
  ut::Rng prng(108);
  const OrbitParams p = oracle::random_orbit_params(OrbitVariant::SubregularEven, 1, 1, prng);
  ut::SupportSampler sampler(p, 1080);
  int on = 0, equal = 0, attempts = 0;
  while (on < 100 && attempts < 2000) {
    ++attempts;
    const GroupElement g = sampler.next();
    if (ut::d_of_g(g, p).is_zero()) continue;
    const CharacterValue a = ut::subregular_character(g, p, ut::PhaseRoute::Gamma1OverCorner);
    const CharacterValue b = ut::subregular_character(g, p, ut::PhaseRoute::Gamma2OverC23);
    if (a.singular || b.singular) continue;
    ++on;
    if (a.modulus == b.modulus && a.phase == b.phase) ++equal;
  }
  std::ostringstream d;
  d << equal << "/" << on << " on-support samples give identical phase by either route";
  report(8, "phase route agreement", on == 100 && equal == on, d.str(), t.seconds(), 0.0);
}

// --- 9: seeded reruns match digit for digit --------------------------

void criterion_9() {
  Timer t;
  bool pass = true;
  for (const std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
    const TraceConfig c = configs_for(n).front();
    const ut::MCEstimate a = run_trace(n, c, 200000);
    const ut::MCEstimate b = run_trace(n, c, 200000);
    if (!(a.value == b.value && a.std_error == b.std_error)) pass = false;
  }
  {
    OrbitParams p;
    p.variant = OrbitVariant::RegularEven;
    p.k = 2;
    p.lambdas = {Rational(1, 2), Rational(1, 2)};
    const ut::TestFunction phi(4, {0.0, 0.25});
    const ut::MCEstimate a = ut::pair_character(p, phi);
    const ut::MCEstimate b = ut::pair_character(p, phi);
    if (a.value != b.value) pass = false;
    const ut::DeltaReport ra = ut::delta_identity_check(1.0, {0.0, 1.0});
    const ut::DeltaReport rb = ut::delta_identity_check(1.0, {0.0, 1.0});
    if (ra.estimate != rb.estimate) pass = false;
  }
  report(9, "seeded determinism", pass,
         pass ? "trace, pairing and delta reruns are bit-identical"
              : "a rerun diverged from its first result",
         t.seconds(), 0.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::puts("all criteria passed");
  return 0;
}
