#include "ut/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ut {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw DimensionError("test function: not an above-diagonal position");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

TestFunction::TestFunction(std::size_t n, GaussianFactor all)
    : n_(n), factors_(n * (n - 1) / 2, all) {
  if (all.sigma <= 0) throw ConstraintError("test function: sigma must be positive");
}

const GaussianFactor& TestFunction::factor(std::size_t i, std::size_t j) const {
  return factors_[upper_index(n_, i, j)];
}

void TestFunction::set_factor(std::size_t i, std::size_t j, GaussianFactor f) {
  if (f.sigma <= 0) throw ConstraintError("test function: sigma must be positive");
  factors_[upper_index(n_, i, j)] = f;
}

double TestFunction::value(const std::vector<double>& coords) const {
  if (coords.size() != factors_.size())
    throw DimensionError("test function: coordinate count mismatch");
  double v = 1.0;
  for (std::size_t t = 0; t < coords.size(); ++t) v *= gaussian_value(factors_[t], coords[t]);
  return v;
}

double gaussian_value(const GaussianFactor& f, double x) {
  const double z = (x - f.center) / f.sigma;
  return std::exp(-0.5 * z * z);
}

std::complex<double> gaussian_ft(const GaussianFactor& f, double w) {
  const double amp = f.sigma * std::sqrt(kTau) *
                     std::exp(-0.5 * kTau * kTau * f.sigma * f.sigma * w * w);
  return std::polar(amp, kTau * w * f.center);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order.
struct GLRule {
  std::vector<double> x, w;
};

const GLRule& gl16() {
  static const GLRule rule = [] {
    const int n = 16;
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.x[i] = -x;
      r.x[n - 1 - i] = x;
      r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
  }();
  return rule;
}

// Composite 16-point Gauss-Legendre over [a, b] with the given panel
// count; F takes a double, returns complex.
template <typename F>
std::complex<double> integrate_1d(F&& f, double a, double b, std::size_t panels) {
  const GLRule& r = gl16();
  std::complex<double> acc = 0.0;
  const double step = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + step * static_cast<double>(p);
    const double mid = lo + 0.5 * step, half = 0.5 * step;
    for (std::size_t q = 0; q < r.x.size(); ++q)
      acc += r.w[q] * f(mid + half * r.x[q]);
  }
  return acc * (0.5 * step);
}

std::size_t panels_for(double cycles, std::size_t floor_panels) {
  const double p = std::ceil(cycles / 2.0);
  return std::max<std::size_t>(floor_panels, p > 0 ? static_cast<std::size_t>(p) : 1);
}

// Integral of phi(t) e^{2 pi i w t} dt by quadrature (the analytic
// form exists; this routine is the numerical route tested against it).
std::complex<double> fourier_quad(const GaussianFactor& phi, double w, std::size_t panel_scale) {
  const double lo = phi.center - 12.0 * phi.sigma, hi = phi.center + 12.0 * phi.sigma;
  const std::size_t panels = panel_scale * panels_for(std::abs(w) * (hi - lo), 8);
  return integrate_1d(
      [&](double t) {
        return gaussian_value(phi, t) * std::polar(1.0, kTau * w * t);
      },
      lo, hi, panels);
}

struct CoordLayout {
  // Above-diagonal positions pinned to 0 by the delta factor.
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  // Free coordinates in a fixed order; for n in {4,5} the order is
  // (a, b, c, d) = row-major over the free block.
  std::vector<std::pair<std::size_t, std::size_t>> free;
};

CoordLayout layout_for(const OrbitParams& p) {
  switch (p.n()) {
    case 2: return {{}, {{0, 1}}};
    case 3: return {{{0, 1}}, {{0, 2}, {1, 2}}};
    case 4: return {{{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    case 5:
      return {{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}},
              {{0, 3}, {0, 4}, {1, 3}, {1, 4}}};
    default: throw UnsupportedError("no desk-scale coordinate layout for n > 5");
  }
}

double pins_value(const TestFunction& phi, const CoordLayout& lay) {
  double v = 1.0;
  for (const auto& [i, j] : lay.pins) v *= gaussian_value(phi.factor(i, j), 0.0);
  return v;
}

// 2-D reduced integral for the k=2 variants: after closed-form
// Fourier transforms in the linear-phase coordinates and the
// substitution u = d/c (which cancels the 1/|c| density factor), the
// pairing reduces to
//   int int phi_c(c) phi_d(u c) FT[phi_a](-l1 u) e^{2 pi i l2 c} dc du.
std::complex<double> reduced_2d(const GaussianFactor& fa, const GaussianFactor& fc,
                                const GaussianFactor& fd, double l1, double l2,
                                std::size_t panel_scale) {
  const double clo = fc.center - 12.0 * fc.sigma, chi = fc.center + 12.0 * fc.sigma;
  const double cmax = std::max(std::abs(clo), std::abs(chi));
  const double ubound = 2.0 / (fa.sigma * std::abs(l1));
  const std::size_t pc = panel_scale *
      panels_for((chi - clo) * (std::abs(l2) + ubound / (6.0 * fd.sigma)), 12);
  const std::size_t pu = panel_scale *
      panels_for(2.0 * ubound * (std::abs(l1 * fa.center) + cmax / (6.0 * fd.sigma)), 12);
  return integrate_1d(
      [&](double u) {
        const std::complex<double> fau = gaussian_ft(fa, -l1 * u);
        return fau * integrate_1d(
                         [&](double c) {
                           return gaussian_value(fc, c) * gaussian_value(fd, u * c) *
                                  std::polar(1.0, kTau * l2 * c);
                         },
                         clo, chi, pc);
      },
      -ubound, ubound, pu);
}

std::complex<double> pair_value(const OrbitParams& p, const TestFunction& phi,
                                std::size_t panel_scale) {
  const CoordLayout lay = layout_for(p);
  const double base = pins_value(phi, lay);
  const double l1 = p.lambdas[0].to_double();
  switch (p.n()) {
    case 2:
      return base * fourier_quad(phi.factor(0, 1), l1, panel_scale);
    case 3:
      // (1,2) is a window coordinate of the trace (hence in lay.free)
      // but sits at 0 on the support; its widening limit contributes
      // phi_12(0) along with the 1/|l1| density factor.
      return base * gaussian_value(phi.factor(1, 2), 0.0) / std::abs(l1) *
             fourier_quad(phi.factor(0, 2), l1, panel_scale);
    case 4:
    case 5: {
      const double l2 = p.lambdas[1].to_double();
      const auto& fa = phi.factor(lay.free[0].first, lay.free[0].second);
      const auto& fb = phi.factor(lay.free[1].first, lay.free[1].second);
      const auto& fc = phi.factor(lay.free[2].first, lay.free[2].second);
      const auto& fd = phi.factor(lay.free[3].first, lay.free[3].second);
      std::complex<double> v = base / std::abs(l1) * gaussian_ft(fb, l1) *
                               reduced_2d(fa, fc, fd, l1, l2, panel_scale);
      if (p.n() == 5) v /= std::abs(l1 * l2);
      return v;
    }
    default: throw UnsupportedError("pair_character: unreachable");
  }
}

}  // namespace

MCEstimate pair_character(const OrbitParams& p, const TestFunction& phi) {
  p.validate();
  if (is_subregular(p.variant))
    throw UnsupportedError(
        "pair_character: subregular pairings are verified exactly via the support "
        "system, not numerically");
  if (p.k > 2)
    throw UnsupportedError(
        "pair_character: the k >= 3 density is not absolutely integrable; no "
        "quadrature or sampling estimator is offered");
  if (phi.n() != p.n()) throw DimensionError("pair_character: test function size mismatch");
  const std::complex<double> coarse = pair_value(p, phi, 1);
  const std::complex<double> fine = pair_value(p, phi, 2);
  MCEstimate est;
  est.value = fine;
  est.std_error = std::abs(fine - coarse) + 1e-14 * std::abs(fine);
  est.samples = 0;
  est.seed = 0;
  return est;
}

namespace {

// Linear map from the free coordinates v to the same coordinates of
// h (E + sum v_l E_l) h^{-1}; identity when h is not given.
std::vector<std::vector<double>> conj_transpose_inverse(
    const OrbitParams& p, const CoordLayout& lay, const std::optional<GroupElement>& h) {
  const std::size_t nf = lay.free.size();
  std::vector<std::vector<double>> out(nf, std::vector<double>(nf, 0.0));
  if (!h) {
    for (std::size_t i = 0; i < nf; ++i) out[i][i] = 1.0;
    return out;
  }
  if (h->n() != p.n()) throw DimensionError("operator_trace: conjugator size mismatch");
  const GroupElement hinv = inv(*h);
  RationalMatrix m(nf, nf);
  for (std::size_t l = 0; l < nf; ++l) {
    RationalMatrix unit(p.n(), p.n());
    unit.at(lay.free[l].first, lay.free[l].second) = Rational(1);
    const RationalMatrix img = h->mat() * unit * hinv.mat();
    // The free span must be invariant under this conjugation.
    RationalMatrix residue = img;
    for (std::size_t r = 0; r < nf; ++r) {
      m.at(r, l) = img.at(lay.free[r].first, lay.free[r].second);
      residue.at(lay.free[r].first, lay.free[r].second) = Rational(0);
    }
    if (!residue.is_zero())
      throw ConstraintError("operator_trace: conjugation does not preserve the support span");
  }
  // Columns of m^{-1}, then transposed into rows of the result.
  for (std::size_t j = 0; j < nf; ++j) {
    RationalMatrix e(nf, 1);
    e.at(j, 0) = Rational(1);
    SolveResult s = solve(m, e);
    if (s.status != SolveResult::Status::Unique)
      throw ConstraintError("operator_trace: conjugation map not invertible");
    for (std::size_t i = 0; i < nf; ++i) out[i][j] = s.x.at(i, 0).to_double();
  }
  // out now holds m^{-1}; transpose in place to get (m^{-1})^T = m^{-T}.
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = i + 1; j < nf; ++j) std::swap(out[i][j], out[j][i]);
  return out;
}

// Kahan-compensated so that means of near-identical terms (the n = 2
// estimator is constant) stay at quadrature precision.
struct Accumulator {
  std::complex<double> sum = 0.0, comp = 0.0;
  double sum_sq = 0.0, comp_sq = 0.0;
  void add(std::complex<double> v) {
    const std::complex<double> y = v - comp;
    const std::complex<double> t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    const double ys = std::norm(v) - comp_sq;
    const double ts = sum_sq + ys;
    comp_sq = (ts - sum_sq) - ys;
    sum_sq = ts;
  }
  std::complex<double> mean(std::uint64_t n) const { return sum / static_cast<double>(n); }
  double std_error(std::uint64_t n) const {
    const double m2 = std::norm(mean(n));
    const double var = std::max(0.0, sum_sq / static_cast<double>(n) - m2);
    return std::sqrt(var / static_cast<double>(n));
  }
};

}  // namespace

MCEstimate operator_trace(const OrbitParams& p, const TestFunction& phi,
                          const TraceOptions& opts) {
  p.validate();
  if (is_subregular(p.variant))
    throw UnsupportedError("operator_trace: only regular variants have the kernel-trace form");
  const std::size_t n = p.n();
  if (n > 4)
    throw UnsupportedError(
        "operator_trace: n = " + std::to_string(n) +
        " exceeds the desk-scale limit (n <= 4); the pre-reduction integral dimension "
        "grows too fast for a meaningful estimate");
  if (phi.n() != n) throw DimensionError("operator_trace: test function size mismatch");
  if (opts.samples == 0) throw ConstraintError("operator_trace: samples must be positive");
  if (opts.base_width <= 0) throw ConstraintError("operator_trace: window width must be positive");

  const CoordLayout lay = layout_for(p);
  const double base = pins_value(phi, lay);
  const double l1 = p.lambdas[0].to_double();
  const double l2 = p.k == 2 ? p.lambdas[1].to_double() : 0.0;
  const bool conjugated = opts.conj.has_value();
  const auto minvt = conj_transpose_inverse(p, lay, opts.conj);

  const std::size_t n_windows = n == 2 ? 0 : (n == 3 ? 1 : 2);
  const std::vector<double> widths =
      n_windows == 0 ? std::vector<double>{}
                     : std::vector<double>{opts.base_width, 2 * opts.base_width,
                                           4 * opts.base_width};
  // Lagrange weights at h = 0 through the nodes h0, h0/4, h0/16 with
  // h = W^{-2}: the widening limit of the window regularization.
  const std::vector<double> rich = {1.0 / 45.0, -4.0 / 9.0, 64.0 / 45.0};

  // Phase coefficients of the free coordinates, given the window draws.
  // n=2: (l1) over (c12); n=3: (l1, l1 t) over (c13, c23);
  // n=4: (l1 y, l1, l1 x y + l2, l1 x) over (a, b, c, d).
  auto coeffs = [&](const std::vector<double>& win) {
    switch (n) {
      case 2: return std::vector<double>{l1};
      case 3: return std::vector<double>{l1, l1 * win[0]};
      default:
        return std::vector<double>{l1 * win[1], l1, l1 * win[0] * win[1] + l2, l1 * win[0]};
    }
  };
  // Coordinates with draw-independent phase coefficients are
  // importance-sampled from phi; the ones whose coefficient depends
  // on the window draws are integrated in closed form so the window
  // factors (W sqrt(2 pi)) are damped.  n = 2 has no windowed
  // coordinate at all, so the estimator is deterministic there.  With
  // a conjugator every coordinate is integrated in closed form.
  std::vector<bool> sampled(lay.free.size(), false);
  if (!conjugated) {
    if (n == 3) sampled = {true, false};
    if (n == 4) sampled = {false, true, true, false};
  }

  std::vector<Accumulator> per_window(std::max<std::size_t>(widths.size(), 1));
  Accumulator combo;
  std::vector<double> draws(lay.free.size(), 0.0);
  std::vector<double> zs(n_windows, 0.0), win(n_windows, 0.0);
  std::vector<double> w(lay.free.size(), 0.0), wp(lay.free.size(), 0.0);

  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    Rng rng = Rng::for_sample(opts.seed, s);
    double sampled_base = base;
    for (std::size_t l = 0; l < lay.free.size(); ++l) {
      if (!sampled[l]) continue;
      const GaussianFactor& f = phi.factor(lay.free[l].first, lay.free[l].second);
      draws[l] = f.center + f.sigma * rng.normal();
      sampled_base *= f.sigma * std::sqrt(kTau);
    }
    for (std::size_t t = 0; t < n_windows; ++t) zs[t] = rng.normal();

    std::complex<double> combined = 0.0;
    const std::size_t n_w = widths.empty() ? 1 : widths.size();
    for (std::size_t wi = 0; wi < n_w; ++wi) {
      double window_base = 1.0;
      for (std::size_t t = 0; t < n_windows; ++t) {
        win[t] = widths[wi] * zs[t];
        window_base *= widths[wi] * std::sqrt(kTau);
      }
      w = coeffs(win);
      for (std::size_t i = 0; i < w.size(); ++i) {
        wp[i] = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) wp[i] += minvt[i][j] * w[j];
      }
      std::complex<double> v(sampled_base * window_base, 0.0);
      double phase = 0.0;
      for (std::size_t l = 0; l < lay.free.size(); ++l) {
        if (sampled[l]) {
          phase += wp[l] * draws[l];
        } else {
          v *= gaussian_ft(phi.factor(lay.free[l].first, lay.free[l].second), wp[l]);
        }
      }
      v *= std::polar(1.0, kTau * phase);
      per_window[wi].add(v);
      combined += widths.empty() ? v : rich[wi] * v;
    }
    combo.add(combined);
  }

  MCEstimate est;
  est.value = combo.mean(opts.samples);
  est.std_error = combo.std_error(opts.samples);
  est.samples = opts.samples;
  est.seed = opts.seed;
  for (std::size_t wi = 0; wi < widths.size(); ++wi)
    est.windows.push_back({widths[wi], per_window[wi].mean(opts.samples),
                           per_window[wi].std_error(opts.samples)});
  return est;
}

DeltaReport delta_identity_check(double lambda, const GaussianFactor& phi, double window) {
  if (lambda == 0.0) throw ConstraintError("delta check: lambda must be nonzero");
  const double w = window > 0.0 ? window : 6.0 / std::abs(lambda);
  const double alo = phi.center - 12.0 * phi.sigma, ahi = phi.center + 12.0 * phi.sigma;
  const double xmax = 6.0 * w;
  const double amax = std::max(std::abs(alo), std::abs(ahi));
  // Up to 2.5 oscillation cycles per 16-point panel keeps the panel
  // error orders below the window truncation error.
  const std::size_t pa = panels_for(std::abs(lambda) * xmax * (ahi - alo) * 0.8, 16);
  const std::size_t px = panels_for(std::abs(lambda) * amax * 2.0 * xmax * 0.8, 16);

  // Tensor quadrature of phi(a) e^{2 pi i lambda a x} e^{-x^2/(2 W^2)};
  // precomputed nodes keep the double loop to one complex exponential.
  const GLRule& r = gl16();
  std::vector<double> anode, aweight;
  for (std::size_t pp = 0; pp < pa; ++pp) {
    const double step = (ahi - alo) / static_cast<double>(pa);
    const double mid = alo + step * (static_cast<double>(pp) + 0.5), half = 0.5 * step;
    for (std::size_t q = 0; q < r.x.size(); ++q) {
      anode.push_back(mid + half * r.x[q]);
      aweight.push_back(half * r.w[q] * gaussian_value(phi, anode.back()));
    }
  }
  std::complex<double> acc = 0.0;
  const double xstep = 2.0 * xmax / static_cast<double>(px);
  for (std::size_t pp = 0; pp < px; ++pp) {
    const double mid = -xmax + xstep * (static_cast<double>(pp) + 0.5), half = 0.5 * xstep;
    for (std::size_t q = 0; q < r.x.size(); ++q) {
      const double x = mid + half * r.x[q];
      const double wq = half * r.w[q] * std::exp(-0.5 * x * x / (w * w));
      std::complex<double> inner = 0.0;
      for (std::size_t t = 0; t < anode.size(); ++t)
        inner += aweight[t] * std::polar(1.0, kTau * lambda * anode[t] * x);
      acc += wq * inner;
    }
  }

  DeltaReport rep;
  rep.lambda = lambda;
  rep.window = w;
  rep.estimate = acc;
  rep.reference = gaussian_value(phi, 0.0) / std::abs(lambda);
  rep.rel_error = std::abs(acc - rep.reference) / std::abs(rep.reference);
  return rep;
}

SupportSampler::SupportSampler(OrbitParams p, std::uint64_t seed)
    : p_(std::move(p)), rng_(seed) {
  p_.validate();
  if (!is_subregular(p_.variant))
    throw ConstraintError("support sampler: subregular params required");
}

GroupElement SupportSampler::next() {
  GroupElement s = stabilizer_group_sample(p_, rng_);
  RationalMatrix hm = RationalMatrix::identity(p_.n());
  for (std::size_t i = 0; i < p_.n(); ++i)
    for (std::size_t j = i + 1; j < p_.n(); ++j) hm.at(i, j) = rng_.rational(3, 3);
  return conjugate(GroupElement(std::move(hm)), s);
}

}  // namespace ut
