#pragma once

// Deterministic RNG used across the library.  splitmix64 plus
// Box-Muller rather than std::normal_distribution so that streams are
// identical across standard libraries, and counter-based sample keys
// so that parallel chunks reproduce the serial stream.

#include <cmath>
#include <cstdint>

#include "ut/rational.hpp"

namespace ut {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for one Monte Carlo sample.
  static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; never 0 so it is safe under log().
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [lo, hi].
  long int_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  long nonzero_int_in(long bound) {
    long v = int_in(-bound, bound);
    while (v == 0) v = int_in(-bound, bound);
    return v;
  }

  // Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
  Rational rational(long num_bound, long den_bound) {
    return Rational(int_in(-num_bound, num_bound), int_in(1, den_bound));
  }

  Rational nonzero_rational(long num_bound, long den_bound) {
    return Rational(nonzero_int_in(num_bound), int_in(1, den_bound));
  }

private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ut
