// SPDX-License-Identifier: Apache-2.0
//
// Seeded RNG with bit-level reproducible draws. std::normal_distribution and
// friends are implementation-defined, which would break the byte-identical
// report contract, so the mapping from raw mt19937_64 output to doubles is
// done here explicitly.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace gaborlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, n).
  int below(int n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return static_cast<int>(x % un);
  }

  // Standard normal via Box-Muller.
  double gaussian() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gaborlab
