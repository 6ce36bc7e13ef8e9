#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace wmono {

// Deterministic random source. Gaussian variates are generated from raw
// mt19937_64 output via Box-Muller so a given seed produces the identical
// stream on every platform (std::normal_distribution is
// implementation-defined and would not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian();

  // Independent standard normal real and imaginary parts.
  std::complex<double> gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

// Seed-splitting rule used by every consumer of randomness:
//   derive_seed(master, path, index) = splitmix64(splitmix64(master ^ fnv1a64(path)) ^ index)
// A stable path string per call site keeps streams independent and makes any
// run reproducible from the single master seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view path, std::uint64_t index = 0);

}  // namespace wmono
