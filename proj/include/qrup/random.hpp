#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace qrup {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a salt. Used to
// decouple e.g. support draws from coefficient draws within one trial.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return splitmix64(base ^ splitmix64(salt));
}

// Deterministic random source. mt19937_64 is bit-specified by the standard;
// Gaussians are drawn by Box-Muller on the raw uniforms because
// std::normal_distribution is not bit-stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Complex Gaussian with independent N(0, sigma_component^2) parts.
  std::complex<double> complex_gaussian(double sigma_component) {
    double re = gaussian();
    double im = gaussian();
    return {sigma_component * re, sigma_component * im};
  }

  // e^{i theta}, theta uniform on [0, 2 pi).
  std::complex<double> unit_phase() {
    double theta = 2.0 * std::numbers::pi * uniform();
    return {std::cos(theta), std::sin(theta)};
  }

  // Uniform integer in [0, bound), rejection sampled.
  int below(int bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = (~0ull / b) * b;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return static_cast<int>(x % b);
  }

  // Sorted uniform k-subset of [0, n), partial Fisher-Yates.
  std::vector<int> subset(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("Rng::subset: k out of range");
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + below(n - i);
      std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qrup
