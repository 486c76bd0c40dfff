#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "qrup/fft.hpp"
#include "qrup/random.hpp"

using namespace qrup;

namespace {

// Direct O(N^2) evaluation of the unitary transform; the reference the fast
// path is checked against.
Signal dft_direct(const Signal& f) {
  const int n = static_cast<int>(f.size());
  Signal out(n);
  for (int w = 0; w < n; ++w) {
    Complex acc(0.0, 0.0);
    for (int t = 0; t < n; ++t)
      acc += f(t) * std::polar(1.0, -2.0 * std::numbers::pi * w * t / n);
    out(w) = acc / std::sqrt(static_cast<double>(n));
  }
  return out;
}

Signal random_signal(int n, std::uint64_t seed) {
  Rng rng(seed);
  Signal f(n);
  for (int i = 0; i < n; ++i) f(i) = rng.complex_gaussian(1.0);
  return f;
}

Signal dirac_comb(int n) {
  const int root = static_cast<int>(std::lround(std::sqrt(double(n))));
  REQUIRE(root * root == n);
  Signal f = Signal::Zero(n);
  for (int m = 0; m < root; ++m) f(m * root) = 1.0;
  return f;
}

}  // namespace

TEST_CASE("dft matches the direct evaluation at many lengths") {
  for (int n : {1, 2, 3, 4, 5, 7, 8, 11, 12, 13, 16, 17, 31, 32, 60, 64, 100, 128, 233, 256}) {
    const Signal f = random_signal(n, 100 + static_cast<std::uint64_t>(n));
    const Signal fast = dft(f);
    const Signal direct = dft_direct(f);
    CHECK((fast - direct).norm() <= 1e-11 * std::max(1.0, direct.norm()));
  }
}

TEST_CASE("dirac comb is invariant at N=16") {
  const Signal f = dirac_comb(16);
  const Signal fhat = dft(f);
  CHECK((fhat - f).lpNorm<Eigen::Infinity>() <= 1e-12);
  // and back again through the inverse
  CHECK((idft(f) - f).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("single spike transforms to a flat spectrum") {
  Signal f = Signal::Zero(8);
  f(0) = 1.0;
  const Signal fhat = dft(f);
  for (int w = 0; w < 8; ++w)
    CHECK(std::abs(fhat(w) - Complex(1.0 / std::sqrt(8.0), 0.0)) <= 1e-14);
}

TEST_CASE("flat spectrum inverts to a spike") {
  const int n = 4;
  Signal fhat = Signal::Constant(n, Complex(1.0 / std::sqrt(4.0), 0.0));
  const Signal f = idft(fhat);
  CHECK(std::abs(f(0) - 1.0) <= 1e-14);
  for (int t = 1; t < n; ++t) CHECK(std::abs(f(t)) <= 1e-14);
}

TEST_CASE("unitarity on random signals") {
  for (int n : {7, 64, 100, 256}) {
    const Signal f = random_signal(n, 7);
    CHECK(dft(f).norm() == doctest::Approx(f.norm()).epsilon(1e-12));
  }
}

TEST_CASE("round trip is the identity to 1e-12 relative") {
  for (int n : {12, 128, 129}) {
    const Signal f = random_signal(n, 9);
    CHECK((idft(dft(f)) - f).norm() <= 1e-12 * f.norm());
    CHECK((dft(idft(f)) - f).norm() <= 1e-12 * f.norm());
  }
}

TEST_CASE("parseval holds for inner products") {
  const Signal f = random_signal(33, 1);
  const Signal g = random_signal(33, 2);
  const Complex lhs = dft(f).dot(dft(g));
  const Complex rhs = f.dot(g);
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(dft(Signal()), std::invalid_argument);
  CHECK_THROWS_AS(idft(Signal()), std::invalid_argument);
}
