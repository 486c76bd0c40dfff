#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrup/dictionary.hpp"
#include "qrup/fft.hpp"
#include "qrup/random.hpp"

using namespace qrup;

namespace {

Signal random_signal(int n, std::uint64_t seed) {
  Rng rng(seed);
  Signal f(n);
  for (int i = 0; i < n; ++i) f(i) = rng.complex_gaussian(1.0);
  return f;
}

CVec random_coeffs(int m, std::uint64_t seed) {
  Rng rng(seed);
  CVec a(m);
  for (int i = 0; i < m; ++i) a(i) = rng.complex_gaussian(1.0);
  return a;
}

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(PairDictionary::make(1, DictionaryKind::spike_fourier),
                  std::invalid_argument);
  CHECK_THROWS_AS(PairDictionary::make(8, DictionaryKind::spike_random),
                  std::invalid_argument);  // seed required
  CHECK_NOTHROW(PairDictionary::make(8, DictionaryKind::spike_random, 3));
}

TEST_CASE("spike-fourier synthesize of a basis-1 unit coefficient is a spike") {
  const auto d = PairDictionary::make(8, DictionaryKind::spike_fourier);
  CVec a = CVec::Zero(16);
  a(3) = 1.0;
  const Signal f = d.synthesize(a);
  CHECK(std::abs(f(3) - 1.0) <= 1e-15);
  CHECK(f.norm() == doctest::Approx(1.0));
}

TEST_CASE("spike-fourier synthesize of the zero-frequency atom is constant") {
  const auto d = PairDictionary::make(4, DictionaryKind::spike_fourier);
  CVec a = CVec::Zero(8);
  a(4) = 1.0;  // basis-2 atom w = 0
  const Signal f = d.synthesize(a);
  for (int t = 0; t < 4; ++t) CHECK(std::abs(f(t) - 0.5) <= 1e-14);
}

TEST_CASE("synthesize is linear and zero maps to zero") {
  const auto d = PairDictionary::make(16, DictionaryKind::spike_fourier);
  CHECK(d.synthesize(CVec(CVec::Zero(32))).norm() == 0.0);
  const CVec a = random_coeffs(32, 5);
  const CVec b = random_coeffs(32, 6);
  const Signal lhs = d.synthesize(CVec(a + 2.0 * b));
  const Signal rhs = d.synthesize(a) + 2.0 * d.synthesize(b);
  CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
}

TEST_CASE("analyze of a spike: unit in block 1, constant 1/2 in block 2 (N=4)") {
  const auto d = PairDictionary::make(4, DictionaryKind::spike_fourier);
  Signal f = Signal::Zero(4);
  f(0) = 1.0;
  const CVec p = d.analyze(f);
  CHECK(std::abs(p(0) - 1.0) <= 1e-15);
  for (int t = 1; t < 4; ++t) CHECK(std::abs(p(t)) <= 1e-15);
  for (int w = 0; w < 4; ++w) CHECK(std::abs(p(4 + w) - 0.5) <= 1e-14);
}

TEST_CASE("analyze doubles the energy and analyze(0) = 0") {
  for (auto kind : {DictionaryKind::spike_fourier, DictionaryKind::spike_random}) {
    const auto d = kind == DictionaryKind::spike_random
                       ? PairDictionary::make(32, kind, 11)
                       : PairDictionary::make(32, kind);
    CHECK(d.analyze(Signal(Signal::Zero(32))).norm() == 0.0);
    const Signal f = random_signal(32, 21);
    CHECK(d.analyze(f).squaredNorm() ==
          doctest::Approx(2.0 * f.squaredNorm()).epsilon(1e-12));
  }
}

TEST_CASE("tight frame: synthesize(analyze(f)) = 2f") {
  for (auto kind : {DictionaryKind::spike_fourier, DictionaryKind::spike_random}) {
    const auto d = kind == DictionaryKind::spike_random
                       ? PairDictionary::make(24, kind, 4)
                       : PairDictionary::make(24, kind);
    const Signal f = random_signal(24, 31);
    CHECK((d.synthesize(d.analyze(f)) - 2.0 * f).norm() <= 1e-10 * f.norm());
  }
}

TEST_CASE("adjoint identity <synthesize(a), f> = <a, analyze(f)>") {
  for (auto kind : {DictionaryKind::spike_fourier, DictionaryKind::spike_random}) {
    const auto d = kind == DictionaryKind::spike_random
                       ? PairDictionary::make(20, kind, 9)
                       : PairDictionary::make(20, kind);
    for (std::uint64_t s = 0; s < 8; ++s) {
      const CVec a = random_coeffs(40, 100 + s);
      const Signal f = random_signal(20, 200 + s);
      const Complex lhs = f.dot(d.synthesize(a));  // <f, Phi a>
      const Complex rhs = d.analyze(f).dot(a);     // <Phi* f, a>
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("basis-2 unitarity for the random orthobasis") {
  const auto d = PairDictionary::make(40, DictionaryKind::spike_random, 77);
  const CMat& b = d.basis2_matrix();
  CHECK((b.adjoint() * b - CMat::Identity(40, 40)).norm() <= 1e-10);
  const Signal f = random_signal(40, 3);
  CHECK(d.basis2_adjoint(f).norm() == doctest::Approx(f.norm()).epsilon(1e-10));
}

TEST_CASE("identical (n, kind, seed) rebuilds the identical basis") {
  const auto d1 = PairDictionary::make(64, DictionaryKind::spike_random, 7);
  const auto d2 = PairDictionary::make(64, DictionaryKind::spike_random, 7);
  CHECK((d1.basis2_matrix() - d2.basis2_matrix()).norm() == 0.0);
  const auto d3 = PairDictionary::make(64, DictionaryKind::spike_random, 8);
  CHECK((d1.basis2_matrix() - d3.basis2_matrix()).norm() > 1e-3);
}

TEST_CASE("atoms agree with synthesize on unit coefficients") {
  const auto d = PairDictionary::make(12, DictionaryKind::spike_random, 5);
  for (int g : {0, 3, 11, 12, 17, 23}) {
    CVec e = CVec::Zero(24);
    e(g) = 1.0;
    CHECK((d.atom(g) - d.synthesize(e)).norm() <= 1e-14);
  }
  CHECK_THROWS_AS(d.atom(24), std::invalid_argument);
}

TEST_CASE("mutual incoherence of the spike-fourier pair is 1/sqrt(N)") {
  CHECK(PairDictionary::make(16, DictionaryKind::spike_fourier).mutual_incoherence() ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(PairDictionary::make(256, DictionaryKind::spike_fourier).mutual_incoherence() ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("shared atom drives incoherence to 1") {
  const auto d = PairDictionary::custom(CMat::Identity(8, 8));
  CHECK(d.mutual_incoherence() == doctest::Approx(1.0));
}

TEST_CASE("incoherence equals the exhaustive pairwise maximum") {
  const auto d = PairDictionary::make(64, DictionaryKind::spike_random, 1);
  double mu = 0.0;
  for (int t = 0; t < 64; ++t)
    for (int w = 0; w < 64; ++w)
      mu = std::max(mu, std::abs(d.atom(64 + w).dot(d.atom(t))));
  CHECK(d.mutual_incoherence() == doctest::Approx(mu).epsilon(1e-12));
}

TEST_CASE("incoherence bounds hold for generated dictionaries") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    const auto d = PairDictionary::make(32, DictionaryKind::spike_random, seed);
    const double mu = d.mutual_incoherence();
    CHECK(mu >= 1.0 / std::sqrt(32.0) - 1e-12);
    CHECK(mu <= 1.0 + 1e-12);
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const auto d = PairDictionary::make(8, DictionaryKind::spike_fourier);
  CHECK_THROWS_AS(d.synthesize(CVec(CVec::Zero(8))), std::invalid_argument);
  CHECK_THROWS_AS(d.analyze(Signal(Signal::Zero(4))), std::invalid_argument);
}
