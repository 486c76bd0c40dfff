#include "qrup/sampling.hpp"

#include <cmath>

#include "qrup/random.hpp"

namespace qrup {

void SamplingParams::validate() const {
  if (n < 1) throw std::invalid_argument("SamplingParams: n must be >= 1");
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
    throw std::invalid_argument("SamplingParams: rates must lie in [0, 1]");
}

SupportPair sample_support_pair(const SamplingParams& params, std::uint64_t seed) {
  params.validate();
  Rng rng(seed);
  SupportPair s;
  s.n = params.n;
  for (int i = 0; i < params.n; ++i)
    if (rng.uniform() < params.p1) s.t_set.push_back(i);
  for (int i = 0; i < params.n; ++i)
    if (rng.uniform() < params.p2) s.omega_set.push_back(i);
  return s;
}

SupportPair sample_support_exact(int n, int k1, int k2, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_support_exact: n must be >= 1");
  if (k1 < 0 || k1 > n || k2 < 0 || k2 > n)
    throw std::invalid_argument("sample_support_exact: k out of range");
  Rng rng(seed);
  SupportPair s;
  s.n = n;
  s.t_set = rng.subset(n, k1);
  s.omega_set = rng.subset(n, k2);
  return s;
}

CoefficientVector sample_coefficients(const SupportPair& support,
                                      const CoefficientModel& model,
                                      std::uint64_t seed) {
  if (model.scale <= 0.0)
    throw std::invalid_argument("CoefficientModel: scale must be positive");
  Rng rng(seed);
  CoefficientVector a = zero_coefficients(support.n);
  a.support = support.dictionary_support();
  for (int g : a.support) {
    switch (model.law) {
      case MagnitudeLaw::complex_gaussian:
        a.entries(g) = rng.complex_gaussian(model.scale / std::sqrt(2.0));
        break;
      case MagnitudeLaw::unit_modulus:
        a.entries(g) = model.scale * rng.unit_phase();
        break;
    }
  }
  return a;
}

Budget qrup_budget(int n, double beta) {
  if (n < 2) throw std::invalid_argument("qrup_budget: n must be >= 2");
  Budget b;
  b.value = 0.2660 * n / std::sqrt((beta + 1.0) * std::log(static_cast<double>(n)));
  b.extrapolated = (n < 512 || beta < 1.0);
  return b;
}

Budget l1_budget(int n, double beta) {
  if (n < 2) throw std::invalid_argument("l1_budget: n must be >= 2");
  Budget b;
  b.value = n / (8.0 * (beta + 1.0) * std::log(static_cast<double>(n)));
  b.extrapolated = (n < 512 || beta < 1.0);
  return b;
}

double min_expected_support(int n, double beta) {
  if (n < 2) throw std::invalid_argument("min_expected_support: n must be >= 2");
  return 4.0 * (beta + 1.0) * std::log(static_cast<double>(n));
}

TailCheckReport empirical_tail_check(const std::vector<double>& bounds,
                                     int trials, double epsilon,
                                     std::uint64_t seed) {
  if (trials < 1000)
    throw std::invalid_argument("empirical_tail_check: needs >= 1000 trials");
  for (double a : bounds)
    if (a < 0.0) throw std::invalid_argument("empirical_tail_check: negative bound");

  double a_norm_sq = 0.0;
  for (double a : bounds) a_norm_sq += a * a;

  Rng rng(seed);
  int exceed = 0;
  for (int t = 0; t < trials; ++t) {
    Complex sum(0.0, 0.0);
    for (double a : bounds) sum += a * rng.unit_phase();
    if (std::abs(sum) >= epsilon) ++exceed;
  }

  TailCheckReport r;
  r.epsilon = epsilon;
  r.trials = trials;
  r.empirical = static_cast<double>(exceed) / trials;
  r.bound = a_norm_sq == 0.0
                ? (epsilon > 0.0 ? 0.0 : 4.0)
                : 4.0 * std::exp(-epsilon * epsilon / (4.0 * a_norm_sq));
  r.mc_sigma = std::sqrt(r.empirical * (1.0 - r.empirical) /
                         static_cast<double>(trials));
  r.pass = r.empirical <= r.bound + 3.0 * r.mc_sigma;
  return r;
}

}  // namespace qrup
