#pragma once

#include <cstdint>
#include <vector>

#include "qrup/types.hpp"

namespace qrup {

// Bernoulli support model: each index enters T with rate p1 and Omega with
// rate p2, independently. beta is the failure-exponent parameter of the
// support-size budgets.
struct SamplingParams {
  int n = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double beta = 1.0;

  void validate() const;
};

enum class MagnitudeLaw { complex_gaussian, unit_modulus };

// Circularly symmetric coefficient law: phase uniform on [0, 2 pi),
// magnitudes either Rayleigh (complex Gaussian with per-component variance
// scale^2/2) or fixed at `scale`.
struct CoefficientModel {
  MagnitudeLaw law = MagnitudeLaw::complex_gaussian;
  double scale = 1.0;
};

SupportPair sample_support_pair(const SamplingParams& params, std::uint64_t seed);

// Uniform k1-subset for T and independent uniform k2-subset for Omega.
SupportPair sample_support_exact(int n, int k1, int k2, std::uint64_t seed);

CoefficientVector sample_coefficients(const SupportPair& support,
                                      const CoefficientModel& model,
                                      std::uint64_t seed);

// Formula values carry an `extrapolated` flag outside the stated regime
// (n >= 512, beta >= 1).
struct Budget {
  double value = 0.0;
  bool extrapolated = false;
};

// Combined expected support size under which the energy-splitting check holds
// with high probability: 0.2660 n / sqrt((beta+1) ln n).
Budget qrup_budget(int n, double beta);

// Leading-order combined size for l1 recovery: n / (8 (beta+1) ln n).
Budget l1_budget(int n, double beta);

// Reference floor 4 (beta+1) ln n on expected support sizes; below it empty
// draws stop being rare.
double min_expected_support(int n, double beta);

struct TailCheckReport {
  double epsilon = 0.0;
  int trials = 0;
  double empirical = 0.0;  // estimate of P(|sum_j X_j| >= epsilon)
  double bound = 0.0;      // 4 exp(-epsilon^2 / (4 ||a||_2^2))
  double mc_sigma = 0.0;   // binomial standard error of the estimate
  bool pass = false;       // empirical <= bound + 3 mc_sigma
};

// Monte Carlo check of the complex tail bound: X_j = a_j e^{i theta_j} with
// independent uniform phases, so each term is zero-mean and |X_j| = a_j.
TailCheckReport empirical_tail_check(const std::vector<double>& bounds,
                                     int trials, double epsilon,
                                     std::uint64_t seed);

}  // namespace qrup
