#pragma once

#include <cstdint>
#include <vector>

#include "qrup/dictionary.hpp"

namespace qrup {

// Exhaustive combinatorial search result. `minimizers` lists every support
// of the minimum feasible size (coefficients from least squares on each
// support), in lexicographic support order.
struct L0Result {
  std::vector<CoefficientVector> minimizers;
  int l0_value = 0;
  bool unique = false;
  bool found = false;  // false when no support of size <= max_support fits
};

// Brute-force shortest-decomposition search: enumerates supports by
// increasing size and accepts those whose least-squares residual is below
// 1e-8 relative. Guarded at N <= 16, max_support <= 8.
L0Result l0_solve(const PairDictionary& d, const Signal& f, int max_support);

// True iff the shortest decomposition of Phi alpha is unique, equals alpha,
// and Basis Pursuit recovers alpha as well.
bool l0_agrees_with_l1(const PairDictionary& d, const CoefficientVector& alpha);

// Number of singular values of Phi_Gamma below 1e-8.
int null_space_dim(const PairDictionary& d, const IndexSet& gamma);

struct PrimeSweepReport {
  int trials = 0;
  int l0_unique = 0;       // trials whose shortest decomposition was unique and correct
  int up_violations = 0;   // time/frequency support pairs with |supp f| + |supp fhat| <= n
  bool all_unique = false;
};

// Random spike+sinusoid instances at prime n with |T| + |Omega| <= n/2:
// checks shortest-decomposition uniqueness and the prime-length support
// bound |supp f| + |supp fhat| > n on each trial's time-domain component.
PrimeSweepReport prime_sweep(int n, int trials, std::uint64_t seed = 0);

}  // namespace qrup
