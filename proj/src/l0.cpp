#include "qrup/l0.hpp"

#include <algorithm>
#include <cmath>

#include "qrup/fft.hpp"
#include "qrup/random.hpp"
#include "qrup/sampling.hpp"
#include "qrup/solver.hpp"

namespace qrup {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kSupportTol = 1e-8;  // relative to the max modulus

// Lexicographic next k-combination of [0, m).
bool next_combination(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<size_t>(i)] < m - k + i) {
      ++c[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

CMat all_atoms(const PairDictionary& d) {
  CMat atoms(d.n(), 2 * d.n());
  for (int g = 0; g < 2 * d.n(); ++g) atoms.col(g) = d.atom(g);
  return atoms;
}

}  // namespace

L0Result l0_solve(const PairDictionary& d, const Signal& f, int max_support) {
  const int n = d.n();
  if (n > 16 || max_support > 8)
    throw std::invalid_argument(
        "l0_solve: enumeration guard (needs n <= 16 and max_support <= 8)");
  if (f.size() != n) throw std::invalid_argument("l0_solve: dimension mismatch");
  if (max_support < 0) throw std::invalid_argument("l0_solve: negative max_support");

  L0Result res;
  const double fnorm = f.norm();
  if (fnorm == 0.0) {
    res.minimizers.push_back(zero_coefficients(n));
    res.l0_value = 0;
    res.unique = true;
    res.found = true;
    return res;
  }

  const CMat atoms = all_atoms(d);
  const int m = 2 * n;
  for (int k = 1; k <= std::min(max_support, m); ++k) {
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    CMat sub(n, k);
    do {
      for (int i = 0; i < k; ++i) sub.col(i) = atoms.col(comb[static_cast<size_t>(i)]);
      Eigen::ColPivHouseholderQR<CMat> qr(sub);
      const CVec coeff = qr.solve(f);
      if ((sub * coeff - f).norm() <= kResidualTol * fnorm)
        res.minimizers.push_back(coefficients_on_support(n, comb, coeff));
    } while (next_combination(comb, m));
    if (!res.minimizers.empty()) {
      res.l0_value = k;
      res.found = true;
      res.unique = (res.minimizers.size() == 1);
      return res;
    }
  }
  return res;  // found = false
}

bool l0_agrees_with_l1(const PairDictionary& d, const CoefficientVector& alpha) {
  const Signal f = d.synthesize(alpha);
  const int k = static_cast<int>(alpha.support.size());
  const L0Result l0 = l0_solve(d, f, k);
  if (!l0.found || !l0.unique) return false;
  const CoefficientVector& m = l0.minimizers.front();
  if (m.support != alpha.support) return false;
  if (!recovery_success(m, alpha, 1e-6)) return false;
  SolverConfig cfg;
  cfg.with_certificate = false;
  const SolveResult bp = basis_pursuit(d, f, cfg);
  return bp.status == SolveStatus::optimal &&
         recovery_success(bp.alpha_hat, alpha, 1e-3);
}

int null_space_dim(const PairDictionary& d, const IndexSet& gamma) {
  if (gamma.empty()) return 0;
  const int n = d.n();
  CMat sub(n, static_cast<Eigen::Index>(gamma.size()));
  for (size_t i = 0; i < gamma.size(); ++i) {
    const int g = gamma[i];
    if (g < 0 || g >= 2 * n)
      throw std::invalid_argument("null_space_dim: index out of range");
    sub.col(static_cast<Eigen::Index>(i)) = d.atom(g);
  }
  Eigen::JacobiSVD<CMat> svd(sub);
  int dim = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) < 1e-8) ++dim;
  // columns beyond rank(Phi) <= n never show up as singular values
  dim += static_cast<int>(gamma.size()) - static_cast<int>(svd.singularValues().size());
  return dim;
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int support_count(const Signal& v) {
  const double cut = kSupportTol * v.cwiseAbs().maxCoeff();
  int c = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > cut) ++c;
  return c;
}

}  // namespace

PrimeSweepReport prime_sweep(int n, int trials, std::uint64_t seed) {
  if (!is_prime(n)) throw std::invalid_argument("prime_sweep: n must be prime");
  if (n > 13) throw std::invalid_argument("prime_sweep: n must be <= 13");
  if (trials < 1) throw std::invalid_argument("prime_sweep: trials must be >= 1");

  const PairDictionary d = PairDictionary::make(n, DictionaryKind::spike_fourier);
  const int budget = n / 2;
  PrimeSweepReport rep;
  rep.trials = trials;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const int total = 1 + rng.below(budget);
    const int k1 = rng.below(total + 1);
    const int k2 = total - k1;
    const SupportPair s =
        sample_support_exact(n, k1, k2, derive_seed(trial_seed, 1));
    const CoefficientVector alpha =
        sample_coefficients(s, CoefficientModel{}, derive_seed(trial_seed, 2));
    const Signal f = d.synthesize(alpha);

    const L0Result l0 = l0_solve(d, f, total);
    if (l0.found && l0.unique && l0.minimizers.front().support == alpha.support &&
        recovery_success(l0.minimizers.front(), alpha, 1e-6))
      ++rep.l0_unique;

    // Support bound on the trial's time-domain component.
    if (!s.t_set.empty()) {
      Signal g = Signal::Zero(n);
      for (int idx : s.t_set) g(idx) = alpha.entries(idx);
      if (g.norm() > 0.0 &&
          support_count(g) + support_count(dft(g)) <= n)
        ++rep.up_violations;
    }
  }
  rep.all_unique = (rep.l0_unique == rep.trials);
  return rep;
}

}  // namespace qrup
