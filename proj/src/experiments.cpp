#include "qrup/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "qrup/random.hpp"
#include "qrup/spectral.hpp"

namespace qrup {

const char* to_string(SweepMode m) {
  switch (m) {
    case SweepMode::recovery: return "recovery";
    case SweepMode::certificate: return "certificate";
    case SweepMode::qrup: return "qrup";
  }
  return "unknown";
}

const char* to_string(SplitRule r) {
  switch (r) {
    case SplitRule::even: return "even";
    case SplitRule::random: return "random";
  }
  return "unknown";
}

void SweepConfig::validate() const {
  if (n < 2) throw std::invalid_argument("SweepConfig: n must be >= 2");
  if (trials_per_point < 1)
    throw std::invalid_argument("SweepConfig: trials_per_point must be >= 1");
  if (fractions.empty())
    throw std::invalid_argument("SweepConfig: fraction grid is empty");
  double prev = 0.0;
  for (double f : fractions) {
    if (f <= 0.0 || f > 1.0)
      throw std::invalid_argument("SweepConfig: fractions must lie in (0, 1]");
    if (f < prev)
      throw std::invalid_argument("SweepConfig: fractions must be ascending");
    prev = f;
  }
  if (workers < 0) throw std::invalid_argument("SweepConfig: negative workers");
}

namespace {

std::uint64_t trial_seed(const SweepConfig& cfg, size_t fraction_index,
                         int trial_index) {
  return cfg.base_seed ^ (static_cast<std::uint64_t>(fraction_index) << 32) ^
         static_cast<std::uint64_t>(trial_index);
}

// |Gamma| for a fraction, and its split between the two bases.
std::pair<int, int> split_sizes(const SweepConfig& cfg, double fraction,
                                std::uint64_t seed) {
  const int total = std::max(1, static_cast<int>(std::lround(fraction * cfg.n)));
  int k1 = total / 2;
  if (cfg.split == SplitRule::random) {
    Rng rng(derive_seed(seed, 0x5eed));
    k1 = rng.below(std::min(total, cfg.n) + 1);
  }
  k1 = std::min(k1, cfg.n);
  const int k2 = std::min(total - k1, cfg.n);
  return {k1, k2};
}

TrialRecord run_recovery_trial(const PairDictionary& dict,
                               const SweepConfig& cfg, double fraction,
                               std::uint64_t seed) {
  TrialRecord rec;
  rec.seed = seed;
  const auto [k1, k2] = split_sizes(cfg, fraction, seed);
  const SupportPair s = sample_support_exact(cfg.n, k1, k2, derive_seed(seed, 1));
  const CoefficientVector alpha =
      sample_coefficients(s, CoefficientModel{}, derive_seed(seed, 2));
  rec.t_size = static_cast<int>(s.t_set.size());
  rec.omega_size = static_cast<int>(s.omega_set.size());

  const Signal f = dict.synthesize(alpha);
  SolverConfig solver_cfg = cfg.solver;
  solver_cfg.with_certificate = false;
  const SolveResult r = basis_pursuit(dict, f, solver_cfg);
  rec.solver_converged = (r.status == SolveStatus::optimal);
  rec.solver_iterations = r.iterations;
  rec.residual = r.feasibility_residual;
  rec.outcome = rec.solver_converged && recovery_success(r.alpha_hat, alpha);
  return rec;
}

TrialRecord run_certificate_trial(const PairDictionary& dict,
                                  const SweepConfig& cfg, double fraction,
                                  std::uint64_t seed) {
  TrialRecord rec;
  rec.seed = seed;
  const auto [k1, k2] = split_sizes(cfg, fraction, seed);
  const SupportPair s = sample_support_exact(cfg.n, k1, k2, derive_seed(seed, 1));
  const CoefficientVector alpha = sample_coefficients(
      s, CoefficientModel{MagnitudeLaw::unit_modulus, 1.0}, derive_seed(seed, 2));
  rec.t_size = static_cast<int>(s.t_set.size());
  rec.omega_size = static_cast<int>(s.omega_set.size());

  const IndexSet gamma = alpha.support;
  CVec signs(static_cast<Eigen::Index>(gamma.size()));
  for (size_t i = 0; i < gamma.size(); ++i)
    signs(static_cast<Eigen::Index>(i)) = csign(alpha.entries(gamma[i]));
  try {
    const DualCertificate c = min_energy_dual(dict, gamma, signs);
    rec.residual = c.on_support_residual;
    rec.off_support_max = c.off_support_max;
    rec.outcome = certificate_valid(c);
  } catch (const GramSingularError&) {
    rec.off_support_max = std::numeric_limits<double>::infinity();
    rec.outcome = false;
  }
  return rec;
}

TrialRecord run_qrup_trial(const PairDictionary& dict, const SweepConfig& cfg,
                           double fraction, std::uint64_t seed) {
  TrialRecord rec;
  rec.seed = seed;
  SamplingParams params;
  params.n = cfg.n;
  params.beta = cfg.beta;
  const auto [k1, k2] = split_sizes(cfg, fraction, seed);
  params.p1 = static_cast<double>(k1) / cfg.n;
  params.p2 = static_cast<double>(k2) / cfg.n;
  const SupportPair s = sample_support_pair(params, derive_seed(seed, 1));
  rec.t_size = static_cast<int>(s.t_set.size());
  rec.omega_size = static_cast<int>(s.omega_set.size());
  const auto [pass, report] = qrup_check(dict, s);
  rec.outcome = pass;
  rec.op_norm_sq = report.op_norm_sq;
  return rec;
}

SweepResult run_generic(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.dictionary_kind == DictionaryKind::custom)
    throw std::invalid_argument("sweeps accept spike_fourier or spike_random");
  const PairDictionary dict =
      cfg.dictionary_kind == DictionaryKind::spike_random
          ? PairDictionary::make(cfg.n, cfg.dictionary_kind, cfg.dictionary_seed)
          : PairDictionary::make(cfg.n, cfg.dictionary_kind);

  SweepResult result;
  result.config = cfg;
  const size_t points = cfg.fractions.size();
  result.records.assign(points, std::vector<TrialRecord>(
                                    static_cast<size_t>(cfg.trials_per_point)));
  result.wall_times.assign(points, 0.0);

  const auto t0 = std::chrono::steady_clock::now();
  const int total_trials = static_cast<int>(points) * cfg.trials_per_point;
  int workers = cfg.workers > 0
                    ? cfg.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, total_trials));

  std::atomic<int> next{0};
  auto work = [&]() {
    while (true) {
      const int job = next.fetch_add(1);
      if (job >= total_trials) break;
      const size_t fi = static_cast<size_t>(job) / static_cast<size_t>(cfg.trials_per_point);
      const int ti = job % cfg.trials_per_point;
      const std::uint64_t seed = trial_seed(cfg, fi, ti);
      const double fraction = cfg.fractions[fi];
      TrialRecord rec;
      switch (cfg.mode) {
        case SweepMode::recovery:
          rec = run_recovery_trial(dict, cfg, fraction, seed);
          break;
        case SweepMode::certificate:
          rec = run_certificate_trial(dict, cfg, fraction, seed);
          break;
        case SweepMode::qrup:
          rec = run_qrup_trial(dict, cfg, fraction, seed);
          break;
      }
      result.records[fi][static_cast<size_t>(ti)] = rec;
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Aggregation runs serially in (fraction, trial) order, so the emitted
  // numbers do not depend on the worker schedule.
  result.rows.reserve(points);
  for (size_t fi = 0; fi < points; ++fi) {
    SweepRow row;
    row.fraction = cfg.fractions[fi];
    row.trials = cfg.trials_per_point;
    double t_sum = 0.0, w_sum = 0.0, iter_sum = 0.0, res_sum = 0.0;
    for (const TrialRecord& rec : result.records[fi]) {
      t_sum += rec.t_size;
      w_sum += rec.omega_size;
      iter_sum += rec.solver_iterations;
      res_sum += rec.residual;
      if (rec.outcome) ++row.successes;
    }
    row.t_size_mean = t_sum / row.trials;
    row.omega_size_mean = w_sum / row.trials;
    row.success_rate = static_cast<double>(row.successes) / row.trials;
    row.mean_iterations = iter_sum / row.trials;
    row.mean_residual = res_sum / row.trials;
    result.rows.push_back(row);
    result.wall_times[fi] = elapsed / static_cast<double>(points);
  }
  return result;
}

}  // namespace

SweepResult run_recovery_sweep(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::recovery)
    throw std::invalid_argument("run_recovery_sweep: mode mismatch");
  return run_generic(cfg);
}

SweepResult run_certificate_sweep(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::certificate)
    throw std::invalid_argument("run_certificate_sweep: mode mismatch");
  return run_generic(cfg);
}

SweepResult run_qrup_sweep(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::qrup)
    throw std::invalid_argument("run_qrup_sweep: mode mismatch");
  return run_generic(cfg);
}

SweepResult run_sweep(const SweepConfig& cfg) { return run_generic(cfg); }

}  // namespace qrup
