#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrup/dictionary.hpp"
#include "qrup/sampling.hpp"
#include "qrup/solver.hpp"

namespace qrup {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class SweepMode { recovery, certificate, qrup };
enum class SplitRule { even, random };

const char* to_string(SweepMode m);
const char* to_string(SplitRule r);

// Monte Carlo sweep over combined support fractions (|T|+|Omega|)/N.
struct SweepConfig {
  int n = 256;
  DictionaryKind dictionary_kind = DictionaryKind::spike_fourier;
  std::uint64_t dictionary_seed = 1;  // spike_random basis seed
  std::vector<double> fractions;      // ascending, in (0, 1]
  int trials_per_point = 100;
  double beta = 1.0;
  std::uint64_t base_seed = 0;
  SweepMode mode = SweepMode::recovery;
  SplitRule split = SplitRule::even;  // how |Gamma| divides between T and Omega
  int workers = 0;                    // 0 = hardware concurrency
  SolverConfig solver;                // recovery mode only

  void validate() const;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  int t_size = 0;
  int omega_size = 0;
  bool outcome = false;
  bool solver_converged = true;  // false when the iteration budget ran out
  int solver_iterations = 0;
  double residual = 0.0;         // feasibility (recovery), on-support (certificate)
  double op_norm_sq = 0.0;       // qrup mode
  double off_support_max = 0.0;  // certificate mode; +inf for singular Grams
};

// Per-fraction aggregate; exactly the serialized CSV fields.
struct SweepRow {
  double fraction = 0.0;
  double t_size_mean = 0.0;
  double omega_size_mean = 0.0;
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
  double mean_iterations = 0.0;
  double mean_residual = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<std::vector<TrialRecord>> records;  // [fraction][trial]
  std::vector<double> wall_times;                 // seconds per fraction point
  std::string version = kArtifactVersion;
  std::string timestamp;  // set at emit time
};

// Sample supports and coefficients, solve Basis Pursuit, score recovery.
SweepResult run_recovery_sweep(const SweepConfig& cfg);
// Build the minimum-energy dual per trial and score its validity; no solves.
SweepResult run_certificate_sweep(const SweepConfig& cfg);
// Bernoulli supports at matching expected sizes, score the energy-split check.
SweepResult run_qrup_sweep(const SweepConfig& cfg);

SweepResult run_sweep(const SweepConfig& cfg);

enum class ReportFormat { csv, json };

// File-system failures carry the offending path.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, const std::string& path)
      : std::runtime_error(what + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string report_csv(const SweepResult& r);
std::string report_json(const SweepResult& r);
// Inverse of report_json over the serialized fields (config echo and rows).
SweepResult parse_report_json(const std::string& text);

// Writes the report; CSV output is byte-identical across re-runs of the same
// config, JSON only differs in the provenance timestamp.
void emit_report(const SweepResult& r, ReportFormat format,
                 const std::string& path);

// Static SVG with one success-rate polyline per result, legend keyed by N.
std::string render_success_curve_svg(const std::vector<SweepResult>& results);
void plot_success_curve(const std::vector<SweepResult>& results,
                        const std::string& path);

}  // namespace qrup
