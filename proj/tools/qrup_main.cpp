// Command-line front end for the sweep, certificate, incoherence, solve and
// plot workflows. Exit codes: 0 success, 1 usage error, 2 I/O error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qrup/experiments.hpp"
#include "qrup/fft.hpp"
#include "qrup/random.hpp"

namespace {

using nlohmann::json;
using namespace qrup;

struct Options {
  int n = 256;
  std::string dict = "spike-fourier";
  std::uint64_t seed = 0;
  std::uint64_t dict_seed = 1;
  int trials = 100;
  std::string fractions = "0.05:0.95:0.05";
  double beta = 1.0;
  std::string out;
  std::string format = "csv";
  std::string split = "even";
  int workers = 0;
  int k1 = -1;
  int k2 = -1;
  double fraction = 0.2;
  std::vector<std::string> inputs;
};

DictionaryKind parse_dict(const std::string& s) {
  if (s == "spike-fourier") return DictionaryKind::spike_fourier;
  if (s == "spike-random") return DictionaryKind::spike_random;
  throw CLI::ValidationError("--dict", "expected spike-fourier or spike-random");
}

// Grids come as "a:b:step", a comma list, or a single value.
std::vector<double> parse_fractions(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0)
      throw CLI::ValidationError("--fractions", "expected a:b:step");
    for (double f = a; f <= b + 1e-12; f += step) out.push_back(f);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  }
  if (out.empty())
    throw CLI::ValidationError("--fractions", "empty fraction grid");
  return out;
}

// Config file values fill in everything the command line left at default.
void load_config_defaults(const std::string& path, Options& o) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file", path);
  json doc;
  in >> doc;
  if (doc.contains("n")) o.n = doc["n"].get<int>();
  if (doc.contains("dict")) o.dict = doc["dict"].get<std::string>();
  if (doc.contains("seed")) o.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("dict-seed")) o.dict_seed = doc["dict-seed"].get<std::uint64_t>();
  if (doc.contains("trials")) o.trials = doc["trials"].get<int>();
  if (doc.contains("fractions")) o.fractions = doc["fractions"].get<std::string>();
  if (doc.contains("beta")) o.beta = doc["beta"].get<double>();
  if (doc.contains("out")) o.out = doc["out"].get<std::string>();
  if (doc.contains("format")) o.format = doc["format"].get<std::string>();
  if (doc.contains("split")) o.split = doc["split"].get<std::string>();
  if (doc.contains("workers")) o.workers = doc["workers"].get<int>();
}

SweepConfig to_sweep_config(const Options& o, SweepMode mode) {
  SweepConfig cfg;
  cfg.n = o.n;
  cfg.dictionary_kind = parse_dict(o.dict);
  cfg.dictionary_seed = o.dict_seed;
  cfg.fractions = parse_fractions(o.fractions);
  cfg.trials_per_point = o.trials;
  cfg.beta = o.beta;
  cfg.base_seed = o.seed;
  cfg.mode = mode;
  cfg.split = o.split == "random" ? SplitRule::random : SplitRule::even;
  cfg.workers = o.workers;
  return cfg;
}

void add_common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "signal length");
  sub->add_option("--dict", o.dict, "spike-fourier|spike-random");
  sub->add_option("--seed", o.seed, "base seed");
  sub->add_option("--dict-seed", o.dict_seed, "random-basis seed");
  sub->add_option("--beta", o.beta, "failure-exponent parameter");
  sub->add_option("--out", o.out, "output path");
  static std::string ignored;  // consumed in the pre-scan
  sub->add_option("--config", ignored, "JSON config file (flags override)")
      ->check(CLI::ExistingFile);
}

void add_sweep_flags(CLI::App* sub, Options& o) {
  add_common_flags(sub, o);
  sub->add_option("--trials", o.trials, "trials per grid point");
  sub->add_option("--fractions", o.fractions, "grid as a:b:step or list");
  sub->add_option("--format", o.format, "csv|json");
  sub->add_option("--split", o.split, "even|random");
  sub->add_option("--workers", o.workers, "worker threads (0 = auto)");
}

int emit_sweep(const SweepResult& result, const Options& o) {
  ReportFormat format;
  if (o.format == "csv")
    format = ReportFormat::csv;
  else if (o.format == "json")
    format = ReportFormat::json;
  else
    throw CLI::ValidationError("--format", "expected csv or json");
  if (o.out.empty()) {
    std::cout << (format == ReportFormat::csv ? report_csv(result)
                                              : report_json(result));
  } else {
    emit_report(result, format, o.out);
    std::cerr << "wrote " << o.out << "\n";
  }
  return 0;
}

int run_incoherence(const Options& o) {
  const DictionaryKind kind = parse_dict(o.dict);
  const PairDictionary d =
      kind == DictionaryKind::spike_random
          ? PairDictionary::make(o.n, kind, o.dict_seed)
          : PairDictionary::make(o.n, kind);
  const double mu = d.mutual_incoherence();
  std::cout << "n " << o.n << "\n"
            << "dictionary " << to_string(kind) << "\n"
            << "mu " << mu << "\n"
            << "normalized_incoherence " << std::sqrt(double(o.n)) * mu << "\n";
  return 0;
}

int run_solve(const Options& o) {
  const DictionaryKind kind = parse_dict(o.dict);
  const PairDictionary d =
      kind == DictionaryKind::spike_random
          ? PairDictionary::make(o.n, kind, o.dict_seed)
          : PairDictionary::make(o.n, kind);
  int k1 = o.k1, k2 = o.k2;
  if (k1 < 0 || k2 < 0) {
    const int total =
        std::max(1, static_cast<int>(std::lround(o.fraction * o.n)));
    k1 = total / 2;
    k2 = total - k1;
  }
  const SupportPair s = sample_support_exact(o.n, k1, k2, derive_seed(o.seed, 1));
  const CoefficientVector alpha =
      sample_coefficients(s, CoefficientModel{}, derive_seed(o.seed, 2));
  const Signal f = d.synthesize(alpha);
  const SolveResult r = basis_pursuit(d, f);

  int effective = 0;
  const double cut = 1e-6 * r.alpha_hat.entries.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < r.alpha_hat.entries.size(); ++i)
    if (std::abs(r.alpha_hat.entries(i)) > cut) ++effective;

  std::cout << "instance n=" << o.n << " |T|=" << k1 << " |Omega|=" << k2
            << " seed=" << o.seed << "\n"
            << "status " << to_string(r.status) << "\n"
            << "iterations " << r.iterations << "\n"
            << "l1_value " << r.l1_value << "\n"
            << "feasibility_residual " << r.feasibility_residual << "\n"
            << "duality_gap " << r.duality_gap << "\n"
            << "effective_support " << effective << "\n"
            << "recovered "
            << (recovery_success(r.alpha_hat, alpha) ? "yes" : "no") << "\n";
  if (r.certificate)
    std::cout << "off_support_max " << r.certificate->off_support_max << "\n";
  return 0;
}

int run_plot(const Options& o) {
  if (o.out.empty())
    throw CLI::ValidationError("--out", "plot needs an output path");
  std::vector<SweepResult> results;
  for (const std::string& path : o.inputs) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open results file", path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      results.push_back(parse_report_json(buf.str()));
    } catch (const json::exception& e) {
      throw CLI::ValidationError("input", path + ": " + e.what());
    }
  }
  plot_success_curve(results, o.out);
  std::cerr << "wrote " << o.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;

  // --config fills defaults before the regular parse, so explicit flags win.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        load_config_defaults(argv[i + 1], o);
      } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      } catch (const json::exception& e) {
        std::cerr << "error: bad config file: " << e.what() << "\n";
        return 1;
      }
    }
  }

  CLI::App app{"sparse decomposition experiments over two-orthobasis dictionaries"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override)")
      ->check(CLI::ExistingFile);

  CLI::App* sweep = app.add_subcommand("sweep", "Basis Pursuit recovery sweep");
  add_sweep_flags(sweep, o);
  CLI::App* certify =
      app.add_subcommand("certify", "minimum-energy dual certificate sweep");
  add_sweep_flags(certify, o);
  CLI::App* qrup_cmd =
      app.add_subcommand("qrup", "energy-splitting (uncertainty) sweep");
  add_sweep_flags(qrup_cmd, o);

  CLI::App* incoherence =
      app.add_subcommand("incoherence", "print mu and sqrt(N) mu");
  add_common_flags(incoherence, o);

  CLI::App* solve = app.add_subcommand("solve", "solve one planted instance");
  add_common_flags(solve, o);
  solve->add_option("--k1", o.k1, "basis-1 support size");
  solve->add_option("--k2", o.k2, "basis-2 support size");
  solve->add_option("--fraction", o.fraction, "combined support fraction");

  CLI::App* plot = app.add_subcommand("plot", "render saved JSON sweeps as SVG");
  plot->add_option("inputs", o.inputs, "JSON result files")->required();
  plot->add_option("--out", o.out, "SVG output path");

  try {
    app.parse(argc, argv);
    if (sweep->parsed())
      return emit_sweep(run_recovery_sweep(to_sweep_config(o, SweepMode::recovery)), o);
    if (certify->parsed())
      return emit_sweep(run_certificate_sweep(to_sweep_config(o, SweepMode::certificate)), o);
    if (qrup_cmd->parsed())
      return emit_sweep(run_qrup_sweep(to_sweep_config(o, SweepMode::qrup)), o);
    if (incoherence->parsed()) return run_incoherence(o);
    if (solve->parsed()) return run_solve(o);
    if (plot->parsed()) return run_plot(o);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 for --help, 1 for any usage error
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
