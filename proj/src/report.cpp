#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qrup/experiments.hpp"

namespace qrup {

namespace {

using nlohmann::json;

// Shortest round-trip decimal form, shared by CSV and JSON.
std::string num(double x) { return json(x).dump(); }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

DictionaryKind kind_from_string(const std::string& s) {
  if (s == "spike_fourier") return DictionaryKind::spike_fourier;
  if (s == "spike_random") return DictionaryKind::spike_random;
  if (s == "custom") return DictionaryKind::custom;
  throw std::invalid_argument("unknown dictionary kind: " + s);
}

SweepMode mode_from_string(const std::string& s) {
  if (s == "recovery") return SweepMode::recovery;
  if (s == "certificate") return SweepMode::certificate;
  if (s == "qrup") return SweepMode::qrup;
  throw std::invalid_argument("unknown sweep mode: " + s);
}

SplitRule split_from_string(const std::string& s) {
  if (s == "even") return SplitRule::even;
  if (s == "random") return SplitRule::random;
  throw std::invalid_argument("unknown split rule: " + s);
}

json row_to_json(const SweepResult& r, const SweepRow& row) {
  return json{{"n", r.config.n},
              {"dictionary_kind", to_string(r.config.dictionary_kind)},
              {"mode", to_string(r.config.mode)},
              {"fraction", row.fraction},
              {"t_size_mean", row.t_size_mean},
              {"omega_size_mean", row.omega_size_mean},
              {"trials", row.trials},
              {"successes", row.successes},
              {"success_rate", row.success_rate},
              {"mean_iterations", row.mean_iterations},
              {"mean_residual", row.mean_residual},
              {"base_seed", r.config.base_seed}};
}

}  // namespace

std::string report_csv(const SweepResult& r) {
  std::ostringstream out;
  out << "n,dictionary_kind,mode,fraction,t_size_mean,omega_size_mean,trials,"
         "successes,success_rate,mean_iterations,mean_residual,base_seed\n";
  for (const SweepRow& row : r.rows) {
    out << r.config.n << ',' << to_string(r.config.dictionary_kind) << ','
        << to_string(r.config.mode) << ',' << num(row.fraction) << ','
        << num(row.t_size_mean) << ',' << num(row.omega_size_mean) << ','
        << row.trials << ',' << row.successes << ',' << num(row.success_rate)
        << ',' << num(row.mean_iterations) << ',' << num(row.mean_residual)
        << ',' << r.config.base_seed << '\n';
  }
  return out.str();
}

std::string report_json(const SweepResult& r) {
  json doc;
  doc["config"] = json{{"n", r.config.n},
                       {"dictionary_kind", to_string(r.config.dictionary_kind)},
                       {"dictionary_seed", r.config.dictionary_seed},
                       {"mode", to_string(r.config.mode)},
                       {"split", to_string(r.config.split)},
                       {"fractions", r.config.fractions},
                       {"trials_per_point", r.config.trials_per_point},
                       {"beta", r.config.beta},
                       {"base_seed", r.config.base_seed}};
  doc["rows"] = json::array();
  for (const SweepRow& row : r.rows) doc["rows"].push_back(row_to_json(r, row));
  doc["provenance"] = json{{"version", r.version},
                           {"timestamp", r.timestamp.empty() ? utc_timestamp()
                                                             : r.timestamp}};
  return doc.dump(2) + "\n";
}

SweepResult parse_report_json(const std::string& text) {
  const json doc = json::parse(text);
  SweepResult r;
  const json& c = doc.at("config");
  r.config.n = c.at("n").get<int>();
  r.config.dictionary_kind = kind_from_string(c.at("dictionary_kind"));
  r.config.dictionary_seed = c.at("dictionary_seed").get<std::uint64_t>();
  r.config.mode = mode_from_string(c.at("mode"));
  r.config.split = split_from_string(c.at("split"));
  r.config.fractions = c.at("fractions").get<std::vector<double>>();
  r.config.trials_per_point = c.at("trials_per_point").get<int>();
  r.config.beta = c.at("beta").get<double>();
  r.config.base_seed = c.at("base_seed").get<std::uint64_t>();
  for (const json& jr : doc.at("rows")) {
    SweepRow row;
    row.fraction = jr.at("fraction").get<double>();
    row.t_size_mean = jr.at("t_size_mean").get<double>();
    row.omega_size_mean = jr.at("omega_size_mean").get<double>();
    row.trials = jr.at("trials").get<int>();
    row.successes = jr.at("successes").get<int>();
    row.success_rate = jr.at("success_rate").get<double>();
    row.mean_iterations = jr.at("mean_iterations").get<double>();
    row.mean_residual = jr.at("mean_residual").get<double>();
    r.rows.push_back(row);
  }
  const json& p = doc.at("provenance");
  r.version = p.at("version").get<std::string>();
  r.timestamp = p.at("timestamp").get<std::string>();
  return r;
}

void emit_report(const SweepResult& r, ReportFormat format,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open report file", path);
  out << (format == ReportFormat::csv ? report_csv(r) : report_json(r));
  out.flush();
  if (!out) throw IoError("write failed", path);
}

}  // namespace qrup
