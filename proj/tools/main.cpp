// Command-line front end: state measurement, Monte Carlo inequality
// verification, closed-form vs variational cross-checks, and scalar
// inequality sweeps. Reports go to stdout or a file as JSON lines or CSV,
// always prefixed by a one-line JSON header carrying the full run
// configuration, so a rerun with the same config and seed reproduces the
// report byte for byte.
//
// Exit codes: 0 success, 1 inequality violation, 2 input/config error.

#include "entmono/measures.hpp"
#include "entmono/monogamy.hpp"
#include "entmono/parallel.hpp"
#include "entmono/report_io.hpp"
#include "entmono/state_io.hpp"
#include "entmono/states.hpp"
#include "entmono/variational.hpp"
#include "entmono/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using entmono::MeasureKind;
using entmono::MonogamyReport;
using entmono::ReportFormat;
using entmono::StateVector;
using json = nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n_qubits = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> etas;
  double k = 1.0;
  double k_prime = 1.0;
  int m = 1;
  std::vector<std::string> kind_names{"all"};
  std::vector<std::string> ineq_names{"all"};
  std::string input;
  std::string output;
  std::string format_name = "jsonl";
  unsigned jobs = entmono::default_jobs();
  int grid = 201;
  std::vector<int> permute;

  bool n_qubits_given = false;
  bool etas_given = false;

  ReportFormat format = ReportFormat::jsonl;
  std::vector<MeasureKind> kinds;           // expanded, deduplicated
  std::set<std::string> inequalities;       // expanded: ckw, power, t3, t4
};

std::string zero_pad(long v, int width) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
  return s;
}

std::vector<MeasureKind> expand_kinds(const std::vector<std::string>& names) {
  std::vector<MeasureKind> kinds;
  auto add = [&](MeasureKind k) {
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);
  };
  for (const auto& name : names) {
    if (name == "all") {
      add(MeasureKind::concurrence);
      add(MeasureKind::bures);
      add(MeasureKind::geometric);
    } else {
      add(entmono::parse_measure_kind(name));
    }
  }
  return kinds;
}

std::set<std::string> expand_inequalities(const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.insert({"ckw", "power", "t3", "t4"});
    } else if (name == "ckw" || name == "power" || name == "t3" || name == "t4") {
      out.insert(name);
    } else {
      throw ConfigError("--ineq: unknown inequality \"" + name +
                        "\" (expected ckw, power, t3, t4 or all)");
    }
  }
  return out;
}

json config_header(const RunConfig& cfg) {
  json h;
  h["version"] = entmono::kVersion;
  h["command"] = cfg.command;
  if (cfg.command == "verify") {
    h["n_qubits"] = cfg.n_qubits;
  }
  if (cfg.command != "measure") h["samples"] = cfg.samples;
  h["seed"] = cfg.seed;
  if (cfg.command == "verify" || cfg.command == "lemma-sweep") h["eta"] = cfg.etas;
  if (cfg.command == "verify") {
    h["k"] = cfg.k;
    h["k_prime"] = cfg.k_prime;
    h["m"] = cfg.m;
    h["inequalities"] = std::vector<std::string>(cfg.inequalities.begin(),
                                                 cfg.inequalities.end());
  }
  if (cfg.command == "measure" || cfg.command == "verify") {
    std::vector<std::string> kind_names;
    for (auto k : cfg.kinds) kind_names.emplace_back(entmono::to_string(k));
    h["kinds"] = kind_names;
  }
  if (cfg.command == "lemma-sweep") h["grid"] = cfg.grid;
  if (!cfg.input.empty()) h["input"] = cfg.input;
  if (!cfg.permute.empty()) h["permute"] = cfg.permute;
  h["format"] = cfg.format_name;
  h["jobs"] = cfg.jobs;
  return h;
}

// Owns the output stream choice; rows go through here in order.
class ReportSink {
 public:
  ReportSink(const std::string& path, const json& header, ReportFormat fmt,
             std::string_view csv_header)
      : fmt_(fmt) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("--output: cannot open \"" + path + "\" for writing");
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
    *out_ << header.dump() << '\n';
    if (fmt_ == ReportFormat::csv) *out_ << csv_header << '\n';
  }

  void row(const std::string& line) { *out_ << line << '\n'; }

  ReportFormat format() const { return fmt_; }
  bool to_stdout() const { return out_ == &std::cout; }

 private:
  ReportFormat fmt_;
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

// ---- measure -------------------------------------------------------------------

std::string format_measure_row(const std::string& state_id, MeasureKind kind,
                               const std::string& scope, double value,
                               ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    return state_id + "," + std::string(entmono::to_string(kind)) + "," + scope + "," +
           entmono::format_double(value);
  }
  return "{\"state_id\":\"" + state_id + "\",\"kind\":\"" +
         std::string(entmono::to_string(kind)) + "\",\"scope\":\"" + scope +
         "\",\"value\":" + entmono::format_double(value) + "}";
}

int cmd_measure(const RunConfig& cfg) {
  StateVector psi = entmono::read_state_json(cfg.input);
  if (!cfg.permute.empty()) {
    psi = entmono::relabel_qubits(psi, cfg.permute);
  }
  const int n = psi.n_qubits();
  if (n < 2) {
    throw ConfigError("--input: state must have at least 2 qubits, got " +
                      std::to_string(n));
  }
  const std::string state_id = std::filesystem::path(cfg.input).stem().string();

  ReportSink sink(cfg.output, config_header(cfg), cfg.format, "state_id,kind,scope,value");

  const entmono::CMatrix dm = psi.amplitudes() * psi.amplitudes().adjoint();
  constexpr int root[] = {0};
  for (MeasureKind kind : cfg.kinds) {
    const double whole = entmono::measure_pure_bipartition(psi, root, kind).value;
    sink.row(format_measure_row(state_id, kind, "A|rest", whole, cfg.format));
    if (!sink.to_stdout()) {
      std::cout << entmono::to_string(kind) << "(A|rest) = " << whole << '\n';
    }
    for (int b = 1; b < n; ++b) {
      const int keep[] = {0, b};
      entmono::DensityMatrix pair(2, entmono::partial_trace(dm, n, keep));
      const double v = entmono::measure_two_qubit(pair, kind).value;
      sink.row(format_measure_row(state_id, kind, "pair:" + std::to_string(b), v,
                                  cfg.format));
      if (!sink.to_stdout()) {
        std::cout << entmono::to_string(kind) << "(A|B" << b << ") = " << v << '\n';
      }
    }
  }
  return 0;
}

// ---- verify --------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
  const int n = cfg.n_qubits;
  const bool run_t4 = cfg.inequalities.count("t4") > 0;

  std::vector<MeasureKind> distance_kinds;
  for (MeasureKind k : cfg.kinds) {
    if (k == MeasureKind::bures || k == MeasureKind::geometric) distance_kinds.push_back(k);
  }

  entmono::MonogamyParams t4_params;
  t4_params.k = cfg.k;
  t4_params.k_prime = cfg.k_prime;
  t4_params.m = cfg.m;

  std::vector<std::vector<MonogamyReport>> slots(cfg.samples);
  entmono::parallel_for(cfg.samples, cfg.jobs, [&](long i) {
    const std::uint64_t state_seed = cfg.seed + static_cast<std::uint64_t>(i);
    const StateVector psi = entmono::sample_haar_state(n, state_seed);
    const std::string id = "haar-n" + std::to_string(n) + "-" + zero_pad(i, 6);
    auto& rows = slots[i];
    auto push = [&](MonogamyReport r) {
      r.state_id = id;
      r.seed = state_seed;
      rows.push_back(std::move(r));
    };
    if (cfg.inequalities.count("ckw")) push(entmono::check_ckw(psi));
    for (MeasureKind kind : distance_kinds) {
      for (double eta : cfg.etas) {
        if (cfg.inequalities.count("power")) {
          push(entmono::check_power_monogamy(psi, kind, eta));
        }
        if (cfg.inequalities.count("t3")) {
          push(entmono::check_sorted_power_monogamy(psi, kind, eta));
        }
        if (run_t4) {
          entmono::MonogamyParams p = t4_params;
          p.eta = eta;
          push(entmono::check_conditional_power_monogamy(psi, kind, p));
        }
      }
    }
  });

  ReportSink sink(cfg.output, config_header(cfg), cfg.format, entmono::kMonogamyCsvHeader);
  long n_rows = 0;
  long n_violations = 0;
  long n_gated = 0;
  for (const auto& rows : slots) {
    for (const auto& r : rows) {
      sink.row(entmono::format_report_row(r, cfg.format));
      ++n_rows;
      if (!r.conditions_met) {
        ++n_gated;
      } else if (r.residual < -entmono::kResidualTol) {
        ++n_violations;
      }
    }
  }
  std::cerr << "verify: " << n_rows << " rows, " << n_violations << " violations, "
            << n_gated << " condition-gated rows skipped assertion\n";
  return n_violations > 0 ? kExitViolation : 0;
}

// ---- crosscheck ----------------------------------------------------------------

int cmd_crosscheck(const RunConfig& cfg) {
  constexpr double kTol = 1e-5;

  struct Entry {
    std::string id;
    StateVector psi;
  };
  std::vector<Entry> states;
  states.push_back({"bell", entmono::make_named_state(entmono::StateFamily::bell, 2)});
  states.push_back({"product", entmono::make_named_state(entmono::StateFamily::product, 2)});
  for (long i = 0; i < cfg.samples; ++i) {
    states.push_back({"haar-" + zero_pad(i, 6),
                      entmono::sample_haar_state(2, cfg.seed + static_cast<std::uint64_t>(i))});
  }

  struct Row {
    std::string id;
    MeasureKind kind;
    double closed, variational;
  };
  std::vector<std::array<Row, 2>> slots(states.size());
  entmono::parallel_for(static_cast<long>(states.size()), cfg.jobs, [&](long i) {
    const auto& [id, psi] = states[i];
    constexpr int root[] = {0};
    const double c = entmono::concurrence_pure(psi, root);
    entmono::VariationalOptions opts;
    opts.seed = cfg.seed + static_cast<std::uint64_t>(i);
    const double s = entmono::max_product_overlap(psi, opts);
    slots[i][0] = {id, MeasureKind::bures, entmono::bures_of(c), std::max(0.0, 2.0 - 2.0 * s)};
    slots[i][1] = {id, MeasureKind::geometric, entmono::geometric_of(c),
                   std::max(0.0, 1.0 - s * s)};
  });

  ReportSink sink(cfg.output, config_header(cfg), cfg.format,
                  "state_id,kind,closed_form,variational,abs_diff");
  long n_violations = 0;
  double max_diff = 0.0;
  for (const auto& pair : slots) {
    for (const auto& row : pair) {
      const double diff = std::abs(row.closed - row.variational);
      max_diff = std::max(max_diff, diff);
      if (diff > kTol) ++n_violations;
      if (cfg.format == ReportFormat::csv) {
        sink.row(row.id + "," + std::string(entmono::to_string(row.kind)) + "," +
                 entmono::format_double(row.closed) + "," +
                 entmono::format_double(row.variational) + "," +
                 entmono::format_double(diff));
      } else {
        sink.row("{\"state_id\":\"" + row.id + "\",\"kind\":\"" +
                 std::string(entmono::to_string(row.kind)) +
                 "\",\"closed_form\":" + entmono::format_double(row.closed) +
                 ",\"variational\":" + entmono::format_double(row.variational) +
                 ",\"abs_diff\":" + entmono::format_double(diff) + "}");
      }
    }
  }
  std::cerr << "crosscheck: " << 2 * slots.size() << " rows, max |closed - variational| = "
            << max_diff << ", " << n_violations << " above " << kTol << "\n";
  return n_violations > 0 ? kExitViolation : 0;
}

// ---- lemma-sweep ---------------------------------------------------------------

int cmd_lemma_sweep(const RunConfig& cfg) {
  const auto rows = entmono::lemma_sweep(cfg.grid, cfg.etas,
                                         static_cast<int>(cfg.samples), cfg.seed);
  ReportSink sink(cfg.output, config_header(cfg), cfg.format, entmono::kLemmaCsvHeader);
  long n_violations = 0;
  for (const auto& row : rows) {
    sink.row(entmono::format_lemma_row(row, cfg.format));
    if (row.min_residual < -entmono::kScalarTol) ++n_violations;
  }
  std::cerr << "lemma-sweep: " << rows.size() << " inequalities, " << n_violations
            << " with min residual below -1e-12\n";
  return n_violations > 0 ? kExitViolation : 0;
}

// ---- config validation -----------------------------------------------------------

void validate(RunConfig& cfg) {
  if (cfg.command != "measure" && cfg.command != "verify" && cfg.command != "crosscheck" &&
      cfg.command != "lemma-sweep") {
    throw ConfigError("--command: unknown command \"" + cfg.command + "\"");
  }
  cfg.format = entmono::parse_report_format(cfg.format_name);
  try {
    cfg.kinds = expand_kinds(cfg.kind_names);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--kind: ") + e.what());
  }
  cfg.inequalities = expand_inequalities(cfg.ineq_names);
  for (double eta : cfg.etas) {
    if (!(eta >= 1.0)) {
      throw ConfigError("--eta: value " + std::to_string(eta) + " must be >= 1");
    }
  }
  if (!(cfg.k >= 1.0)) throw ConfigError("--k: must be >= 1");
  if (!(cfg.k_prime >= 1.0)) throw ConfigError("--k-prime: must be >= 1");
  if (cfg.jobs < 1) throw ConfigError("--jobs: must be >= 1");

  if (cfg.command == "measure") {
    if (cfg.input.empty()) throw ConfigError("--input: required for measure");
  }
  if (cfg.command == "verify") {
    if (!cfg.n_qubits_given) throw ConfigError("--n-qubits: required for verify");
    if (cfg.n_qubits < 3 || cfg.n_qubits > 8) {
      throw ConfigError("--n-qubits: verify requires 3 <= n <= 8, got " +
                        std::to_string(cfg.n_qubits));
    }
    const bool t4_explicit =
        std::find(cfg.ineq_names.begin(), cfg.ineq_names.end(), "t4") != cfg.ineq_names.end();
    if (cfg.n_qubits < 4) {
      if (t4_explicit) {
        throw ConfigError("--ineq: t4 requires --n-qubits >= 4, got " +
                          std::to_string(cfg.n_qubits));
      }
      cfg.inequalities.erase("t4");
    }
    if (cfg.inequalities.count("t4") &&
        (cfg.m < 1 || cfg.m > cfg.n_qubits - 3)) {
      throw ConfigError("--m: must be in [1, n_qubits - 3], got " + std::to_string(cfg.m));
    }
    if (cfg.samples < 1) throw ConfigError("--samples: must be >= 1");
    if (cfg.etas.empty()) cfg.etas = {1.0, 1.5, 2.0, 3.0};
  }
  if (cfg.command == "crosscheck") {
    if (cfg.n_qubits_given && cfg.n_qubits != 2) {
      throw ConfigError("--n-qubits: crosscheck operates on 2-qubit states");
    }
    if (cfg.samples < 1) throw ConfigError("--samples: must be >= 1");
  }
  if (cfg.command == "lemma-sweep") {
    if (cfg.grid < 11) throw ConfigError("--grid: resolution must be >= 11 per axis");
    if (cfg.samples < 1) throw ConfigError("--samples: must be >= 1");
    if (cfg.etas.empty()) cfg.etas = {1.0, 1.5, 2.0, 4.0};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-based entanglement measures and monogamy verification"};
  app.get_formatter()->column_width(30);

  RunConfig cfg;
  app.add_option("--command", cfg.command, "measure | verify | crosscheck | lemma-sweep")
      ->required();
  app.add_option("--n-qubits", cfg.n_qubits, "number of qubits (verify: 3..8)");
  app.add_option("--samples", cfg.samples,
                 "sample count (verify default 1000, crosscheck 100, lemma-sweep random "
                 "points 1000)");
  app.add_option("--seed", cfg.seed, "base RNG seed; state i uses seed + i (default 0)");
  app.add_option("--eta", cfg.etas,
                 "power list, each >= 1 (verify default 1,1.5,2,3; lemma-sweep default "
                 "1,1.5,2,4)")
      ->delimiter(',');
  app.add_option("--k", cfg.k, "conditional-relation k >= 1 (default 1)");
  app.add_option("--k-prime", cfg.k_prime, "conditional-relation k' >= 1 (default 1)");
  app.add_option("--m", cfg.m, "conditional-relation split index (default 1)");
  app.add_option("--kind", cfg.kind_names,
                 "measure kinds: bures, geometric, concurrence, all (default all)")
      ->delimiter(',');
  app.add_option("--ineq", cfg.ineq_names,
                 "inequalities for verify: ckw, power, t3, t4, all (default all)")
      ->delimiter(',');
  app.add_option("--input", cfg.input, "state JSON file (measure)");
  app.add_option("--output", cfg.output, "report file (default stdout)");
  app.add_option("--format", cfg.format_name, "jsonl | csv (default jsonl)");
  app.add_option("--jobs", cfg.jobs, "worker threads (default: logical processors)");
  app.add_option("--grid", cfg.grid, "lemma-sweep grid resolution per axis (default 201)");
  app.add_option("--permute", cfg.permute,
                 "qubit relabeling for measure: new qubit p is old qubit permute[p]")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  cfg.n_qubits_given = app.count("--n-qubits") > 0;
  cfg.etas_given = app.count("--eta") > 0;
  if (app.count("--samples") == 0) {
    cfg.samples = (cfg.command == "crosscheck") ? 100 : 1000;
  }

  try {
    validate(cfg);
    if (cfg.command == "measure") return cmd_measure(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "crosscheck") return cmd_crosscheck(cfg);
    return cmd_lemma_sweep(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const entmono::StateFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
