#include "wmono/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "wmono/json_io.hpp"
#include "wmono/rng.hpp"

namespace wmono {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitResidualFailure = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

nlohmann::json parse_json_text(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

MixtureSpec load_mixture(const RunConfig& cfg) {
  if (cfg.input_path.has_value() == cfg.inline_spec.has_value()) {
    throw UsageError("exactly one of --input and --spec is required");
  }
  std::string text;
  if (cfg.input_path) {
    std::ifstream file(*cfg.input_path);
    if (!file) throw std::invalid_argument("cannot open input file: " + *cfg.input_path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  } else {
    text = *cfg.inline_spec;
  }
  MixtureSpec parsed = parse_mixture_spec(parse_json_text(text, "spec"));
  if (!cfg.p_override) return parsed;
  return MixtureSpec(parsed.wclass(), *cfg.p_override, parsed.ancilla());
}

Partition load_partition(const RunConfig& cfg, int n) {
  if (!cfg.partition_text) return Partition::finest(n);
  return parse_partition(parse_json_text(*cfg.partition_text, "partition"));
}

ReportMode parse_mode(const std::string& mode) {
  if (mode == "closed") return ReportMode::kClosedForm;
  if (mode == "numeric") return ReportMode::kVerifyNumeric;
  throw UsageError("mode must be \"closed\" or \"numeric\"");
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("format must be \"json\" or \"csv\"");
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file: " << *cfg.out_path << "\n";
      return kExitInputError;
    }
    file << text;
    return kExitOk;
  }
  out << text;
  return kExitOk;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_format(cfg.format);
    const ReportMode mode = parse_mode(cfg.mode);
    if (cfg.budget < 1) throw UsageError("budget must be at least 1");
    const MixtureSpec mix = load_mixture(cfg);
    const int n = mix.wclass().subsystem_count();
    const Partition partition = load_partition(cfg, n);
    validate_partition(partition, n);
    if (cfg.focus < 0 || cfg.focus > partition.block_count()) {
      throw std::invalid_argument("focus block out of range");
    }

    std::vector<int> foci;
    if (cfg.focus == 0) {
      for (int b = 0; b < partition.block_count(); ++b) foci.push_back(b);
    } else {
      foci.push_back(cfg.focus - 1);
    }

    std::vector<MonogamyReport> reports;
    bool all_ok = true;
    for (const int focus : foci) {
      MonogamyReport report = build_report(
          mix, partition, focus, mode, cfg.budget,
          derive_seed(cfg.seed, "verify/focus", static_cast<std::uint64_t>(focus)));
      if (cfg.tol_override) report.tolerances.algebraic = *cfg.tol_override;
      all_ok = all_ok && report.within_tolerance();
      reports.push_back(std::move(report));
    }

    std::string text;
    if (cfg.format == "json") {
      if (reports.size() == 1) {
        text = report_to_json(reports.front()).dump(2) + "\n";
      } else {
        nlohmann::json array = nlohmann::json::array();
        for (const auto& report : reports) array.push_back(report_to_json(report));
        text = array.dump(2) + "\n";
      }
    } else {
      text = report_csv_header() + "\n";
      for (const auto& report : reports) text += report_csv_row("0", report) + "\n";
    }
    const int emit_status = emit(cfg, text, out, err);
    if (emit_status != kExitOk) return emit_status;
    if (!all_ok) {
      err << "verify: residuals exceed tolerance\n";
      return kExitResidualFailure;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const ReportMode mode = parse_mode(cfg.mode);
    if (cfg.p_list.empty()) throw UsageError("sweep requires a non-empty --p-list");
    if (cfg.trials < 1) throw UsageError("trials must be at least 1");
    if (cfg.n_min < 2 || cfg.n_min > cfg.n_max) throw UsageError("invalid n range");
    if (cfg.d_min < 2 || cfg.d_min > cfg.d_max) throw UsageError("invalid d range");
    if (cfg.budget < 1) throw UsageError("budget must be at least 1");
    for (const double p : cfg.p_list) {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p values must lie in [0, 1]");
    }
    std::vector<double> p_values = cfg.p_list;
    std::sort(p_values.begin(), p_values.end());
    p_values.erase(std::unique(p_values.begin(), p_values.end()), p_values.end());
    const double tolerance = cfg.tol_override.value_or(tol::kAlgebraic);

    struct Row {
      int n;
      int d;
      double p;
      std::uint64_t seed;
      int focus;
      std::string text;
      bool ok;
    };
    std::vector<Row> rows;

    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
          const std::uint64_t base = derive_seed(
              derive_seed(derive_seed(cfg.seed, "sweep/n", static_cast<std::uint64_t>(n)),
                          "sweep/d", static_cast<std::uint64_t>(d)),
              "sweep/trial", static_cast<std::uint64_t>(trial));
          const WClassSpec spec = random_wclass(n, d, derive_seed(base, "spec"));
          const Partition partition = random_partition(n, derive_seed(base, "partition"));
          for (const double p : p_values) {
            const MixtureSpec mix(spec, p);
            for (int focus = 0; focus < partition.block_count(); ++focus) {
              MonogamyReport report =
                  build_report(mix, partition, focus, mode, cfg.budget,
                               derive_seed(base, "focus", static_cast<std::uint64_t>(focus)));
              if (cfg.tol_override) report.tolerances.algebraic = *cfg.tol_override;
              std::string text;
              text += std::to_string(n);
              text += ',';
              text += std::to_string(d);
              text += ',';
              text += format_double(p);
              text += ',';
              text += std::to_string(base);
              text += ',';
              text += std::to_string(focus + 1);
              text += ',';
              text += format_double(report.lhs_tangle);
              text += ',';
              text += format_double(report.residual_ckw);
              text += ',';
              text += format_double(report.residual_dual);
              text += ',';
              text += format_double(report.max_pair_residual());
              rows.push_back(
                  {n, d, p, base, focus, std::move(text), report.within_tolerance()});
            }
          }
        }
      }
    }

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return std::tie(a.n, a.d, a.p, a.seed, a.focus) <
             std::tie(b.n, b.d, b.p, b.seed, b.focus);
    });

    std::string text = "n,d,p,seed,focus,lhs,residual_ckw,residual_dual,max_pair_residual\n";
    bool all_ok = true;
    for (const auto& row : rows) {
      text += row.text;
      text += '\n';
      all_ok = all_ok && row.ok;
    }
    const int emit_status = emit(cfg, text, out, err);
    if (emit_status != kExitOk) return emit_status;
    if (!all_ok) {
      err << "sweep: residuals exceed tolerance " << format_double(tolerance) << "\n";
      return kExitResidualFailure;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_format(cfg.format);
    if (cfg.samples < 1) throw UsageError("samples must be at least 1");
    const MixtureSpec mix = load_mixture(cfg);
    const int n = mix.wclass().subsystem_count();
    const int d = mix.wclass().local_dim();
    if (cfg.pair_s < 1 || cfg.pair_s > n || cfg.pair_t < 1 || cfg.pair_t > n) {
      throw std::invalid_argument("pair subsystem index out of range");
    }
    if (cfg.pair_s == cfg.pair_t) throw std::invalid_argument("pair subsystems must differ");
    const int site_s = cfg.pair_s - 1;
    const int site_t = cfg.pair_t - 1;

    const std::vector<int> dims(static_cast<std::size_t>(n), d);
    const SubsystemIndexSet keep{site_s, site_t};
    const Matrix reduced = partial_trace(build_mixture(mix), dims, keep);
    const std::vector<int> pair_dims{d, d};
    const int s_position = site_s < site_t ? 0 : 1;
    const BipartiteCut cut =
        BipartiteCut::against_rest(SubsystemIndexSet{s_position}, 2);

    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const int r = 2 + k % 3;
      const Matrix u = haar_unitary(
          r, derive_seed(cfg.seed, "decompose/sample", static_cast<std::uint64_t>(k)));
      const double avg =
          ensemble_average_concurrence(hjw_ensemble(reduced, pair_dims, u), cut);
      if (k == 0) {
        min = max = avg;
      } else {
        min = std::min(min, avg);
        max = std::max(max, avg);
      }
      const double delta = avg - mean;
      mean += delta / (k + 1);
      m2 += delta * (avg - mean);
    }
    const double stddev = std::sqrt(m2 / cfg.samples);
    const double closed = pair_concurrence_closed(mix, site_s, site_t).concurrence;

    std::string text;
    if (cfg.format == "json") {
      const nlohmann::json j{{"pair", {cfg.pair_s, cfg.pair_t}}, {"samples", cfg.samples},
                             {"min", min},           {"max", max},
                             {"mean", mean},         {"stddev", stddev},
                             {"closed_form", closed}};
      text = j.dump(2) + "\n";
    } else {
      text = "pair_s,pair_t,samples,min,max,mean,stddev,closed_form\n";
      text += std::to_string(cfg.pair_s) + ',' + std::to_string(cfg.pair_t) + ',' +
              std::to_string(cfg.samples) + ',' + format_double(min) + ',' +
              format_double(max) + ',' + format_double(mean) + ',' + format_double(stddev) +
              ',' + format_double(closed) + '\n';
    }
    return emit(cfg, text, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace wmono
