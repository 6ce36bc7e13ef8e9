#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wmono {

// Parsed command-line configuration shared by the subcommands. Exactly one
// of input_path / inline_spec supplies the state for verify and decompose.
struct RunConfig {
  std::optional<std::string> input_path;
  std::optional<std::string> inline_spec;
  std::optional<std::string> partition_text;
  int focus = 0;  // 1-based block label; 0 = report every block
  std::optional<double> p_override;
  std::string mode = "closed";  // closed | numeric
  int budget = 64;
  std::uint64_t seed = 1;
  std::optional<double> tol_override;
  std::string format = "json";  // json | csv
  std::optional<std::string> out_path;

  // sweep
  int n_min = 3;
  int n_max = 5;
  int d_min = 2;
  int d_max = 2;
  std::vector<double> p_list;
  int trials = 10;

  // decompose
  int pair_s = 1;  // 1-based
  int pair_t = 2;
  int samples = 500;
};

// Exit codes: 0 all residuals within tolerance, 1 input error, 2 residual
// failure. The report artifact goes to cfg.out_path or `out`.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Random (spec, partition) instances over the configured ranges; one CSV row
// per (n, d, p, seed, focus), byte-identical for a fixed master seed.
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Decomposition statistics for one pair reduction: min/max/mean/stddev of
// the ensemble-average concurrence over sampled decompositions, next to the
// closed-form value.
int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace wmono
