#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wmono/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "wmono: construct generalized W-class states, their rank-2 mixtures and "
      "purifications, and verify that their entanglement is exactly accounted "
      "for by pairwise terms under any partition of the subsystems.\n"
      "The WMONO_DIM_CAP environment variable overrides the amplitude cap."};
  app.require_subcommand(1);

  wmono::RunConfig cfg;
  std::string partition_text;
  std::string out_path;
  std::string input_path;
  std::string inline_spec;
  double p_value = 1.0;
  double tol_value = 0.0;
  std::vector<int> n_range{3, 5};
  std::vector<int> d_range{2, 2};
  std::vector<int> pair{1, 2};

  auto add_spec_options = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "Path to a JSON spec file");
    cmd->add_option("--spec", inline_spec, "Inline JSON spec");
    cmd->add_option("--p", p_value, "Override the mixing weight p in [0, 1]")
        ->check(CLI::Range(0.0, 1.0));
  };
  auto add_common_options = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "Master seed for all randomness");
    cmd->add_option("--tol", tol_value, "Residual tolerance for the exit status");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "Write the artifact to this file");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the saturation equalities for one spec and partition");
  add_spec_options(verify);
  verify->add_option("--partition", partition_text,
                     "Partition as a JSON list of 1-based index lists (default: finest)");
  verify->add_option("--focus", cfg.focus, "1-based focus block; 0 checks every block");
  verify->add_option("--mode", cfg.mode, "closed | numeric")
      ->check(CLI::IsMember({"closed", "numeric"}));
  verify->add_option("--budget", cfg.budget, "Decomposition samples per numeric check");
  add_common_options(verify);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Random (spec, partition) instances over ranges; one CSV row per focus");
  sweep->add_option("--n-range", n_range, "Subsystem count range MIN MAX")->expected(2);
  sweep->add_option("--d-range", d_range, "Local dimension range MIN MAX")->expected(2);
  sweep->add_option("--p-list", cfg.p_list, "Mixing weights to sweep")->delimiter(',');
  sweep->add_option("--trials", cfg.trials, "Random instances per (n, d)");
  sweep->add_option("--mode", cfg.mode, "closed | numeric")
      ->check(CLI::IsMember({"closed", "numeric"}));
  sweep->add_option("--budget", cfg.budget, "Decomposition samples per numeric check");
  add_common_options(sweep);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Sample pure-state decompositions of one pair reduction");
  add_spec_options(decompose);
  decompose->add_option("--pair", pair, "1-based subsystem pair S T")->expected(2);
  decompose->add_option("--samples", cfg.samples, "Number of sampled decompositions");
  add_common_options(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (verify->count("--input") || decompose->count("--input")) cfg.input_path = input_path;
  if (verify->count("--spec") || decompose->count("--spec")) cfg.inline_spec = inline_spec;
  if (verify->count("--p") || decompose->count("--p")) cfg.p_override = p_value;
  if (verify->count("--partition")) cfg.partition_text = partition_text;
  if (verify->count("--tol") || sweep->count("--tol") || decompose->count("--tol")) {
    cfg.tol_override = tol_value;
  }
  if (verify->count("--out") || sweep->count("--out") || decompose->count("--out")) {
    cfg.out_path = out_path;
  }
  cfg.n_min = n_range[0];
  cfg.n_max = n_range[1];
  cfg.d_min = d_range[0];
  cfg.d_max = d_range[1];
  cfg.pair_s = pair[0];
  cfg.pair_t = pair[1];

  if (verify->parsed()) return wmono::cmd_verify(cfg, std::cout, std::cerr);
  if (sweep->parsed()) return wmono::cmd_sweep(cfg, std::cout, std::cerr);
  return wmono::cmd_decompose(cfg, std::cout, std::cerr);
}
