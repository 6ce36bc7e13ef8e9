#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmono/partitions.hpp"

namespace wmono {

enum class Provenance { kClosedForm, kBruteForce, kNumericOptimizer };
std::string_view provenance_name(Provenance p);

enum class ReportMode { kClosedForm, kVerifyNumeric };

struct ReportTolerances {
  double algebraic = tol::kAlgebraic;
  double optimizer = tol::kOptimizer;
  double decomposition_gap = tol::kDecompositionGap;
};

// One pairwise term of a saturation report. The tangle values come from the
// closed form; numeric mode attaches sampled min/max evidence and the
// residual becomes the sampled max-min gap.
struct PairCheck {
  int partner;         // 0-based block index
  double tangle;       // C^2
  double coa_tangle;   // (C^a)^2
  double c_coa_residual;
  Provenance source = Provenance::kClosedForm;
  std::optional<double> numeric_min;
  std::optional<double> numeric_max;
};

struct MonogamyReport {
  int focus = 0;  // 0-based block index
  double lhs_tangle = 0.0;
  Provenance lhs_source = Provenance::kClosedForm;
  // Brute-force confirmation: concurrence of the raw vector for p = 1, the
  // purification subtraction for p < 1.
  std::optional<double> lhs_cross_check;
  std::optional<double> numeric_lhs_min;
  std::optional<double> numeric_lhs_max;
  std::vector<PairCheck> pairs;
  double residual_ckw = 0.0;   // |lhs - sum of pair tangles|, never clamped
  double residual_dual = 0.0;  // |lhs - sum of CoA tangles|
  std::string mode = "closed";
  ReportTolerances tolerances;

  double max_pair_residual() const;
  bool within_tolerance() const;
};

// Closed-form tangle of one block against the rest of the mixture:
// 4 p^2 q_s (1 - q_s); p = 1 recovers the pure-state form.
double block_tangle_closed(const MixtureSpec& mix, const CoarseWClassSpec& coarse, int block);

// Assemble the saturation report for one focus block. Closed-form mode pins
// every value algebraically and confirms the lhs by brute force; numeric
// mode additionally samples decompositions per pair and runs the min/max
// optimizer on the focus cut.
MonogamyReport build_report(const MixtureSpec& mix, const Partition& partition, int focus,
                            ReportMode mode, int budget, std::uint64_t seed);

// Spec with complex-Gaussian coefficients, normalized; deterministic per
// seed and never all-zero.
WClassSpec random_wclass(int n, int d, std::uint64_t seed);

// Random partition into 2..n blocks (contiguous slices of a shuffle).
Partition random_partition(int n, std::uint64_t seed);

}  // namespace wmono
