#include "wmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wmono/rng.hpp"

namespace wmono {

namespace {

// Cut of the reduction to `kept` (ascending) that puts `side` on one side.
BipartiteCut cut_within_kept(const std::vector<int>& kept, const SubsystemIndexSet& side) {
  std::vector<int> side_positions;
  std::vector<int> rest_positions;
  for (int pos = 0; pos < static_cast<int>(kept.size()); ++pos) {
    if (side.contains(kept[static_cast<std::size_t>(pos)])) {
      side_positions.push_back(pos);
    } else {
      rest_positions.push_back(pos);
    }
  }
  return BipartiteCut{SubsystemIndexSet(std::move(side_positions)),
                      SubsystemIndexSet(std::move(rest_positions))};
}

// Brute-force value of the lhs tangle. For p = 1 this is the squared
// concurrence of the realized vector across the focus cut; for p < 1 the
// purification is realized and the ancilla pair term is subtracted.
double lhs_via_realized_vector(const MixtureSpec& mix, const CoarseWClassSpec& coarse,
                               int focus) {
  const SubsystemIndexSet& block = coarse.partition().block(focus);
  if (mix.p() == 1.0) {
    const StateVector psi = build_wclass(mix.wclass());
    const double c =
        concurrence_pure(psi, BipartiteCut::against_rest(block, psi.subsystem_count()));
    return c * c;
  }
  const StateVector purified = build_wclass(purify_mixture(mix));
  const double c =
      concurrence_pure(purified, BipartiteCut::against_rest(block, purified.subsystem_count()));
  const double q = coarse.block_weight(focus);
  const double ancilla_pair_tangle = 4.0 * (mix.p() * q) * (1.0 - mix.p());
  return c * c - ancilla_pair_tangle;
}

}  // namespace

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kClosedForm: return "closed-form";
    case Provenance::kBruteForce: return "brute-force";
    case Provenance::kNumericOptimizer: return "numeric-optimizer";
  }
  return "unknown";
}

double MonogamyReport::max_pair_residual() const {
  double worst = 0.0;
  for (const auto& pair : pairs) worst = std::max(worst, pair.c_coa_residual);
  return worst;
}

bool MonogamyReport::within_tolerance() const {
  if (residual_ckw > tolerances.algebraic) return false;
  if (residual_dual > tolerances.algebraic) return false;
  if (lhs_cross_check && std::abs(*lhs_cross_check - lhs_tangle) > tolerances.algebraic) {
    return false;
  }
  for (const auto& pair : pairs) {
    const double limit = pair.numeric_min ? tolerances.decomposition_gap : tolerances.algebraic;
    if (pair.c_coa_residual > limit) return false;
    if (pair.numeric_min &&
        std::abs(*pair.numeric_min * *pair.numeric_min - pair.tangle) > tolerances.optimizer) {
      return false;
    }
  }
  if (numeric_lhs_min &&
      std::abs(*numeric_lhs_min * *numeric_lhs_min - lhs_tangle) > tolerances.optimizer) {
    return false;
  }
  return true;
}

double block_tangle_closed(const MixtureSpec& mix, const CoarseWClassSpec& coarse, int block) {
  const double q = coarse.block_weight(block);
  const double p = mix.p();
  return 4.0 * p * p * q * (1.0 - q);
}

MonogamyReport build_report(const MixtureSpec& mix, const Partition& partition, int focus,
                            ReportMode mode, int budget, std::uint64_t seed) {
  const WClassSpec& w = mix.wclass();
  const int n = w.subsystem_count();
  validate_partition(partition, n);
  if (focus < 0 || focus >= partition.block_count()) {
    throw std::invalid_argument("focus block out of range");
  }
  const CoarseWClassSpec coarse = coarse_grain(w, partition);

  MonogamyReport report;
  report.focus = focus;
  report.mode = mode == ReportMode::kClosedForm ? "closed" : "numeric";
  report.lhs_tangle = block_tangle_closed(mix, coarse, focus);
  report.lhs_source = Provenance::kClosedForm;
  report.lhs_cross_check = lhs_via_realized_vector(mix, coarse, focus);

  const std::vector<int> dims(static_cast<std::size_t>(n), w.local_dim());
  Matrix mixture_rho;
  if (mode == ReportMode::kVerifyNumeric) mixture_rho = build_mixture(mix);

  double pair_sum = 0.0;
  double coa_sum = 0.0;
  for (int k = 0; k < partition.block_count(); ++k) {
    if (k == focus) continue;
    const PairConcurrence closed = block_pair_concurrence(coarse, focus, k, mix.p());
    PairCheck check;
    check.partner = k;
    check.tangle = closed.concurrence * closed.concurrence;
    check.coa_tangle = closed.assisted * closed.assisted;
    check.c_coa_residual = std::abs(closed.concurrence - closed.assisted);
    check.source = Provenance::kClosedForm;

    if (mode == ReportMode::kVerifyNumeric) {
      std::vector<int> kept = partition.block(focus).indices();
      kept.insert(kept.end(), partition.block(k).indices().begin(),
                  partition.block(k).indices().end());
      std::sort(kept.begin(), kept.end());
      const SubsystemIndexSet keep(kept);
      const Matrix reduced = partial_trace(mixture_rho, dims, keep);
      const std::vector<int> kept_dims(kept.size(), w.local_dim());
      const BipartiteCut cut = cut_within_kept(kept, partition.block(focus));
      const MinMaxEstimate estimate = concurrence_minmax_numeric(
          reduced, kept_dims, cut, budget,
          derive_seed(seed, "report/pair", static_cast<std::uint64_t>(k)));
      check.numeric_min = estimate.min_average;
      check.numeric_max = estimate.max_average;
      check.c_coa_residual = estimate.max_average - estimate.min_average;
      check.source = Provenance::kNumericOptimizer;
    }

    pair_sum += check.tangle;
    coa_sum += check.coa_tangle;
    report.pairs.push_back(std::move(check));
  }
  report.residual_ckw = std::abs(report.lhs_tangle - pair_sum);
  report.residual_dual = std::abs(report.lhs_tangle - coa_sum);

  if (mode == ReportMode::kVerifyNumeric) {
    const MinMaxEstimate estimate = concurrence_minmax_numeric(
        mixture_rho, dims, BipartiteCut::against_rest(partition.block(focus), n), budget,
        derive_seed(seed, "report/lhs"));
    report.numeric_lhs_min = estimate.min_average;
    report.numeric_lhs_max = estimate.max_average;
  }
  return report;
}

WClassSpec random_wclass(int n, int d, std::uint64_t seed) {
  if (n < 2 || d < 2) throw std::invalid_argument("random_wclass: need n >= 2 and d >= 2");
  hilbert_dim(std::vector<int>(static_cast<std::size_t>(n), d));  // cap check
  Rng rng(seed);
  Matrix coeffs(n, d - 1);
  do {
    for (Eigen::Index j = 0; j < coeffs.cols(); ++j) {
      for (Eigen::Index i = 0; i < coeffs.rows(); ++i) {
        coeffs(i, j) = rng.gaussian_complex();
      }
    }
  } while (coeffs.squaredNorm() <= 0.0);
  return WClassSpec(n, d, std::move(coeffs));
}

Partition random_partition(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_partition: need n >= 2");
  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  const int blocks = 2 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n - 1));

  // blocks-1 distinct cut points over the n-1 gaps of the shuffled order
  std::vector<int> gaps(static_cast<std::size_t>(n - 1));
  std::iota(gaps.begin(), gaps.end(), 1);
  for (int i = n - 2; i > 0; --i) {
    const auto j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(gaps[static_cast<std::size_t>(i)], gaps[static_cast<std::size_t>(j)]);
  }
  std::vector<int> cuts(gaps.begin(), gaps.begin() + (blocks - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::vector<SubsystemIndexSet> result;
  int begin = 0;
  for (const int end : cuts) {
    result.emplace_back(std::vector<int>(order.begin() + begin, order.begin() + end));
    begin = end;
  }
  return Partition(std::move(result));
}

}  // namespace wmono
