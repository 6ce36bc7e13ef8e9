#include "wmono/partitions.hpp"

#include <cmath>
#include <stdexcept>

namespace wmono {

Partition Partition::finest(int subsystem_count) {
  std::vector<SubsystemIndexSet> blocks;
  blocks.reserve(static_cast<std::size_t>(subsystem_count));
  for (int k = 0; k < subsystem_count; ++k) blocks.emplace_back(std::initializer_list<int>{k});
  return Partition(std::move(blocks));
}

const SubsystemIndexSet& Partition::block(int index) const {
  if (index < 0 || index >= block_count()) throw std::out_of_range("partition block out of range");
  return blocks_[static_cast<std::size_t>(index)];
}

void validate_partition(const Partition& partition, int subsystem_count) {
  if (partition.block_count() == 0) {
    throw std::invalid_argument("partition must have at least one block");
  }
  std::vector<bool> seen(static_cast<std::size_t>(subsystem_count), false);
  std::size_t covered = 0;
  for (const auto& block : partition.blocks()) {
    if (block.empty()) throw std::invalid_argument("partition block is empty");
    for (const int index : block.indices()) {
      if (index < 0 || index >= subsystem_count) {
        throw std::invalid_argument("partition index out of range");
      }
      if (seen[static_cast<std::size_t>(index)]) {
        throw std::invalid_argument("partition blocks overlap");
      }
      seen[static_cast<std::size_t>(index)] = true;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(subsystem_count)) {
    throw std::invalid_argument("partition does not cover all subsystems");
  }
}

CoarseWClassSpec::CoarseWClassSpec(WClassSpec source, Partition partition,
                                   Eigen::MatrixXd level_weights)
    : source_(std::move(source)),
      partition_(std::move(partition)),
      level_weights_(std::move(level_weights)) {}

int CoarseWClassSpec::effective_dim() const {
  std::size_t largest = 0;
  for (const auto& block : partition_.blocks()) largest = std::max(largest, block.size());
  return 1 + (local_dim() - 1) * static_cast<int>(largest);
}

double CoarseWClassSpec::block_weight(int block) const {
  if (block < 0 || block >= block_count()) throw std::out_of_range("block index out of range");
  return level_weights_.row(block).sum();
}

double CoarseWClassSpec::block_level_weight(int block, int level) const {
  if (block < 0 || block >= block_count()) throw std::out_of_range("block index out of range");
  if (level < 1 || level >= local_dim()) throw std::out_of_range("level out of range");
  return level_weights_(block, level - 1);
}

WClassSpec CoarseWClassSpec::as_wclass_spec() const {
  return WClassSpec(block_count(), local_dim(),
                    level_weights_.cwiseSqrt().cast<Complex>());
}

CoarseWClassSpec coarse_grain(const WClassSpec& spec, const Partition& partition) {
  if (!spec.is_normalized(tol::kAlgebraic)) {
    throw std::invalid_argument("coarse_grain: spec must be normalized");
  }
  validate_partition(partition, spec.subsystem_count());

  const int levels = spec.local_dim() - 1;
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(partition.block_count(), levels);
  for (int b = 0; b < partition.block_count(); ++b) {
    for (const int site : partition.block(b).indices()) {
      for (int col = 0; col < levels; ++col) {
        weights(b, col) += std::norm(spec.coeffs()(site, col));
      }
    }
  }
  return CoarseWClassSpec(spec, partition, std::move(weights));
}

PairConcurrence block_pair_concurrence(const CoarseWClassSpec& coarse, int block_a, int block_b,
                                       double p) {
  if (block_a == block_b) {
    throw std::invalid_argument("block_pair_concurrence: blocks must differ");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("block_pair_concurrence: p must lie in [0, 1]");
  }
  const double value =
      2.0 * p * std::sqrt(coarse.block_weight(block_a) * coarse.block_weight(block_b));
  return {value, value};
}

Vector block_excitation_amplitudes(const WClassSpec& spec, const SubsystemIndexSet& block,
                                   int level) {
  if (level < 1 || level >= spec.local_dim()) throw std::out_of_range("level out of range");
  const int block_size = static_cast<int>(block.size());
  const int d = spec.local_dim();
  std::vector<int> dims(static_cast<std::size_t>(block_size), d);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(hilbert_dim(dims)));
  for (int pos = 0; pos < block_size; ++pos) {
    const int site = block.indices()[static_cast<std::size_t>(pos)];
    amps(static_cast<Eigen::Index>(excitation_index(pos, level, block_size, d))) =
        spec.coeff(site, level);
  }
  return amps;
}

}  // namespace wmono
