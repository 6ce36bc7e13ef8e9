#pragma once

#include <vector>

#include "wmono/entanglement.hpp"
#include "wmono/states.hpp"

namespace wmono {

// Ordered list of subsystem blocks. Blocks keep the caller's order; indices
// inside a block are sorted. Validity against a subsystem count is checked
// by validate_partition.
class Partition {
 public:
  explicit Partition(std::vector<SubsystemIndexSet> blocks) : blocks_(std::move(blocks)) {}

  static Partition finest(int subsystem_count);

  const std::vector<SubsystemIndexSet>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const SubsystemIndexSet& block(int index) const;

 private:
  std::vector<SubsystemIndexSet> blocks_;
};

// Throws std::invalid_argument with a distinct message per defect: empty
// block, index out of range, overlapping blocks, or uncovered subsystems.
void validate_partition(const Partition& partition, int subsystem_count);

// An n-qudit W-class spec viewed as an m-partite one: block weights
// q(s, i) = sum of |a(site, i)|^2 over the block's sites, q_s = sum_i q(s,i).
// Only the weights are stored; the renamed block basis is bookkeeping, and
// raw-state reductions serve as the oracle for everything derived here.
class CoarseWClassSpec {
 public:
  CoarseWClassSpec(WClassSpec source, Partition partition, Eigen::MatrixXd level_weights);

  int block_count() const { return static_cast<int>(level_weights_.rows()); }
  int local_dim() const { return static_cast<int>(level_weights_.cols()) + 1; }

  // Upper bound on the dimension a block's reduced state can occupy:
  // the ground state plus (d-1) excitations per site of the largest block.
  int effective_dim() const;

  double block_weight(int block) const;             // q_s
  double block_level_weight(int block, int level) const;  // q(s, i), level 1..d-1

  // The m-partite spec with coefficients sqrt(q(s, i)).
  WClassSpec as_wclass_spec() const;

  const Partition& partition() const { return partition_; }
  const WClassSpec& source() const { return source_; }

 private:
  WClassSpec source_;
  Partition partition_;
  Eigen::MatrixXd level_weights_;  // m x (d-1)
};

CoarseWClassSpec coarse_grain(const WClassSpec& spec, const Partition& partition);

// Concurrence and concurrence of assistance between two blocks of the
// coarse-grained state, scaled by the mixture weight: 2 p sqrt(q_s q_t).
PairConcurrence block_pair_concurrence(const CoarseWClassSpec& coarse, int block_a, int block_b,
                                       double p = 1.0);

// Unnormalized block-local excitation state |x~_{s,i}>: amplitudes of the
// spec's level-i excitation restricted to the block's sites. Used to check
// that the renamed block basis is orthonormal.
Vector block_excitation_amplitudes(const WClassSpec& spec, const SubsystemIndexSet& block,
                                   int level);

}  // namespace wmono
