#pragma once

#include <cstdint>
#include <vector>

#include "wmono/states.hpp"

namespace wmono {

// Disjoint covering split of a state's subsystems.
struct BipartiteCut {
  SubsystemIndexSet side_a;
  SubsystemIndexSet side_b;

  // Throws unless the two sides are non-empty, disjoint, and cover 0..n-1.
  void validate(int subsystem_count) const;

  static BipartiteCut against_rest(SubsystemIndexSet side, int subsystem_count);
};

// Weighted pure-state list realizing a density matrix.
struct DecompositionEnsemble {
  struct Member {
    double probability;
    StateVector state;
  };
  std::vector<Member> members;

  double total_probability() const;
  Matrix mixture() const;  // sum_h p_h |phi_h><phi_h|
  double reconstruction_error(const Matrix& rho) const;
};

// sqrt(2 (1 - tr rho_A^2)) across the cut. Both reductions of a pure state
// share a spectrum, so the smaller side is traced down.
double concurrence_pure(const StateVector& state, const BipartiteCut& cut);

// Squared concurrence of one site against the rest for a normalized W-class
// spec: 4 w (1 - w) with w the site's excitation weight.
double tangle_one_vs_rest(const WClassSpec& spec, int site);

// Two-qudit reduction of the mixture onto (site_a, site_b), in closed form.
// The first tensor factor is site_a as given; rank <= 2 with support on
// span{ sum_i sqrt(p) (a_{ai}|i0> + a_{bi}|0i>), |00> }.
Matrix reduced_pair_state(const MixtureSpec& mix, int site_a, int site_b);

// All size-r pure-state decompositions of a rank-2 density matrix arise from
// an r x r unitary mixing the two spectral vectors scaled by root
// eigenvalues: |phi_h~> = u_{h0} |x~> + u_{h1} |y~>, p_h = <phi_h~|phi_h~>.
// Members below tol::kMemberDrop are dropped.
DecompositionEnsemble hjw_ensemble(const Matrix& rho, const std::vector<int>& local_dims,
                                   const Matrix& unitary);

// sum_h p_h C(phi_h) across the cut.
double ensemble_average_concurrence(const DecompositionEnsemble& ensemble,
                                    const BipartiteCut& cut);

struct PairConcurrence {
  double concurrence;
  double assisted;  // concurrence of assistance
};

// Closed form for the mixture's pair reduction: both the concurrence and the
// concurrence of assistance equal 2 p alpha_a alpha_b.
PairConcurrence pair_concurrence_closed(const MixtureSpec& mix, int site_a, int site_b);

struct MinMaxEstimate {
  double min_average;
  double max_average;
};

// Estimate the decomposition min/max of the average concurrence for a rank-2
// density matrix: `budget` Haar-random ensembles with r cycling {2,3,4},
// then coordinate-wise local search on the isometry parameters of the best
// candidates. Every reported value is an achieved ensemble average, so
// min >= concurrence and max <= concurrence of assistance. Deterministic per
// seed.
MinMaxEstimate concurrence_minmax_numeric(const Matrix& rho, const std::vector<int>& local_dims,
                                          const BipartiteCut& cut, int budget,
                                          std::uint64_t seed);

// Two-qubit concurrence max(0, l1-l2-l3-l4), where l_i are the descending
// square-rooted eigenvalues of rho (sy x sy) rho* (sy x sy). Computed as the
// singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)), which carries the
// same spectrum without the square-root noise floor of the non-Hermitian
// eigenproblem.
double wootters_2qubit(const Matrix& rho);

}  // namespace wmono
