#include "wmono/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wmono/rng.hpp"

namespace wmono {

namespace {

// Top two spectral components of a rank <= 2 density matrix, scaled by root
// eigenvalues. Throws if the third eigenvalue exceeds the rank tolerance.
struct SpectralPair {
  Vector x;  // sqrt(l1) v1
  Vector y;  // sqrt(l2) v2, zero for rank-1 input
  double second_weight;
};

SpectralPair rank2_spectral_pair(const Matrix& rho, const char* context) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument(std::string(context) + ": density matrix must be square");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian) {
    throw std::invalid_argument(std::string(context) + ": density matrix must be Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tol::kHermitian) {
    throw std::invalid_argument(std::string(context) + ": density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(std::string(context) + ": eigensolver failed to converge");
  }
  const auto& values = solver.eigenvalues();  // ascending
  const Eigen::Index n = values.size();
  if (n > 2 && values(n - 3) > tol::kRank) {
    throw std::invalid_argument(std::string(context) + ": density matrix has numerical rank > 2");
  }
  if (values(0) < -tol::kHermitian) {
    throw std::invalid_argument(std::string(context) + ": density matrix has negative eigenvalues");
  }
  SpectralPair pair;
  const double l1 = std::max(0.0, values(n - 1));
  const double l2 = n >= 2 ? std::max(0.0, values(n - 2)) : 0.0;
  pair.x = std::sqrt(l1) * solver.eigenvectors().col(n - 1);
  pair.y = n >= 2 ? Vector(std::sqrt(l2) * solver.eigenvectors().col(n - 2))
                  : Vector(Vector::Zero(n));
  pair.second_weight = l2;
  return pair;
}

// Average concurrence of the ensemble generated by an r x 2 isometry acting
// on the spectral pair. p_h C(phi_h) is accumulated without normalizing
// members, dropping weights below the configured floor.
double isometry_average_concurrence(const Matrix& iso, const SpectralPair& pair,
                                    const std::vector<int>& local_dims,
                                    const BipartiteCut& cut) {
  double total = 0.0;
  for (Eigen::Index h = 0; h < iso.rows(); ++h) {
    Vector unnorm = iso(h, 0) * pair.x + iso(h, 1) * pair.y;
    const double weight = unnorm.squaredNorm();
    if (weight < tol::kMemberDrop) continue;
    unnorm /= std::sqrt(weight);
    total += weight * concurrence_pure(StateVector(local_dims, std::move(unnorm)), cut);
  }
  return total;
}

Matrix random_isometry(int rows, Rng& rng) {
  Matrix gaussian(rows, 2);
  for (Eigen::Index j = 0; j < 2; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      gaussian(i, j) = rng.gaussian_complex();
    }
  }
  return orthonormal_columns(gaussian);
}

// Coordinate-wise descent/ascent on the real parameters of the isometry,
// re-orthonormalizing after each move.
double refine_extremum(Matrix iso, double value, bool minimize, const SpectralPair& pair,
                       const std::vector<int>& local_dims, const BipartiteCut& cut) {
  double step = 0.25;
  int sweeps = 0;
  while (step > 1e-7 && sweeps < 400) {
    ++sweeps;
    bool improved = false;
    for (Eigen::Index i = 0; i < iso.rows(); ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) {
        for (const Complex delta :
             {Complex{step, 0.0}, Complex{-step, 0.0}, Complex{0.0, step}, Complex{0.0, -step}}) {
          Matrix candidate = iso;
          candidate(i, j) += delta;
          candidate = orthonormal_columns(candidate);
          const double avg = isometry_average_concurrence(candidate, pair, local_dims, cut);
          const bool better = minimize ? avg < value - 1e-15 : avg > value + 1e-15;
          if (better) {
            iso = std::move(candidate);
            value = avg;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

void validate_pair_sites(const MixtureSpec& mix, int site_a, int site_b, const char* context) {
  const int n = mix.wclass().subsystem_count();
  if (site_a == site_b) {
    throw std::invalid_argument(std::string(context) + ": subsystems must differ");
  }
  if (site_a < 0 || site_a >= n || site_b < 0 || site_b >= n) {
    throw std::out_of_range(std::string(context) + ": subsystem index out of range");
  }
}

}  // namespace

void BipartiteCut::validate(int subsystem_count) const {
  if (side_a.empty() || side_b.empty()) {
    throw std::invalid_argument("bipartite cut sides must be non-empty");
  }
  std::size_t covered = 0;
  for (int k = 0; k < subsystem_count; ++k) {
    const bool in_a = side_a.contains(k);
    const bool in_b = side_b.contains(k);
    if (in_a && in_b) throw std::invalid_argument("bipartite cut sides overlap");
    if (in_a || in_b) ++covered;
  }
  if (covered != side_a.size() + side_b.size() ||
      covered != static_cast<std::size_t>(subsystem_count)) {
    throw std::invalid_argument("bipartite cut must cover all subsystems");
  }
}

BipartiteCut BipartiteCut::against_rest(SubsystemIndexSet side, int subsystem_count) {
  SubsystemIndexSet rest = side.complement(subsystem_count);
  return BipartiteCut{std::move(side), std::move(rest)};
}

double DecompositionEnsemble::total_probability() const {
  double total = 0.0;
  for (const auto& member : members) total += member.probability;
  return total;
}

Matrix DecompositionEnsemble::mixture() const {
  if (members.empty()) throw std::invalid_argument("ensemble has no members");
  Matrix rho = Matrix::Zero(members.front().state.dim(), members.front().state.dim());
  for (const auto& member : members) {
    rho.noalias() += member.probability * member.state.projector();
  }
  return rho;
}

double DecompositionEnsemble::reconstruction_error(const Matrix& rho) const {
  return (mixture() - rho).cwiseAbs().maxCoeff();
}

double concurrence_pure(const StateVector& state, const BipartiteCut& cut) {
  cut.validate(state.subsystem_count());
  // sqrt(2 (1 - tr rho_A^2)) evaluated through the Schmidt minors: with the
  // amplitudes reshaped to M across the cut, 1 - tr rho_A^2 is twice the sum
  // of squared moduli of the 2x2 minors of M (Cauchy-Binet). The sum has no
  // cancellation, so near-product states come out exactly zero instead of
  // carrying the sqrt(eps) noise floor of forming tr rho_A^2 first.
  const Matrix m = bipartite_amplitude_matrix(state, cut.side_a);
  double minor_sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = i + 1; k < m.rows(); ++k) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index l = j + 1; l < m.cols(); ++l) {
          minor_sum += std::norm(m(i, j) * m(k, l) - m(i, l) * m(k, j));
        }
      }
    }
  }
  return 2.0 * std::sqrt(minor_sum);
}

double tangle_one_vs_rest(const WClassSpec& spec, int site) {
  if (!spec.is_normalized(tol::kAlgebraic)) {
    throw std::invalid_argument("tangle_one_vs_rest: spec must be normalized");
  }
  const double weight = spec.site_weight(site);
  return 4.0 * weight * (1.0 - weight);
}

Matrix reduced_pair_state(const MixtureSpec& mix, int site_a, int site_b) {
  validate_pair_sites(mix, site_a, site_b, "reduced_pair_state");
  const WClassSpec& w = mix.wclass();
  const int d = w.local_dim();
  const double root_p = std::sqrt(mix.p());

  Vector excited = Vector::Zero(d * d);
  for (int level = 1; level < d; ++level) {
    excited(level * d) += root_p * w.coeff(site_a, level);  // |level, 0>
    excited(level) += root_p * w.coeff(site_b, level);      // |0, level>
  }
  const double ground_weight =
      std::max(0.0, 1.0 - mix.p() * (w.site_weight(site_a) + w.site_weight(site_b)));

  Matrix rho = excited * excited.adjoint();
  rho(0, 0) += Complex{ground_weight, 0.0};
  return rho;
}

DecompositionEnsemble hjw_ensemble(const Matrix& rho, const std::vector<int>& local_dims,
                                   const Matrix& unitary) {
  if (hilbert_dim(local_dims) != static_cast<std::size_t>(rho.rows())) {
    throw std::invalid_argument("hjw_ensemble: local dimensions do not match the matrix");
  }
  if (unitary.rows() != unitary.cols() || unitary.rows() < 2) {
    throw std::invalid_argument("hjw_ensemble: mixing matrix must be square with size >= 2");
  }
  const Matrix gram = unitary.adjoint() * unitary;
  if ((gram - Matrix::Identity(unitary.rows(), unitary.cols())).cwiseAbs().maxCoeff() >
      tol::kUnitary) {
    throw std::invalid_argument("hjw_ensemble: mixing matrix is not unitary within tolerance");
  }
  const SpectralPair pair = rank2_spectral_pair(rho, "hjw_ensemble");

  DecompositionEnsemble ensemble;
  for (Eigen::Index h = 0; h < unitary.rows(); ++h) {
    Vector unnorm = unitary(h, 0) * pair.x + unitary(h, 1) * pair.y;
    const double weight = unnorm.squaredNorm();
    if (weight < tol::kMemberDrop) continue;
    unnorm /= std::sqrt(weight);
    ensemble.members.push_back({weight, StateVector(local_dims, std::move(unnorm))});
  }
  return ensemble;
}

double ensemble_average_concurrence(const DecompositionEnsemble& ensemble,
                                    const BipartiteCut& cut) {
  double total = 0.0;
  for (const auto& member : ensemble.members) {
    total += member.probability * concurrence_pure(member.state, cut);
  }
  return total;
}

PairConcurrence pair_concurrence_closed(const MixtureSpec& mix, int site_a, int site_b) {
  validate_pair_sites(mix, site_a, site_b, "pair_concurrence_closed");
  const double value = 2.0 * mix.p() * std::sqrt(mix.wclass().site_weight(site_a)) *
                       std::sqrt(mix.wclass().site_weight(site_b));
  return {value, value};
}

MinMaxEstimate concurrence_minmax_numeric(const Matrix& rho, const std::vector<int>& local_dims,
                                          const BipartiteCut& cut, int budget,
                                          std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("concurrence_minmax_numeric: budget must be >= 1");
  cut.validate(static_cast<int>(local_dims.size()));
  const SpectralPair pair = rank2_spectral_pair(rho, "concurrence_minmax_numeric");

  if (pair.second_weight < tol::kMemberDrop) {
    // Pure state: the decomposition is unique.
    const double c =
        concurrence_pure(StateVector::normalized(local_dims, pair.x), cut);
    return {c, c};
  }

  double best_min = std::numeric_limits<double>::infinity();
  double best_max = -std::numeric_limits<double>::infinity();
  Matrix argmin, argmax;
  for (int trial = 0; trial < budget; ++trial) {
    const int members = 2 + trial % 3;
    Rng rng(derive_seed(seed, "minmax/trial", static_cast<std::uint64_t>(trial)));
    Matrix iso = random_isometry(members, rng);
    const double avg = isometry_average_concurrence(iso, pair, local_dims, cut);
    if (avg < best_min) {
      best_min = avg;
      argmin = iso;
    }
    if (avg > best_max) {
      best_max = avg;
      argmax = std::move(iso);
    }
  }
  best_min = refine_extremum(std::move(argmin), best_min, true, pair, local_dims, cut);
  best_max = refine_extremum(std::move(argmax), best_max, false, pair, local_dims, cut);
  return {best_min, best_max};
}

double wootters_2qubit(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("wootters_2qubit: expected a 4x4 density matrix");
  }
  if (!is_density_matrix(rho, 1e-8)) {
    throw std::invalid_argument("wootters_2qubit: input is not a two-qubit density matrix");
  }
  Matrix flip = Matrix::Zero(4, 4);  // sigma_y x sigma_y
  flip(0, 3) = Complex{-1.0, 0.0};
  flip(1, 2) = Complex{1.0, 0.0};
  flip(2, 1) = Complex{1.0, 0.0};
  flip(3, 0) = Complex{-1.0, 0.0};

  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("wootters_2qubit: eigensolver failed to converge");
  }
  Eigen::Vector4d clamped = solver.eigenvalues().cwiseMax(0.0);
  const Matrix sqrt_rho = solver.eigenvectors() *
                          clamped.cwiseSqrt().asDiagonal() *
                          solver.eigenvectors().adjoint();

  const Matrix a = sqrt_rho * flip * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();  // descending
  return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

}  // namespace wmono
