#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "wmono/config.hpp"

namespace wmono {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Sorted set of 0-based subsystem positions.
class SubsystemIndexSet {
 public:
  SubsystemIndexSet() = default;
  SubsystemIndexSet(std::initializer_list<int> indices);
  explicit SubsystemIndexSet(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;
  SubsystemIndexSet complement(int subsystem_count) const;

  bool operator==(const SubsystemIndexSet& other) const = default;

 private:
  std::vector<int> indices_;
};

// Cap-checked product of subsystem dimensions.
std::size_t hilbert_dim(const std::vector<int>& local_dims);

// Pure state over a list of finite-dimensional subsystems. Amplitudes are a
// flat array under mixed-radix encoding with subsystem 0 as the most
// significant digit, so e.g. |100> on three qubits sits at index 4.
class StateVector {
 public:
  // Requires unit norm within tol::kNorm.
  StateVector(std::vector<int> local_dims, Vector amplitudes);

  // Rescales arbitrary non-zero amplitudes to unit norm.
  static StateVector normalized(std::vector<int> local_dims, Vector amplitudes);

  const std::vector<int>& local_dims() const { return local_dims_; }
  int subsystem_count() const { return static_cast<int>(local_dims_.size()); }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Matrix projector() const;  // |psi><psi|

 private:
  std::vector<int> local_dims_;
  Vector amplitudes_;
};

// Kronecker product; output entry count is cap-checked.
Matrix kron(const Matrix& a, const Matrix& b);

// Trace out every subsystem not in `keep`. The result is indexed by the kept
// subsystems in ascending position order and preserves the trace.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& local_dims,
                     const SubsystemIndexSet& keep);

// partial_trace(|psi><psi|) computed directly from the amplitudes.
Matrix reduced_density(const StateVector& psi, const SubsystemIndexSet& keep);

// Amplitudes reshaped across a bipartition: rows indexed by the multi-index
// over `rows` (ascending positions), columns by the complement.
Matrix bipartite_amplitude_matrix(const StateVector& psi, const SubsystemIndexSet& rows);

// tr(rho^2); real part returned, in [1/dim, 1] for density matrices.
double purity(const Matrix& rho);

// Haar-distributed r x r unitary: QR of a complex Gaussian matrix with the
// R diagonal phase-fixed. Deterministic per seed.
Matrix haar_unitary(int r, std::uint64_t seed);

// Eigenvalues of a Hermitian matrix, descending. Throws when the input is
// not Hermitian within the tolerance.
std::vector<double> hermitian_eigenvalues(const Matrix& m, double tolerance = tol::kHermitian);

// Hermitian, unit trace, eigenvalues >= -tolerance.
bool is_density_matrix(const Matrix& rho, double tolerance = tol::kHermitian);

// Thin-QR orthonormalization with positive R diagonal; maps a Gaussian
// matrix to a Haar isometry and keeps small input perturbations small.
Matrix orthonormal_columns(const Matrix& m);

}  // namespace wmono
