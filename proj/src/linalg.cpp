#include "wmono/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wmono/rng.hpp"

namespace wmono {

namespace {

// Flat-index stride of each subsystem; subsystem 0 is most significant.
std::vector<std::size_t> subsystem_strides(const std::vector<int>& dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    strides[static_cast<std::size_t>(k)] = acc;
    acc *= static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]);
  }
  return strides;
}

// Flat offsets of every multi-index over `axes`, mixed-radix order with the
// first listed axis most significant.
std::vector<std::size_t> axis_offsets(const std::vector<int>& dims,
                                      const std::vector<std::size_t>& strides,
                                      const std::vector<int>& axes) {
  std::vector<std::size_t> offsets{0};
  for (const int axis : axes) {
    const int dim = dims[static_cast<std::size_t>(axis)];
    const std::size_t stride = strides[static_cast<std::size_t>(axis)];
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dim));
    for (const std::size_t base : offsets) {
      for (int v = 0; v < dim; ++v) {
        next.push_back(base + static_cast<std::size_t>(v) * stride);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

void validate_trace_axes(Eigen::Index dim, const std::vector<int>& local_dims,
                         const SubsystemIndexSet& keep, const char* context) {
  if (keep.empty()) {
    throw std::invalid_argument(std::string(context) + ": keep set must be non-empty");
  }
  if (hilbert_dim(local_dims) != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument(std::string(context) +
                                ": local dimensions do not match the input size");
  }
  if (keep.indices().back() >= static_cast<int>(local_dims.size())) {
    throw std::invalid_argument(std::string(context) + ": keep index out of range");
  }
}

}  // namespace

SubsystemIndexSet::SubsystemIndexSet(std::initializer_list<int> indices)
    : SubsystemIndexSet(std::vector<int>(indices)) {}

SubsystemIndexSet::SubsystemIndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 0) {
    throw std::invalid_argument("subsystem index must be non-negative");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("duplicate subsystem index");
  }
}

bool SubsystemIndexSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

SubsystemIndexSet SubsystemIndexSet::complement(int subsystem_count) const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(subsystem_count) - indices_.size());
  for (int k = 0; k < subsystem_count; ++k) {
    if (!contains(k)) rest.push_back(k);
  }
  return SubsystemIndexSet(std::move(rest));
}

std::size_t hilbert_dim(const std::vector<int>& local_dims) {
  if (local_dims.empty()) {
    throw std::invalid_argument("subsystem list must be non-empty");
  }
  std::size_t dim = 1;
  for (const int d : local_dims) {
    if (d < 2) throw std::invalid_argument("subsystem dimension must be at least 2");
    dim *= static_cast<std::size_t>(d);
    check_cap(dim, "hilbert_dim");
  }
  return dim;
}

StateVector::StateVector(std::vector<int> local_dims, Vector amplitudes)
    : local_dims_(std::move(local_dims)), amplitudes_(std::move(amplitudes)) {
  if (hilbert_dim(local_dims_) != static_cast<std::size_t>(amplitudes_.size())) {
    throw std::invalid_argument("amplitude count does not match subsystem dimensions");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kNorm) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::normalized(std::vector<int> local_dims, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm <= 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  amplitudes /= norm;
  return StateVector(std::move(local_dims), std::move(amplitudes));
}

Matrix StateVector::projector() const {
  check_cap(static_cast<std::size_t>(amplitudes_.size()) *
                static_cast<std::size_t>(amplitudes_.size()),
            "projector");
  return amplitudes_ * amplitudes_.adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  check_cap(static_cast<std::size_t>(a.size()), "kron");
  check_cap(static_cast<std::size_t>(b.size()), "kron");
  check_cap(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()), "kron");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& local_dims,
                     const SubsystemIndexSet& keep) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("partial_trace: density matrix must be square");
  }
  validate_trace_axes(rho.rows(), local_dims, keep, "partial_trace");

  const auto strides = subsystem_strides(local_dims);
  const auto keep_offsets = axis_offsets(local_dims, strides, keep.indices());
  const auto env_offsets = axis_offsets(
      local_dims, strides, keep.complement(static_cast<int>(local_dims.size())).indices());

  const auto kept = static_cast<Eigen::Index>(keep_offsets.size());
  check_cap(keep_offsets.size() * keep_offsets.size(), "partial_trace");
  Matrix out = Matrix::Zero(kept, kept);
  for (Eigen::Index i = 0; i < kept; ++i) {
    for (Eigen::Index j = 0; j < kept; ++j) {
      Complex acc{0.0, 0.0};
      for (const std::size_t env : env_offsets) {
        acc += rho(static_cast<Eigen::Index>(keep_offsets[static_cast<std::size_t>(i)] + env),
                   static_cast<Eigen::Index>(keep_offsets[static_cast<std::size_t>(j)] + env));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix reduced_density(const StateVector& psi, const SubsystemIndexSet& keep) {
  const auto& dims = psi.local_dims();
  validate_trace_axes(psi.dim(), dims, keep, "reduced_density");

  const auto strides = subsystem_strides(dims);
  const auto keep_offsets = axis_offsets(dims, strides, keep.indices());
  const auto env_offsets =
      axis_offsets(dims, strides, keep.complement(psi.subsystem_count()).indices());

  const auto kept = static_cast<Eigen::Index>(keep_offsets.size());
  check_cap(keep_offsets.size() * keep_offsets.size(), "reduced_density");
  const Vector& amps = psi.amplitudes();
  Matrix out = Matrix::Zero(kept, kept);
  for (Eigen::Index i = 0; i < kept; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      Complex acc{0.0, 0.0};
      for (const std::size_t env : env_offsets) {
        acc += amps(static_cast<Eigen::Index>(keep_offsets[static_cast<std::size_t>(i)] + env)) *
               std::conj(amps(
                   static_cast<Eigen::Index>(keep_offsets[static_cast<std::size_t>(j)] + env)));
      }
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
  }
  return out;
}

Matrix bipartite_amplitude_matrix(const StateVector& psi, const SubsystemIndexSet& rows) {
  const auto& dims = psi.local_dims();
  validate_trace_axes(psi.dim(), dims, rows, "bipartite_amplitude_matrix");

  const auto strides = subsystem_strides(dims);
  const auto row_offsets = axis_offsets(dims, strides, rows.indices());
  const auto col_offsets =
      axis_offsets(dims, strides, rows.complement(psi.subsystem_count()).indices());

  Matrix out(static_cast<Eigen::Index>(row_offsets.size()),
             static_cast<Eigen::Index>(col_offsets.size()));
  for (std::size_t i = 0; i < row_offsets.size(); ++i) {
    for (std::size_t j = 0; j < col_offsets.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          psi.amplitudes()(static_cast<Eigen::Index>(row_offsets[i] + col_offsets[j]));
    }
  }
  return out;
}

double purity(const Matrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("purity: matrix must be square");
  }
  // tr(rho^2) = sum_ij rho(i,j) rho(j,i)
  const Complex value = rho.cwiseProduct(rho.transpose()).sum();
  return value.real();
}

Matrix haar_unitary(int r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("haar_unitary: size must be at least 1");
  check_cap(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), "haar_unitary");
  Rng rng(seed);
  Matrix gaussian(r, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) {
      gaussian(i, j) = rng.gaussian_complex();
    }
  }
  return orthonormal_columns(gaussian);
}

Matrix orthonormal_columns(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  }
  const auto& ascending = solver.eigenvalues();
  std::vector<double> descending(static_cast<std::size_t>(ascending.size()));
  for (Eigen::Index i = 0; i < ascending.size(); ++i) {
    descending[static_cast<std::size_t>(i)] = ascending(ascending.size() - 1 - i);
  }
  return descending;
}

bool is_density_matrix(const Matrix& rho, double tolerance) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) return false;
  if (std::abs(rho.trace().real() - 1.0) > tolerance) return false;
  if (std::abs(rho.trace().imag()) > tolerance) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return solver.info() == Eigen::Success && solver.eigenvalues()(0) >= -tolerance;
}

}  // namespace wmono
