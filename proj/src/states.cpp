#include "wmono/states.hpp"

#include <cmath>
#include <stdexcept>

namespace wmono {

namespace {

void validate_shape(int n, int d, const Matrix& coeffs) {
  if (n < 2) throw std::invalid_argument("W-class spec needs at least 2 subsystems");
  if (d < 2) throw std::invalid_argument("W-class spec needs local dimension at least 2");
  if (coeffs.rows() != n || coeffs.cols() != d - 1) {
    throw std::invalid_argument("coefficient table must be n x (d-1)");
  }
  std::vector<int> dims(static_cast<std::size_t>(n), d);
  hilbert_dim(dims);  // cap check
}

}  // namespace

WClassSpec::WClassSpec(int n, int d, Matrix coeffs) {
  validate_shape(n, d, coeffs);
  const double total = coeffs.squaredNorm();
  if (total <= 0.0) throw std::invalid_argument("W-class spec has zero norm");
  coeffs_ = coeffs / std::sqrt(total);
  total_weight_ = 1.0;
}

WClassSpec WClassSpec::raw(int n, int d, Matrix coeffs) {
  validate_shape(n, d, coeffs);
  WClassSpec spec;
  spec.total_weight_ = coeffs.squaredNorm();
  spec.coeffs_ = std::move(coeffs);
  return spec;
}

Complex WClassSpec::coeff(int site, int level) const {
  if (site < 0 || site >= subsystem_count()) {
    throw std::out_of_range("coefficient site out of range");
  }
  if (level < 1 || level >= local_dim()) {
    throw std::out_of_range("coefficient level out of range");
  }
  return coeffs_(site, level - 1);
}

double WClassSpec::site_weight(int site) const {
  if (site < 0 || site >= subsystem_count()) {
    throw std::out_of_range("site out of range");
  }
  return coeffs_.row(site).squaredNorm();
}

bool WClassSpec::is_normalized(double tolerance) const {
  return std::abs(total_weight_ - 1.0) <= tolerance;
}

MixtureSpec::MixtureSpec(WClassSpec wclass, double p, std::optional<Vector> ancilla)
    : wclass_(std::move(wclass)), p_(p), ancilla_(std::move(ancilla)) {
  if (!(p_ >= 0.0 && p_ <= 1.0)) {
    throw std::invalid_argument("mixing weight p must lie in [0, 1]");
  }
  if (ancilla_) {
    if (ancilla_->size() != wclass_.local_dim() - 1) {
      throw std::invalid_argument("ancilla coefficient list must have length d-1");
    }
    if (std::abs(ancilla_->squaredNorm() - 1.0) > tol::kNorm) {
      throw std::invalid_argument("ancilla coefficients must be normalized");
    }
  }
}

Vector MixtureSpec::ancilla_or_default() const {
  if (ancilla_) return *ancilla_;
  Vector x = Vector::Zero(wclass_.local_dim() - 1);
  x(0) = Complex{1.0, 0.0};
  return x;
}

std::size_t excitation_index(int site, int level, int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("excitation_index: invalid system shape");
  if (site < 0 || site >= n) throw std::out_of_range("excitation_index: site out of range");
  if (level < 1 || level >= d) throw std::out_of_range("excitation_index: level out of range");
  std::size_t stride = 1;
  for (int k = 0; k < n - 1 - site; ++k) stride *= static_cast<std::size_t>(d);
  return static_cast<std::size_t>(level) * stride;
}

StateVector build_wclass(const WClassSpec& spec) {
  if (!spec.is_normalized(tol::kAlgebraic)) {
    throw std::invalid_argument("build_wclass: spec must be normalized");
  }
  const int n = spec.subsystem_count();
  const int d = spec.local_dim();
  const std::vector<int> dims(static_cast<std::size_t>(n), d);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(hilbert_dim(dims)));
  for (int site = 0; site < n; ++site) {
    for (int level = 1; level < d; ++level) {
      amps(static_cast<Eigen::Index>(excitation_index(site, level, n, d))) =
          spec.coeff(site, level);
    }
  }
  return StateVector::normalized(dims, std::move(amps));
}

Matrix build_mixture(const MixtureSpec& mix) {
  const StateVector w = build_wclass(mix.wclass());
  const std::size_t dim = static_cast<std::size_t>(w.dim());
  check_cap(dim * dim, "build_mixture");
  Matrix rho = mix.p() * w.projector();
  rho(0, 0) += Complex{1.0 - mix.p(), 0.0};
  return rho;
}

WClassSpec purify_mixture(const MixtureSpec& mix) {
  const WClassSpec& w = mix.wclass();
  const int n = w.subsystem_count();
  const int d = w.local_dim();
  const Vector ancilla = mix.ancilla_or_default();

  Matrix coeffs(n + 1, d - 1);
  coeffs.topRows(n) = std::sqrt(mix.p()) * w.coeffs();
  coeffs.row(n) = std::sqrt(1.0 - mix.p()) * ancilla.transpose();
  return WClassSpec(n + 1, d, std::move(coeffs));
}

}  // namespace wmono
