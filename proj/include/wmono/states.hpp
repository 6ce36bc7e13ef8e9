#pragma once

#include <optional>

#include "wmono/linalg.hpp"

namespace wmono {

// Coefficient table a(site, level) defining an n-qudit W-class pure state:
// a superposition of basis states carrying a single excitation, where the
// excited subsystem can sit at any site and at any level 1..d-1.
class WClassSpec {
 public:
  // coeffs is n x (d-1); row = site, column = level-1. The constructor
  // rescales to unit total weight and records the original total.
  WClassSpec(int n, int d, Matrix coeffs);

  // Keeps the coefficients exactly as given (unnormalized intermediates).
  static WClassSpec raw(int n, int d, Matrix coeffs);

  int subsystem_count() const { return static_cast<int>(coeffs_.rows()); }
  int local_dim() const { return static_cast<int>(coeffs_.cols()) + 1; }

  // a(site, level), site 0-based, level in 1..d-1.
  Complex coeff(int site, int level) const;

  // Excitation weight of one site: sum_i |a(site, i)|^2.
  double site_weight(int site) const;

  // Total weight as constructed (1 for normalized specs).
  double total_weight() const { return total_weight_; }
  bool is_normalized(double tolerance = tol::kNorm) const;

  const Matrix& coeffs() const { return coeffs_; }

 private:
  WClassSpec() = default;
  Matrix coeffs_;
  double total_weight_ = 0.0;
};

// A W-class state mixed with the all-zero product state: weight p on the
// W-class projector, 1-p on |0...0><0...0|. The optional ancilla amplitudes
// (length d-1, unit norm) choose the purifying state's excited component.
class MixtureSpec {
 public:
  MixtureSpec(WClassSpec wclass, double p, std::optional<Vector> ancilla = std::nullopt);

  const WClassSpec& wclass() const { return wclass_; }
  double p() const { return p_; }
  const std::optional<Vector>& ancilla() const { return ancilla_; }

  // Stored ancilla, or the default |1> when none was given.
  Vector ancilla_or_default() const;

 private:
  WClassSpec wclass_;
  double p_ = 1.0;
  std::optional<Vector> ancilla_;
};

// Flat basis index of |0..i..0> with level i at `site` under the canonical
// mixed-radix ordering (site 0 most significant). site 0-based, level in
// 1..d-1.
std::size_t excitation_index(int site, int level, int n, int d);

// Realize the spec as a state vector; amplitudes are nonzero only at
// single-excitation indices.
StateVector build_wclass(const WClassSpec& spec);

// Rank <= 2 density matrix p |W><W| + (1-p) |0...0><0...0|.
Matrix build_mixture(const MixtureSpec& mix);

// The (n+1)-qudit W-class spec whose partial trace over the last subsystem
// reproduces build_mixture(mix): coefficients sqrt(p) a(site, i) for the
// original sites and sqrt(1-p) x_i for the ancilla site.
WClassSpec purify_mixture(const MixtureSpec& mix);

}  // namespace wmono
