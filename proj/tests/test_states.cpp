#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "wmono/monogamy.hpp"
#include "wmono/states.hpp"

using namespace wmono;
using namespace wmono::testing;

TEST_CASE("excitation_index follows the mixed-radix convention") {
  CHECK(excitation_index(0, 1, 3, 2) == 4);  // |100>
  CHECK(excitation_index(2, 1, 3, 2) == 1);  // |001>
  CHECK(excitation_index(1, 2, 2, 3) == 2);  // |02>
  CHECK_THROWS_AS(excitation_index(3, 1, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(excitation_index(0, 2, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(excitation_index(0, 0, 3, 2), std::out_of_range);
}

TEST_CASE("WClassSpec normalizes and records weights") {
  Matrix coeffs = Matrix::Constant(3, 1, Complex{2.0, 0.0});
  const WClassSpec spec(3, 2, coeffs);
  CHECK(spec.is_normalized());
  CHECK(spec.site_weight(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(spec.coeff(0, 1) - Complex{1.0 / std::sqrt(3.0), 0.0}) < 1e-14);

  const WClassSpec unnorm = WClassSpec::raw(3, 2, coeffs);
  CHECK_FALSE(unnorm.is_normalized());
  CHECK(unnorm.total_weight() == doctest::Approx(12.0).epsilon(1e-14));

  CHECK_THROWS_AS(WClassSpec(1, 2, Matrix::Ones(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(WClassSpec(2, 2, Matrix::Ones(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(WClassSpec(2, 2, Matrix::Zero(2, 1)), std::invalid_argument);
}

TEST_CASE("MixtureSpec validates p and ancilla") {
  const WClassSpec w = symmetric_w_spec(3);
  CHECK_NOTHROW(MixtureSpec(w, 0.0));
  CHECK_NOTHROW(MixtureSpec(w, 1.0));
  CHECK_THROWS_AS(MixtureSpec(w, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(MixtureSpec(w, 1.1), std::invalid_argument);

  Vector bad = Vector::Constant(1, Complex{2.0, 0.0});
  CHECK_THROWS_AS(MixtureSpec(w, 0.5, bad), std::invalid_argument);
  Vector wrong_len = Vector::Ones(2);
  CHECK_THROWS_AS(MixtureSpec(w, 0.5, wrong_len), std::invalid_argument);

  const MixtureSpec defaulted(w, 0.5);
  CHECK(std::abs(defaulted.ancilla_or_default()(0) - Complex{1.0, 0.0}) == 0.0);
}

TEST_CASE("build_wclass realizes the symmetric three-qubit state") {
  const StateVector w = build_wclass(symmetric_w_spec(3));
  const double amp = 1.0 / std::sqrt(3.0);
  for (Eigen::Index idx = 0; idx < w.dim(); ++idx) {
    const bool excited = idx == 1 || idx == 2 || idx == 4;
    CHECK(std::abs(w.amplitudes()(idx) - (excited ? Complex{amp, 0.0} : Complex{0.0, 0.0})) <
          1e-14);
  }
}

TEST_CASE("build_wclass single-term spec is a product state") {
  Matrix coeffs = Matrix::Zero(2, 1);
  coeffs(0, 0) = 1.0;
  const StateVector psi = build_wclass(WClassSpec(2, 2, coeffs));
  CHECK(std::abs(psi.amplitudes()(2) - Complex{1.0, 0.0}) < 1e-14);  // |10>
  CHECK(psi.amplitudes().cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("build_wclass spreads qutrit amplitudes over all excitation slots") {
  const int n = 3;
  const int d = 3;
  const WClassSpec spec(n, d, Matrix::Ones(n, d - 1));
  const StateVector psi = build_wclass(spec);

  // Enumerate the single-excitation indices independently.
  std::set<std::size_t> expected;
  for (int site = 0; site < n; ++site) {
    for (int level = 1; level < d; ++level) {
      std::size_t index = 0;
      for (int k = 0; k < n; ++k) index = index * d + (k == site ? level : 0);
      expected.insert(index);
    }
  }
  CHECK(expected.size() == 6);
  const double amp = 1.0 / std::sqrt(6.0);
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    const bool excited = expected.count(static_cast<std::size_t>(idx)) > 0;
    CHECK(std::abs(psi.amplitudes()(idx) - (excited ? Complex{amp, 0.0} : Complex{0.0, 0.0})) <
          1e-14);
  }
}

TEST_CASE("build_wclass amplitude support never exceeds n(d-1) slots") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    const WClassSpec spec = random_wclass(4, 3, seed);
    const StateVector psi = build_wclass(spec);
    int nonzero = 0;
    for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
      if (std::abs(psi.amplitudes()(idx)) > 0.0) ++nonzero;
    }
    CHECK(nonzero <= 4 * 2);
  }
}

TEST_CASE("build_wclass rejects unnormalized specs") {
  const WClassSpec unnorm = WClassSpec::raw(2, 2, Matrix::Constant(2, 1, Complex{3.0, 0.0}));
  CHECK_THROWS_AS(build_wclass(unnorm), std::invalid_argument);
}

TEST_CASE("build_mixture boundaries and spectrum") {
  const WClassSpec w = symmetric_w_spec(3);

  const Matrix pure = build_mixture(MixtureSpec(w, 1.0));
  CHECK(max_entry_distance(pure, build_wclass(w).projector()) < 1e-14);

  const Matrix ground = build_mixture(MixtureSpec(w, 0.0));
  Matrix expected = Matrix::Zero(8, 8);
  expected(0, 0) = 1.0;
  CHECK(max_entry_distance(ground, expected) < 1e-14);

  const Matrix half = build_mixture(MixtureSpec(w, 0.5));
  const auto values = hermitian_eigenvalues(half);
  CHECK(values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(values[1] == doctest::Approx(0.5).epsilon(1e-12));
  for (std::size_t k = 2; k < values.size(); ++k) CHECK(std::abs(values[k]) < 1e-12);
  CHECK(is_density_matrix(half));
}

TEST_CASE("purify_mixture at the boundaries") {
  const WClassSpec w = symmetric_w_spec(3);

  const WClassSpec at_one = purify_mixture(MixtureSpec(w, 1.0));
  CHECK(at_one.subsystem_count() == 4);
  CHECK(at_one.site_weight(3) == doctest::Approx(0.0));
  for (int s = 0; s < 3; ++s) {
    CHECK(at_one.site_weight(s) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("purify_mixture reproduces the four-qubit coefficients") {
  const WClassSpec w = symmetric_w_spec(3);
  Vector ancilla = Vector::Ones(1);
  const WClassSpec purified = purify_mixture(MixtureSpec(w, 0.5, ancilla));
  for (int s = 0; s < 3; ++s) {
    CHECK(std::abs(purified.coeff(s, 1) - Complex{1.0 / std::sqrt(6.0), 0.0}) < 1e-14);
  }
  CHECK(std::abs(purified.coeff(3, 1) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-14);
}

TEST_CASE("purification round trip reproduces the mixture") {
  for (int repeat = 0; repeat < 50; ++repeat) {
    const auto seed = derive_seed(17, "test/puri", static_cast<std::uint64_t>(repeat));
    const int n = 2 + static_cast<int>(seed % 4);        // 2..5
    const int d = 2 + static_cast<int>((seed >> 8) % 2);  // 2..3
    const WClassSpec spec = random_wclass(n, d, derive_seed(seed, "spec"));
    const double p = static_cast<double>((seed >> 16) % 101) / 100.0;

    std::optional<Vector> ancilla;
    if (d > 2 && repeat % 2 == 0) {
      Rng rng(derive_seed(seed, "ancilla"));
      Vector x(d - 1);
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.gaussian_complex();
      x /= x.norm();
      ancilla = std::move(x);
    }
    const MixtureSpec mix(spec, p, ancilla);

    const StateVector purified = build_wclass(purify_mixture(mix));
    const SubsystemIndexSet original =
        SubsystemIndexSet{n}.complement(n + 1);  // everything but the ancilla
    const Matrix traced = reduced_density(purified, original);
    CHECK(max_entry_distance(traced, build_mixture(mix)) < 1e-10);
  }
}

TEST_CASE("reduced subsets of a W-class state stay in the W family") {
  // Any subset reduction is a mixture of an excitation-sector state and the
  // all-zero projector: rank <= 2 with eigenvector support confined to the
  // single-excitation and all-zero slots.
  for (const std::uint64_t seed : {4u, 5u}) {
    const int n = 4;
    const int d = seed == 4 ? 2 : 3;
    const StateVector psi = build_wclass(random_wclass(n, d, seed));
    for (const auto& keep : {SubsystemIndexSet{0, 1}, SubsystemIndexSet{1, 3},
                             SubsystemIndexSet{0, 2, 3}}) {
      const Matrix rho = reduced_density(psi, keep);
      const auto values = hermitian_eigenvalues(rho);
      for (std::size_t k = 2; k < values.size(); ++k) CHECK(std::abs(values[k]) < 1e-12);

      Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
      const int l = static_cast<int>(keep.size());
      const std::vector<int> dims(static_cast<std::size_t>(l), d);
      for (Eigen::Index col = 0; col < solver.eigenvectors().cols(); ++col) {
        if (solver.eigenvalues()(col) < 1e-12) continue;
        for (Eigen::Index idx = 0; idx < rho.rows(); ++idx) {
          const auto digits = digits_of(static_cast<std::size_t>(idx), dims);
          int excited = 0;
          for (const int digit : digits) excited += digit > 0 ? 1 : 0;
          if (excited > 1) {
            CHECK(std::abs(solver.eigenvectors()(idx, col)) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("coefficient phases are preserved exactly") {
  Matrix coeffs(2, 2);
  coeffs << Complex{0.3, 0.4}, Complex{-0.1, 0.2}, Complex{0.0, -0.5}, Complex{0.6, 0.1};
  const WClassSpec spec(2, 3, coeffs);
  const double total = std::sqrt(coeffs.squaredNorm());
  const StateVector psi = build_wclass(spec);
  CHECK(std::abs(psi.amplitudes()(excitation_index(0, 2, 2, 3)) -
                 Complex{-0.1, 0.2} / total) < 1e-14);
  CHECK(std::abs(psi.amplitudes()(excitation_index(1, 1, 2, 3)) -
                 Complex{0.0, -0.5} / total) < 1e-14);
}

TEST_CASE("build_wclass refuses specs beyond the amplitude cap") {
  CapGuard guard;
  set_dimension_cap(16);
  CHECK_THROWS_AS(symmetric_w_spec(5), CapExceededError);  // 2^5 > 16
  CHECK_NOTHROW(build_wclass(symmetric_w_spec(4)));
  CHECK_THROWS_AS(build_mixture(MixtureSpec(symmetric_w_spec(3), 0.5)), CapExceededError);
}
