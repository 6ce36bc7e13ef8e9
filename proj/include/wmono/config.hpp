#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmono {

// Absolute tolerances used throughout. Entanglement quantities live in
// [0, 2], so comparisons are absolute rather than relative.
namespace tol {
inline constexpr double kNorm = 1e-12;             // state normalization
inline constexpr double kHermitian = 1e-10;        // Hermiticity / unit-trace checks
inline constexpr double kUnitary = 1e-10;          // U†U = I residual
inline constexpr double kRank = 1e-10;             // numerical rank-2 cutoff
inline constexpr double kMemberDrop = 1e-14;       // zero-weight ensemble members
inline constexpr double kAlgebraic = 1e-9;         // closed-form vs brute-force equalities
inline constexpr double kDecompositionGap = 1e-6;  // sampled max-min concurrence gap
inline constexpr double kOptimizer = 1e-4;         // optimizer-backed equalities
}  // namespace tol

// Thrown when an operation would allocate more amplitudes than the cap
// allows. Callers that need to distinguish resource refusal from invalid
// input can catch this type.
class CapExceededError : public std::length_error {
 public:
  explicit CapExceededError(const std::string& what) : std::length_error(what) {}
};

// Global amplitude cap: no vector may be longer, and no matrix may hold more
// entries, than this. Defaults to 2^20; the WMONO_DIM_CAP environment
// variable overrides it at startup.
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

// Throws CapExceededError when `amplitudes` exceeds the cap.
void check_cap(std::size_t amplitudes, const char* context);

}  // namespace wmono
