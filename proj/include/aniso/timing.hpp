#pragma once

#include <cstdint>
#include <stdexcept>

#include "aniso/operator.hpp"

namespace aniso {

inline constexpr std::int64_t kDefaultMaxBranch = 1'000'000;

/// A duration on the lattice mπ/|a| together with the symmetric-block branch it lands on.
///
/// With the antisymmetric block at a·θ = mπ (exact) and the symmetric block at
/// s·θ ≈ target + kπ, the block evolutions are (−1)^m·I and
/// (−1)^k·exp(−iσ·target) respectively.
struct TimingSolution {
  double theta = 0.0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  double residual_antisym = 0.0;  // radians
  double residual_sym = 0.0;      // radians
  Complex phase_antisym{1.0, 0.0};
  Complex phase_sym{1.0, 0.0};
  bool feasible = false;
  /// Largest residual of the factorized three-condition cross-term test
  /// (diagnostic only; zero when not computed).
  double factorized_residual = 0.0;
};

class TimingInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest θ = mπ/|a| (m ≥ 1) with |s|θ ≈ π/2 + kπ and k ≡ m (mod 2), so the
/// two blocks carry the same sign. a = 0 is the exact single-condition case.
TimingSolution solve_theta(double antisym, double sym, double epsilon, std::int64_t max_branch = kDefaultMaxBranch);

/// Cross-term variant on complex code-space couplings: the antisymmetric block
/// returns to ±I when |J̃a|·Θ ≡ 0 (mod π); the symmetric block rotates by a
/// quarter turn about its tilted axis when |J̃s|·Θ ≡ π/2.
TimingSolution solve_theta_cross(Complex antisym, Complex sym, double epsilon,
                                 std::int64_t max_branch = kDefaultMaxBranch);

/// Smallest φ′ = mπ/|a| (m ≥ 0) with |s|φ′ ≈ target + mπ (mod 2π). The
/// resulting block evolutions agree with exp(−iσ·target) ⊕ I up to the global
/// sign (−1)^m.
TimingSolution solve_phi(double antisym, double sym, double target, double epsilon,
                         std::int64_t max_branch = kDefaultMaxBranch);

/// Smallest θ = mπ/|a| (m ≥ 1) with |s|θ ≡ π/4 (mod π); used by the σᶻ conjugator.
TimingSolution solve_quarter_turn(double antisym, double sym, double epsilon,
                                  std::int64_t max_branch = kDefaultMaxBranch);

/// Residual of Θ against the factorized conditions Θ·Ja, Θ·Ka, Θ·JaKa/2 ≡ 0 (mod π).
double factorized_cross_residual(double ja, double ka, double theta);

}  // namespace aniso
