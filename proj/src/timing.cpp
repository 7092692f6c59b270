#include "aniso/timing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "aniso/kernels.hpp"

namespace aniso {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

enum class Mode {
  parity,  // s·θ ≡ target + mπ (mod 2π)
  mod_pi,  // s·θ ≡ target (mod π)
};

void check_inputs(double a, double s, double epsilon, std::int64_t max_branch) {
  if (!std::isfinite(a) || !std::isfinite(s)) throw TimingInputError("timing: couplings must be finite");
  if (s == 0.0) throw TimingInputError("timing: symmetric coupling is zero, no rotation is possible");
  if (a == s) {
    throw TimingInputError("timing: |antisymmetric| equals |symmetric| (" + std::to_string(a) +
                           "); the two conditions are incompatible");
  }
  if (!(epsilon > 0.0)) throw TimingInputError("timing: epsilon must be positive");
  if (max_branch < 1) throw TimingInputError("timing: max_branch must be at least 1");
}

long double wrap_distance(long double turns) {
  const long double frac = turns - std::floor(turns);
  return std::min(frac, 1.0L - frac);
}

TimingSolution solve(double antisym, double sym, double target, Mode mode, std::int64_t m_min, double epsilon,
                     std::int64_t max_branch) {
  const double a = std::abs(antisym);
  const double s = std::abs(sym);
  check_inputs(a, s, epsilon, max_branch);
  TimingSolution out;
  const long double tgt = target;

  if (a == 0.0) {
    // No antisymmetric block to cancel: a single exact condition.
    long double angle = 0.0L;
    if (mode == Mode::parity) {
      angle = tgt - 2.0L * kPi * std::floor(tgt / (2.0L * kPi));
      if (m_min > 0 && angle == 0.0L) angle = 2.0L * kPi;
    } else {
      angle = tgt - kPi * std::floor(tgt / kPi);
      if (m_min > 0 && angle == 0.0L) angle = kPi;
    }
    out.theta = static_cast<double>(angle / s);
    out.k = static_cast<std::int64_t>(std::llround((angle - tgt) / kPi));
    out.phase_sym = (out.k % 2 == 0) ? 1.0 : -1.0;
    out.feasible = true;
    return out;
  }

  const long double ratio = static_cast<long double>(s) / a;
  BranchScan scan;
  if (mode == Mode::parity) {
    scan.slope = (ratio - 1.0L) / 2.0L;
    scan.offset = tgt / (2.0L * kPi);
    scan.unit = 2.0L * kPi;
  } else {
    scan.slope = ratio;
    scan.offset = tgt / kPi;
    scan.unit = kPi;
  }
  scan.m_min = m_min;
  scan.m_max = std::max(m_min, max_branch);
  scan.epsilon = epsilon;
  const BranchHit hit = scan_branches(scan);

  const long double theta = static_cast<long double>(hit.m) * kPi / a;
  out.theta = static_cast<double>(theta);
  out.m = hit.m;
  out.k = static_cast<std::int64_t>(std::llround(static_cast<long double>(hit.m) * ratio - tgt / kPi));
  out.residual_sym = hit.residual;
  out.residual_antisym = static_cast<double>(wrap_distance(a * static_cast<long double>(out.theta) / kPi) * kPi);
  out.phase_antisym = (out.m % 2 == 0) ? 1.0 : -1.0;
  out.phase_sym = (out.k % 2 == 0) ? 1.0 : -1.0;
  out.feasible = hit.hit;
  return out;
}

}  // namespace

TimingSolution solve_theta(double antisym, double sym, double epsilon, std::int64_t max_branch) {
  return solve(antisym, sym, std::numbers::pi / 2.0, Mode::parity, 1, epsilon, max_branch);
}

TimingSolution solve_theta_cross(Complex antisym, Complex sym, double epsilon, std::int64_t max_branch) {
  TimingSolution out = solve(std::abs(antisym), std::abs(sym), std::numbers::pi / 2.0, Mode::parity, 1, epsilon,
                             max_branch);
  // Code-space entry is (Ja − iKa)/2, so Ka reads off the negated imaginary part.
  out.factorized_residual = factorized_cross_residual(antisym.real(), -antisym.imag(), out.theta);
  return out;
}

TimingSolution solve_phi(double antisym, double sym, double target, double epsilon, std::int64_t max_branch) {
  return solve(antisym, sym, target, Mode::parity, 0, epsilon, max_branch);
}

TimingSolution solve_quarter_turn(double antisym, double sym, double epsilon, std::int64_t max_branch) {
  return solve(antisym, sym, std::numbers::pi / 4.0, Mode::mod_pi, 1, epsilon, max_branch);
}

double factorized_cross_residual(double ja, double ka, double theta) {
  const long double t = theta;
  long double worst = 0.0L;
  for (long double rate : {static_cast<long double>(ja), static_cast<long double>(ka),
                           static_cast<long double>(ja) * ka / 2.0L}) {
    worst = std::max(worst, wrap_distance(rate * t / kPi) * kPi);
  }
  return static_cast<double>(worst);
}

}  // namespace aniso
