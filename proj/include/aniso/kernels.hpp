#pragma once

#include <cstdint>

#include "aniso/operator.hpp"

namespace aniso {

/// Residual of branch m is the distance of (m·slope − offset) from the nearest
/// integer, scaled by `unit` (turns → radians).
struct BranchScan {
  long double slope = 0.0L;
  long double offset = 0.0L;
  long double unit = 1.0L;
  std::int64_t m_min = 0;
  std::int64_t m_max = 0;
  double epsilon = 0.0;
};

struct BranchHit {
  std::int64_t m = -1;
  double residual = 0.0;
  bool hit = false;  // residual <= epsilon
};

long double branch_residual(const BranchScan& scan, std::int64_t m);

/// Smallest m in [m_min, m_max] with residual <= epsilon, else the best
/// (lowest residual, then smallest m) branch with hit = false.
/// Parallel over chunks of m; the answer does not depend on thread count.
BranchHit scan_branches(const BranchScan& scan);
BranchHit scan_branches_serial(const BranchScan& scan);

/// Left-multiply `state` (2^n × 2^n) in place by a two-qubit gate acting on
/// sites (i, j). Gate rows/cols are indexed by 2·b_i + b_j.
void apply_pair_gate(Matrix& state, const Matrix& gate, int n, int i, int j);
void apply_pair_gate_serial(Matrix& state, const Matrix& gate, int n, int i, int j);

/// Embeds a two-qubit gate into the full 2^n space (reference construction).
Matrix embed_pair_gate(const Matrix& gate, int n, int i, int j);

}  // namespace aniso
