#include "aniso/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace aniso {

namespace {

constexpr std::int64_t kChunk = 1 << 16;

void check_scan(const BranchScan& scan) {
  if (scan.m_min < 0 || scan.m_max < scan.m_min) {
    throw std::invalid_argument("scan_branches: empty or negative branch range");
  }
}

bool better(double res, std::int64_t m, double best_res, std::int64_t best_m) {
  return res < best_res || (res == best_res && m < best_m);
}

void check_pair(int n, int i, int j, const Matrix& state, const Matrix& gate) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("apply_pair_gate: invalid sites (" + std::to_string(i) + "," +
                                std::to_string(j) + ") for n=" + std::to_string(n));
  }
  if (gate.rows() != 4 || gate.cols() != 4) throw std::invalid_argument("apply_pair_gate: gate must be 4x4");
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (state.rows() != dim) throw std::invalid_argument("apply_pair_gate: state has wrong row count");
}

// Indices of the four basis states sharing all bits except those at sites i, j.
inline void quad(int base, int bi, int bj, int out[4]) {
  out[0] = base;
  out[1] = base | (1 << bj);
  out[2] = base | (1 << bi);
  out[3] = base | (1 << bi) | (1 << bj);
}

void apply_to_column(Matrix& state, Eigen::Index col, const Matrix& gate, int dim, int bi, int bj) {
  const int mask = (1 << bi) | (1 << bj);
  int idx[4];
  Complex in[4];
  for (int base = 0; base < dim; ++base) {
    if (base & mask) continue;
    quad(base, bi, bj, idx);
    for (int r = 0; r < 4; ++r) in[r] = state(idx[r], col);
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += gate(r, c) * in[c];
      state(idx[r], col) = acc;
    }
  }
}

}  // namespace

long double branch_residual(const BranchScan& scan, std::int64_t m) {
  const long double x = static_cast<long double>(m) * scan.slope - scan.offset;
  const long double frac = x - std::floor(x);
  return std::min(frac, 1.0L - frac) * scan.unit;
}

BranchHit scan_branches_serial(const BranchScan& scan) {
  check_scan(scan);
  BranchHit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::int64_t m = scan.m_min; m <= scan.m_max; ++m) {
    const double res = static_cast<double>(branch_residual(scan, m));
    if (res <= scan.epsilon) return {m, res, true};
    if (better(res, m, best.residual, best.m)) best = {m, res, false};
  }
  return best;
}

BranchHit scan_branches(const BranchScan& scan) {
  check_scan(scan);
  BranchHit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::int64_t lo = scan.m_min; lo <= scan.m_max; lo += kChunk) {
    const std::int64_t hi = std::min(scan.m_max, lo + kChunk - 1);
    std::int64_t first_hit = std::numeric_limits<std::int64_t>::max();
    double chunk_res = std::numeric_limits<double>::infinity();
    std::int64_t chunk_m = -1;
#pragma omp parallel
    {
      std::int64_t local_hit = std::numeric_limits<std::int64_t>::max();
      double local_res = std::numeric_limits<double>::infinity();
      std::int64_t local_m = -1;
#pragma omp for schedule(static) nowait
      for (std::int64_t m = lo; m <= hi; ++m) {
        const double res = static_cast<double>(branch_residual(scan, m));
        if (res <= scan.epsilon && m < local_hit) local_hit = m;
        if (better(res, m, local_res, local_m)) {
          local_res = res;
          local_m = m;
        }
      }
#pragma omp critical
      {
        first_hit = std::min(first_hit, local_hit);
        if (local_m >= 0 && better(local_res, local_m, chunk_res, chunk_m)) {
          chunk_res = local_res;
          chunk_m = local_m;
        }
      }
    }
    if (first_hit != std::numeric_limits<std::int64_t>::max()) {
      return {first_hit, static_cast<double>(branch_residual(scan, first_hit)), true};
    }
    if (better(chunk_res, chunk_m, best.residual, best.m)) best = {chunk_m, chunk_res, false};
  }
  return best;
}

void apply_pair_gate_serial(Matrix& state, const Matrix& gate, int n, int i, int j) {
  check_pair(n, i, j, state, gate);
  state = embed_pair_gate(gate, n, i, j) * state;
}

void apply_pair_gate(Matrix& state, const Matrix& gate, int n, int i, int j) {
  check_pair(n, i, j, state, gate);
  const int dim = 1 << n;
  const int bi = n - i;
  const int bj = n - j;
  const Eigen::Index cols = state.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index col = 0; col < cols; ++col) {
    apply_to_column(state, col, gate, dim, bi, bj);
  }
}

Matrix embed_pair_gate(const Matrix& gate, int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("embed_pair_gate: invalid sites");
  const int dim = 1 << n;
  const int bi = n - i;
  const int bj = n - j;
  Matrix full = Matrix::Zero(dim, dim);
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      // Untouched qubits must agree.
      if ((row & ~((1 << bi) | (1 << bj))) != (col & ~((1 << bi) | (1 << bj)))) continue;
      const int r = 2 * ((row >> bi) & 1) + ((row >> bj) & 1);
      const int c = 2 * ((col >> bi) & 1) + ((col >> bj) & 1);
      full(row, col) = gate(r, c);
    }
  }
  return full;
}

}  // namespace aniso
