#include "aniso/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aniso {

Edge::Edge(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("Edge: endpoints must differ (got " + std::to_string(a) + ")");
  if (i < 1) throw std::invalid_argument("Edge: qubit indices are 1-based");
}

std::string Edge::str() const { return std::to_string(i) + "-" + std::to_string(j); }

DerivedCouplings derive_couplings(const EdgeCouplings& raw) {
  DerivedCouplings d;
  d.js = 0.5 * (raw.jx + raw.jy);
  d.ja = 0.5 * (raw.jx - raw.jy);
  d.ks = 0.5 * (raw.jxy + raw.jyx);
  d.ka = 0.5 * (raw.jxy - raw.jyx);
  d.jt_s = Complex(d.js, -d.ks);
  d.jt_a = Complex(d.ja, -d.ka);
  return d;
}

CodeBasisCouplings code_basis_couplings(const EdgeCouplings& raw) {
  const DerivedCouplings d = derive_couplings(raw);
  return {0.5 * d.jt_a, 0.5 * d.jt_s};
}

EdgeCouplings couplings_from_code_basis(double antisym, double sym) {
  // ja = 2·antisym, js = 2·sym; jx = js + ja, jy = js − ja.
  return {2.0 * (sym + antisym), 2.0 * (sym - antisym), 0.0, 0.0};
}

Operator build_pair_hamiltonian(int n, int i, int j, const EdgeCouplings& raw) {
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("build_pair_hamiltonian: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
  for (double v : {raw.jx, raw.jy, raw.jxy, raw.jyx}) {
    if (!std::isfinite(v)) throw std::invalid_argument("build_pair_hamiltonian: non-finite coupling");
  }
  const Operator xi = pauli_on(n, i, Axis::x);
  const Operator yi = pauli_on(n, i, Axis::y);
  const Operator xj = pauli_on(n, j, Axis::x);
  const Operator yj = pauli_on(n, j, Axis::y);
  Matrix h = raw.jx * (xi.matrix() * xj.matrix()) + raw.jy * (yi.matrix() * yj.matrix()) +
             raw.jxy * (xi.matrix() * yj.matrix()) - raw.jyx * (yi.matrix() * xj.matrix());
  return Operator(0.25 * h, OperatorKind::hermitian);
}

Operator build_pair_hamiltonian(int n, Edge edge, const EdgeCouplings& raw) {
  return build_pair_hamiltonian(n, edge.i, edge.j, raw);
}

ParityParts split_sym_antisym(const Operator& hamiltonian, int n, Edge edge) {
  const int dim = 1 << n;
  if (hamiltonian.dim() != dim) throw std::invalid_argument("split_sym_antisym: dimension mismatch");
  if (edge.j > n) throw std::invalid_argument("split_sym_antisym: edge outside register");
  const int bi = n - edge.i;
  const int bj = n - edge.j;
  auto odd = [&](int s) { return ((s >> bi) & 1) != ((s >> bj) & 1); };
  Matrix sym = Matrix::Zero(dim, dim);
  Matrix anti = Matrix::Zero(dim, dim);
  double mixing = 0.0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const Complex v = hamiltonian(r, c);
      if (odd(r) && odd(c)) {
        sym(r, c) = v;
      } else if (!odd(r) && !odd(c)) {
        anti(r, c) = v;
      } else {
        mixing = std::max(mixing, std::abs(v));
      }
    }
  }
  if (mixing > kAlgebraTol) {
    throw std::domain_error("split_sym_antisym: input couples the even and odd pair sectors");
  }
  return {Operator(std::move(sym), OperatorKind::hermitian), Operator(std::move(anti), OperatorKind::hermitian)};
}

bool Layout::has_edge(Edge edge) const {
  for (const auto& e : edges) {
    if (e == edge) return true;
  }
  return false;
}

Layout build_layout(int num_logical) {
  if (num_logical < 1) throw std::invalid_argument("build_layout: need at least one logical qubit");
  Layout layout;
  layout.num_logical = num_logical;
  layout.n_physical = 3 * num_logical;
  auto add_edge = [&](Edge e) {
    if (!layout.has_edge(e)) layout.edges.push_back(e);
  };
  for (int k = 0; k < num_logical; ++k) {
    const int base = 3 * k;
    const Triplet t{base + 1, base + 2, base + 3};
    layout.logical_triplets.push_back(t);
    for (const Edge& local : local_edges()) add_edge(lift_edge(t, local));
  }
  for (int k = 0; k + 1 < num_logical; ++k) {
    const int base = 3 * k;
    const Triplet t{base + 2, base + 3, base + 4};
    layout.bridging_triplets.push_back(t);
    for (const Edge& local : local_edges()) add_edge(lift_edge(t, local));
  }
  return layout;
}

Edge lift_edge(const Triplet& triplet, Edge local) {
  if (local.j > 3) throw std::invalid_argument("lift_edge: local edge must lie in 1..3");
  return Edge(triplet[local.i - 1], triplet[local.j - 1]);
}

const std::array<Edge, 3>& local_edges() {
  static const std::array<Edge, 3> edges{Edge(1, 2), Edge(1, 3), Edge(2, 3)};
  return edges;
}

CouplingMap CouplingMap::uniform(const Layout& layout, const EdgeCouplings& value) {
  CouplingMap map;
  for (const Edge& e : layout.edges) map.set(e, value);
  return map;
}

EdgeCouplings CouplingMap::at(Edge edge) const {
  const auto it = values_.find(edge);
  return it == values_.end() ? EdgeCouplings{} : it->second;
}

std::array<EdgeCouplings, 3> CouplingMap::triplet(const Triplet& t) const {
  std::array<EdgeCouplings, 3> out;
  for (std::size_t k = 0; k < 3; ++k) out[k] = at(lift_edge(t, local_edges()[k]));
  return out;
}

bool CouplingMap::has_cross_terms() const {
  for (const auto& [edge, value] : values_) {
    if (value.has_cross_terms()) return true;
  }
  return false;
}

Operator total_hamiltonian(int n, const CouplingMap& couplings) {
  Operator total = Operator::zero(1 << n);
  for (const auto& [edge, value] : couplings.values()) total += build_pair_hamiltonian(n, edge, value);
  return Operator(total.matrix(), OperatorKind::hermitian);
}

}  // namespace aniso
