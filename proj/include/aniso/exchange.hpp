#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "aniso/operator.hpp"

namespace aniso {

/// Physical qubit pair, 1-based, always stored with i < j.
struct Edge {
  int i = 1;
  int j = 2;

  Edge() = default;
  Edge(int a, int b);

  auto operator<=>(const Edge&) const = default;
  std::string str() const;
};

/// Raw per-edge couplings (angular frequency units, ħ = 1).
struct EdgeCouplings {
  double jx = 0.0;
  double jy = 0.0;
  double jxy = 0.0;
  double jyx = 0.0;

  bool has_cross_terms() const { return jxy != 0.0 || jyx != 0.0; }
  bool operator==(const EdgeCouplings&) const = default;
};

struct DerivedCouplings {
  double js = 0.0;
  double ja = 0.0;
  double ks = 0.0;
  double ka = 0.0;
  Complex jt_s;  // js − i·ks
  Complex jt_a;  // ja − i·ka
};

DerivedCouplings derive_couplings(const EdgeCouplings& raw);

/// Entries the pair Hamiltonian places in a code space: half the tilde couplings.
struct CodeBasisCouplings {
  Complex antisym;
  Complex sym;
};

CodeBasisCouplings code_basis_couplings(const EdgeCouplings& raw);

/// Inverse of code_basis_couplings for real inputs: raw couplings whose code
/// space entries are exactly (antisym, sym).
EdgeCouplings couplings_from_code_basis(double antisym, double sym);

/// H = ¼(Jx σˣσˣ + Jy σʸσʸ + Jxy σˣσʸ − Jyx σʸσˣ) on sites (i, j) of n qubits.
/// In the two-qubit basis each parity block reads (J_k σˣ + K_k σʸ)/2, with the
/// even block ordered (|00⟩,|11⟩) and the odd block (|10⟩,|01⟩).
Operator build_pair_hamiltonian(int n, int i, int j, const EdgeCouplings& raw);
Operator build_pair_hamiltonian(int n, Edge edge, const EdgeCouplings& raw);

struct ParityParts {
  Operator symmetric;      // acts on states where the two bits differ
  Operator antisymmetric;  // acts on states where the two bits agree
};

/// Splits a single-edge Hamiltonian into its two pair-parity sectors.
/// Throws std::domain_error if the input mixes the sectors.
ParityParts split_sym_antisym(const Operator& hamiltonian, int n, Edge edge);

/// Ordered physical qubits (a, b, c); local site k of a code word maps to the k-th entry.
using Triplet = std::array<int, 3>;

struct Layout {
  int num_logical = 0;
  int n_physical = 0;
  std::vector<Edge> edges;
  std::vector<Triplet> logical_triplets;
  std::vector<Triplet> bridging_triplets;

  bool has_edge(Edge edge) const;
};

Layout build_layout(int num_logical);

/// Physical edge for a local edge (1..3, 1..3) of a triplet.
Edge lift_edge(const Triplet& triplet, Edge local);

/// The three local edges in canonical order 12, 13, 23.
const std::array<Edge, 3>& local_edges();

/// Per-edge couplings: a uniform value for every layout edge plus overrides.
/// Edges not in the map read as zero.
class CouplingMap {
 public:
  CouplingMap() = default;
  static CouplingMap uniform(const Layout& layout, const EdgeCouplings& value);

  void set(Edge edge, const EdgeCouplings& value) { values_[edge] = value; }
  EdgeCouplings at(Edge edge) const;
  bool contains(Edge edge) const { return values_.count(edge) != 0; }
  const std::map<Edge, EdgeCouplings>& values() const { return values_; }

  /// Couplings of a triplet in local-edge order 12, 13, 23.
  std::array<EdgeCouplings, 3> triplet(const Triplet& t) const;

  bool has_cross_terms() const;

 private:
  std::map<Edge, EdgeCouplings> values_;
};

/// Sum of pair Hamiltonians over every edge in the map.
Operator total_hamiltonian(int n, const CouplingMap& couplings);

}  // namespace aniso
