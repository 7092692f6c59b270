#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aniso/code_space.hpp"
#include "aniso/operator.hpp"

namespace aniso {

/// Default independence threshold, relative to the candidate's norm.
inline constexpr double kLieIndependenceTol = 1e-8;

class ClosureOverflow : public std::runtime_error {
 public:
  explicit ClosureOverflow(int limit)
      : std::runtime_error("lie_closure: dimension exceeded max_dim=" + std::to_string(limit)), max_dim(limit) {}
  int max_dim;
};

class BlockSupportError : public std::runtime_error {
 public:
  BlockSupportError(const std::string& what, double off_block)
      : std::runtime_error(what), off_block_norm(off_block) {}
  double off_block_norm;
};

/// Orthonormal (Re tr(A†B)) basis of anti-Hermitian generators.
struct LieBasis {
  std::vector<Operator> generators;

  int dim() const { return static_cast<int>(generators.size()); }
  /// max |Re tr(Aᵢ†Aⱼ) − δᵢⱼ|.
  double orthonormality_residual() const;
  /// Largest norm of a commutator's component outside the span.
  double closure_residual() const;
};

/// Smallest real Lie algebra containing i·seed. Throws ClosureOverflow past max_dim.
LieBasis lie_closure(const std::vector<Operator>& seeds, int max_dim, double tol = kLieIndependenceTol);

/// σ^axis placed on words (p, q) of a dim-dimensional space (p → first row/col of the Pauli).
Operator block_pauli(Axis axis, int p, int q, int dim = 4);

enum class EncodedLabel { sx, sy, sz };

std::string to_string(EncodedLabel label);

struct EncodedGenerator {
  EncodedLabel label = EncodedLabel::sy;
  std::pair<int, int> target_words{0, 0};
  Operator matrix;       // the commutator (or Hamiltonian block) as computed
  Complex coefficient;   // matrix = coefficient · block_pauli(label, target_words)
  double off_block_norm = 0.0;
};

/// [H_A, H_B] for two local edges of one triangle, in code-space matrices.
/// The result must sit on the symmetric block of the third edge; otherwise
/// BlockSupportError is thrown.
EncodedGenerator encoded_sigma_y(const TripletHamiltonians& hams, const CodeSpace& code, Edge pair_a, Edge pair_b,
                                 double tol = kAlgebraTol);

/// [H_pair, σʸ_block] where the block is sigma_y's block.
EncodedGenerator encoded_sigma_z(const TripletHamiltonians& hams, const CodeSpace& code, Edge pair,
                                 const EncodedGenerator& sigma_y, double tol = kAlgebraTol);

/// The symmetric part of a pair Hamiltonian on its own block, read as σ̄ˣ
/// (coefficient is the real part of the block entry).
EncodedGenerator encoded_sigma_x(const TripletHamiltonians& hams, const CodeSpace& code, Edge pair);

struct CrossTermRow {
  Edge pair_a;
  Edge pair_b;
  std::pair<int, int> target_words;
  bool pure = false;
  double off_block_norm = 0.0;
  Complex coefficient;
};

/// Evaluates the three commutator pairs (12,13), (12,23), (13,23).
std::vector<CrossTermRow> cross_term_scan(const TripletHamiltonians& hams, const CodeSpace& code,
                                          double tol = kAlgebraTol);

}  // namespace aniso
