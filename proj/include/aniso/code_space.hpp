#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aniso/exchange.hpp"
#include "aniso/operator.hpp"

namespace aniso {

enum class Parity { even, odd };

/// Three-bit code word; bit 2 (MSB) is local qubit 1.
using Word = int;

std::string word_string(Word word, int bits = 3);

struct CodeSpace {
  std::string name;  // "I" or "II"
  Parity parity = Parity::even;
  std::array<Word, 4> words{};

  Subspace subspace() const;
  int index_of(Word word) const;  // -1 if absent
};

/// Thrown when a code restriction carries amplitude outside the code.
class LeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 000, 111, 110, 001, 101, 010, 011, 100.
const std::array<Word, 8>& permuted_basis();

struct CommutantPair {
  Operator parity_op;  // ⊗σᶻ
  Operator flip_op;    // ⊗σˣ
};

CommutantPair commutant_operators(int n);

struct StandardCodes {
  CodeSpace even;  // code I
  CodeSpace odd;   // code II
};

const StandardCodes& standard_codes();

/// Maps a local code word onto an n-qubit basis index, writing bit k of the
/// word onto physical qubit triplet[k] and leaving other qubits as in `base_state`.
int embed_word(Word word, int n, const Triplet& triplet, int base_state = 0);

Subspace embed(const CodeSpace& code, int n, const Triplet& triplet, int base_state = 0);

/// Operator expressed in the permuted basis ordering.
Operator in_permuted_basis(const Operator& op);

/// 4×4 matrix of an 8×8 operator in a code space. Throws LeakageError when
/// the operator couples the code to its complement beyond `tol`.
Operator code_matrix(const Operator& op8, const CodeSpace& code, double tol = kAlgebraTol);

struct LogicalEncoding {
  CodeSpace code;
  Word zero_word = 0;
  Word one_word = 0;

  /// Code-word indices (0-based) of |0_L⟩ and |1_L⟩, ascending.
  std::pair<int, int> block() const;
  std::string label() const;
};

std::vector<LogicalEncoding> enumerate_qubit_encodings(const CodeSpace& code);

/// Code-word block (0-based, ascending) on which the symmetric part of a local
/// edge acts, and the block of its antisymmetric part.
std::pair<int, int> symmetric_block(Edge local);
std::pair<int, int> antisymmetric_block(Edge local);

/// Local edge whose symmetric part acts on the given block.
Edge edge_for_symmetric_block(std::pair<int, int> block);

/// Pair Hamiltonians of one triangle in its local 3-qubit frame.
struct TripletHamiltonians {
  std::array<Operator, 3> full;  // 8×8, local edge order 12, 13, 23

  static TripletHamiltonians build(const std::array<EdgeCouplings, 3>& couplings);
  const Operator& edge(Edge local) const;
  Operator in_code(Edge local, const CodeSpace& code) const;
};

int edge_slot(Edge local);

}  // namespace aniso
