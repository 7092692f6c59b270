#include "aniso/code_space.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

std::string word_string(Word word, int bits) {
  std::string s(bits, '0');
  for (int k = 0; k < bits; ++k) {
    if ((word >> (bits - 1 - k)) & 1) s[k] = '1';
  }
  return s;
}

Subspace CodeSpace::subspace() const { return Subspace(8, std::vector<int>(words.begin(), words.end())); }

int CodeSpace::index_of(Word word) const {
  for (int k = 0; k < 4; ++k) {
    if (words[k] == word) return k;
  }
  return -1;
}

const std::array<Word, 8>& permuted_basis() {
  static const std::array<Word, 8> basis{0b000, 0b111, 0b110, 0b001, 0b101, 0b010, 0b011, 0b100};
  return basis;
}

CommutantPair commutant_operators(int n) {
  if (n < 1) throw std::invalid_argument("commutant_operators: n must be positive");
  Operator z = pauli(Axis::z);
  Operator x = pauli(Axis::x);
  for (int k = 1; k < n; ++k) {
    z = kron(z, pauli(Axis::z));
    x = kron(x, pauli(Axis::x));
  }
  return {z, x};
}

const StandardCodes& standard_codes() {
  static const StandardCodes codes{
      CodeSpace{"I", Parity::even, {0b000, 0b110, 0b101, 0b011}},
      CodeSpace{"II", Parity::odd, {0b111, 0b001, 0b010, 0b100}},
  };
  return codes;
}

int embed_word(Word word, int n, const Triplet& triplet, int base_state) {
  int state = base_state;
  for (int k = 0; k < 3; ++k) {
    const int site = triplet[k];
    if (site < 1 || site > n) throw std::invalid_argument("embed_word: triplet site outside register");
    const int bit = n - site;
    const int value = (word >> (2 - k)) & 1;
    state = (state & ~(1 << bit)) | (value << bit);
  }
  return state;
}

Subspace embed(const CodeSpace& code, int n, const Triplet& triplet, int base_state) {
  std::vector<int> states;
  for (Word w : code.words) states.push_back(embed_word(w, n, triplet, base_state));
  return Subspace(1 << n, std::move(states));
}

Operator in_permuted_basis(const Operator& op) {
  if (op.dim() != 8) throw std::invalid_argument("in_permuted_basis: operator must be 8x8");
  const auto& basis = permuted_basis();
  return restrict_to(op, Subspace(8, std::vector<int>(basis.begin(), basis.end()))).block;
}

Operator code_matrix(const Operator& op8, const CodeSpace& code, double tol) {
  if (op8.dim() != 8) throw std::invalid_argument("code_matrix: operator must be 8x8");
  Restriction r = restrict_to(op8, code.subspace());
  // Check both directions so non-Hermitian inputs are covered too.
  const Restriction back = restrict_to(op8.adjoint(), code.subspace());
  const double leak = std::max(r.leakage, back.leakage);
  if (leak > tol) {
    throw LeakageError("code_matrix: operator leaks out of code " + code.name + " (" + std::to_string(leak) + ")");
  }
  return Operator(r.block.matrix(), op8.kind());
}

std::pair<int, int> LogicalEncoding::block() const {
  const int a = code.index_of(zero_word);
  const int b = code.index_of(one_word);
  return {std::min(a, b), std::max(a, b)};
}

std::string LogicalEncoding::label() const {
  return code.name + ":{" + word_string(zero_word) + "," + word_string(one_word) + "}";
}

std::vector<LogicalEncoding> enumerate_qubit_encodings(const CodeSpace& code) {
  // Words 1..3 share an occupation number; word 0 (000 or 111) is excluded.
  const std::array<std::pair<int, int>, 3> pairs{{{1, 3}, {1, 2}, {2, 3}}};
  std::vector<LogicalEncoding> out;
  for (const auto& [a, b] : pairs) out.push_back({code, code.words[a], code.words[b]});
  return out;
}

int edge_slot(Edge local) {
  if (local == Edge(1, 2)) return 0;
  if (local == Edge(1, 3)) return 1;
  if (local == Edge(2, 3)) return 2;
  throw std::invalid_argument("edge_slot: not a local triplet edge: " + local.str());
}

std::pair<int, int> symmetric_block(Edge local) {
  static const std::array<std::pair<int, int>, 3> blocks{{{2, 3}, {1, 3}, {1, 2}}};
  return blocks[edge_slot(local)];
}

std::pair<int, int> antisymmetric_block(Edge local) {
  static const std::array<std::pair<int, int>, 3> blocks{{{0, 1}, {0, 2}, {0, 3}}};
  return blocks[edge_slot(local)];
}

Edge edge_for_symmetric_block(std::pair<int, int> block) {
  if (block.first > block.second) std::swap(block.first, block.second);
  for (const Edge& e : local_edges()) {
    if (symmetric_block(e) == block) return e;
  }
  throw std::invalid_argument("edge_for_symmetric_block: no edge acts symmetrically on words (" +
                              std::to_string(block.first) + "," + std::to_string(block.second) + ")");
}

TripletHamiltonians TripletHamiltonians::build(const std::array<EdgeCouplings, 3>& couplings) {
  TripletHamiltonians h;
  for (std::size_t k = 0; k < 3; ++k) h.full[k] = build_pair_hamiltonian(3, local_edges()[k], couplings[k]);
  return h;
}

const Operator& TripletHamiltonians::edge(Edge local) const { return full[edge_slot(local)]; }

Operator TripletHamiltonians::in_code(Edge local, const CodeSpace& code) const {
  return Operator(code_matrix(edge(local), code).matrix(), OperatorKind::hermitian);
}

}  // namespace aniso
