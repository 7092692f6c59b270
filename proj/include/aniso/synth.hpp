#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aniso/code_space.hpp"
#include "aniso/exchange.hpp"
#include "aniso/operator.hpp"
#include "aniso/timing.hpp"

namespace aniso {

enum class PulseDirection { forward, reverse };

enum class Provenance { sigma_y_conj, sigma_z_conj, entangler, cz, bhc, custom };

std::string to_string(Provenance p);
std::string to_string(PulseDirection d);

/// exp(−iH·duration) when forward, exp(+iH·duration) when reverse.
struct Pulse {
  Edge edge;
  double duration = 0.0;
  PulseDirection direction = PulseDirection::forward;

  double signed_time() const { return direction == PulseDirection::forward ? duration : -duration; }
};

/// Pulses in application order: pulses[0] acts first.
struct PulseSequence {
  std::vector<Pulse> pulses;
  Provenance provenance = Provenance::custom;

  std::size_t size() const { return pulses.size(); }
  double total_time() const;
  void append(const PulseSequence& later);
};

/// Layout plus couplings; pulses must address layout edges.
struct Device {
  Layout layout;
  CouplingMap couplings;

  static Device uniform(int num_logical, const EdgeCouplings& value);
};

/// Compiles with the parallel two-qubit kernel.
Operator compile(const PulseSequence& seq, const Device& device);
/// Reference path: exponentiates each full 2^n pulse Hamiltonian and multiplies.
Operator compile_reference(const PulseSequence& seq, const Device& device);

struct SynthesisOptions {
  double epsilon = 1e-4;
  std::int64_t max_branch = kDefaultMaxBranch;
};

struct SigmaYSynthesis {
  PulseSequence sequence;
  Edge conjugator_edge;  // local edge used for θ
  Edge generator_edge;   // local edge used for φ′
  std::pair<int, int> block{0, 0};
  TimingSolution conjugator;
  TimingSolution rotation;
  /// Sign of the σʸ component the conjugated generator carries on the block.
  int conjugated_sign = 1;
  bool feasible = false;
};

struct SigmaZSynthesis {
  PulseSequence sequence;
  Edge outer_edge;  // the target edge itself
  std::pair<int, int> block{0, 0};
  TimingSolution outer;
  SigmaYSynthesis inner;
  /// Sign s with V σʸ V† = s·σᶻ on the block.
  int conjugated_sign = 1;
  bool feasible = false;
};

/// Sequence realizing exp(−iσʸφ) on the symmetric block of `target_edge` (a
/// local edge of the triplet), for both codes. The two other edges act as
/// conjugator and generator.
SigmaYSynthesis conjugated_sigma_y(const Device& device, const Triplet& triplet, Edge target_edge, double phi,
                                   const SynthesisOptions& options = {});

/// exp(−iσᶻφ) on the same block: the σʸ sequence conjugated by the target edge.
SigmaZSynthesis conjugated_sigma_z(const Device& device, const Triplet& triplet, Edge target_edge, double phi,
                                   const SynthesisOptions& options = {});

/// exp(−iσ^axis φ) on `block` of a 4-word code space, identity on the other words.
Operator block_rotation(Axis axis, std::pair<int, int> block, double phi);

struct CodeVerification {
  double distance_even = 0.0;  // code I, up to global phase
  double distance_odd = 0.0;   // code II
  double leakage = 0.0;        // out of either code, within the triplet
  double unitarity_defect = 0.0;

  double distance() const { return std::max(distance_even, distance_odd); }
};

/// Restricts a compiled 2^n unitary to both codes on `triplet` (other qubits
/// fixed to `base_state`) and compares with a 4×4 target.
CodeVerification verify_on_codes(const Operator& unitary, int n, const Triplet& triplet, const Operator& target,
                                 int base_state = 0);

struct ConjugatedGenerator {
  Operator generator;          // e^{iθH_A} H_B e^{−iθH_A}
  Complex antisym_coefficient;  // σʸ weight on the third edge's antisymmetric block
  Complex sym_coefficient;      // σʸ weight on the third edge's symmetric block
  double residual = 0.0;
};

/// Conjugates H_B by the θ evolution of H_A (both 4×4 code matrices) and checks
/// the result is σʸ-like on the two blocks of the remaining edge.
ConjugatedGenerator conjugate_generator_check(double theta, const Operator& h_a, const Operator& h_b,
                                              Edge third_edge, double bound);

/// (S ⊕ S)·P₂₄ with S = diag(1, i) and P₂₄ exchanging code words 2 and 4.
Operator conjugator_reference();

/// Code-space permutation exchanging words 2 and 4 (1-based).
Operator swap_words_2_4();

/// n-th power of e^{−iA/√n} e^{iB/√n} e^{iA/√n} e^{−iB/√n}.
Operator bhc_approximation(const Operator& a, const Operator& b, std::int64_t n);
/// exp([A, B]).
Operator bhc_target(const Operator& a, const Operator& b);
inline std::int64_t bhc_pulse_count(std::int64_t n) { return 4 * n; }

}  // namespace aniso
