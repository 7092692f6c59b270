#pragma once

#include <array>
#include <vector>

#include "aniso/code_space.hpp"
#include "aniso/synth.hpp"

namespace aniso {

struct LogicalRegister {
  Layout layout;
  LogicalEncoding encoding;

  int logical_dim() const { return 1 << layout.num_logical; }

  /// Encoding |0_L⟩ = |110⟩, |1_L⟩ = |011⟩ of code I.
  static LogicalRegister standard(int num_logical);
};

/// Physical basis index of every logical basis state; logical qubit 1 is the
/// most significant bit of the logical index.
std::vector<int> logical_basis_strings(const LogicalRegister& reg);

/// Three-bit substring of a physical basis state on a triplet.
Word extract_word(int state, int n, const Triplet& triplet);

struct EntanglerPlan {
  SigmaZSynthesis synthesis;
  PulseSequence sequence;  // on the bridging triplet
  Edge local_target;       // local edge of the bridging triplet whose block is rotated
  std::array<Complex, 4> predicted_phases{};  // diagonal on |00⟩,|01⟩,|10⟩,|11⟩ (logical)
  bool feasible = false;
};

/// Predicted logical diagonal of exp(−iσᶻφ) on `block` of the bridging triplet,
/// which acts on that block in both codes.
std::array<Complex, 4> bridging_phases(const LogicalRegister& reg, std::pair<int, int> block, double phi);

/// σᶻ(π/2) on a bridging block chosen so the resulting diagonal is entangling.
EntanglerPlan entangling_phase(const LogicalRegister& reg, const Device& device, const SynthesisOptions& options = {});

/// e^{i·angle·σ̄ᶻ} on one logical qubit (1-based), σ̄ᶻ = +1 on |0_L⟩.
struct LocalRotation {
  int logical_qubit = 1;
  double angle = 0.0;
  SigmaZSynthesis synthesis;
};

LocalRotation local_z_rotation(const LogicalRegister& reg, const Device& device, int logical_qubit, double angle,
                               const SynthesisOptions& options = {});

enum class CzPath {
  direct,  // entangler + one correction per qubit (15 pulses)
  staged,  // entangler + q2(π/4) + q1(π/4) + q2(π/4) (20 pulses)
};

struct ControlledZPlan {
  PulseSequence sequence;  // full gate including local corrections
  EntanglerPlan entangler;
  std::vector<LocalRotation> corrections;
  double alpha = 0.0;  // correction angle on logical qubit 1
  double beta = 0.0;   // correction angle on logical qubit 2
  int core_pulses = 0;
  bool feasible = false;
};

ControlledZPlan controlled_z(const LogicalRegister& reg, const Device& device, const SynthesisOptions& options = {},
                             CzPath path = CzPath::direct);

struct GateVerification {
  Operator logical;  // compiled unitary restricted to the logical basis
  double distance = 0.0;
  double leakage = 0.0;
  bool diagonal = false;
  std::vector<Complex> phases;  // diagonal entries when diagonal
};

GateVerification verify_logical_gate(const PulseSequence& seq, const Operator& target, const LogicalRegister& reg,
                                     const Device& device);

/// diag(1, 1, 1, −1).
Operator cz_target();

/// Von Neumann entropy (bits) of the first qubit of a two-qubit pure state.
double entanglement_entropy(const Eigen::VectorXcd& state);

}  // namespace aniso
