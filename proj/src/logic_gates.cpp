#include "aniso/logic_gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

namespace aniso {

namespace {

void require_two_logical(const LogicalRegister& reg, const char* what) {
  if (reg.layout.num_logical != 2) {
    throw std::invalid_argument(std::string(what) + ": needs exactly two logical qubits");
  }
}

const CodeSpace& code_of(Word word) {
  return std::popcount(static_cast<unsigned>(word)) % 2 == 0 ? standard_codes().even : standard_codes().odd;
}

}  // namespace

LogicalRegister LogicalRegister::standard(int num_logical) {
  return {build_layout(num_logical), enumerate_qubit_encodings(standard_codes().even).front()};
}

std::vector<int> logical_basis_strings(const LogicalRegister& reg) {
  const int n = reg.layout.n_physical;
  const int num = reg.layout.num_logical;
  std::vector<int> out;
  for (int idx = 0; idx < reg.logical_dim(); ++idx) {
    int state = 0;
    for (int q = 0; q < num; ++q) {
      const int bit = (idx >> (num - 1 - q)) & 1;
      state = embed_word(bit ? reg.encoding.one_word : reg.encoding.zero_word, n, reg.layout.logical_triplets[q], state);
    }
    out.push_back(state);
  }
  return out;
}

Word extract_word(int state, int n, const Triplet& triplet) {
  Word w = 0;
  for (int k = 0; k < 3; ++k) w = (w << 1) | ((state >> (n - triplet[k])) & 1);
  return w;
}

std::array<Complex, 4> bridging_phases(const LogicalRegister& reg, std::pair<int, int> block, double phi) {
  require_two_logical(reg, "bridging_phases");
  const int n = reg.layout.n_physical;
  const Triplet& bridge = reg.layout.bridging_triplets.front();
  const auto strings = logical_basis_strings(reg);
  std::array<Complex, 4> phases{};
  for (int idx = 0; idx < 4; ++idx) {
    const Word w = extract_word(strings[idx], n, bridge);
    const int pos = code_of(w).index_of(w);
    if (pos == block.first) {
      phases[idx] = std::polar(1.0, -phi);
    } else if (pos == block.second) {
      phases[idx] = std::polar(1.0, phi);
    } else {
      phases[idx] = 1.0;
    }
  }
  return phases;
}

EntanglerPlan entangling_phase(const LogicalRegister& reg, const Device& device, const SynthesisOptions& options) {
  require_two_logical(reg, "entangling_phase");
  const double phi = std::numbers::pi / 2.0;
  for (const Edge& local : local_edges()) {
    const auto d = bridging_phases(reg, symmetric_block(local), phi);
    // Locally equivalent to C(Z) exactly when d00·d11 = −d01·d10.
    if (std::abs(d[0] * d[3] + d[1] * d[2]) > 1e-12) continue;
    EntanglerPlan plan;
    plan.local_target = local;
    plan.predicted_phases = d;
    plan.synthesis = conjugated_sigma_z(device, reg.layout.bridging_triplets.front(), local, phi, options);
    plan.sequence = plan.synthesis.sequence;
    plan.sequence.provenance = Provenance::entangler;
    plan.feasible = plan.synthesis.feasible;
    return plan;
  }
  throw std::runtime_error("entangling_phase: no bridging block gives an entangling phase for encoding " +
                           reg.encoding.label());
}

LocalRotation local_z_rotation(const LogicalRegister& reg, const Device& device, int logical_qubit, double angle,
                               const SynthesisOptions& options) {
  if (logical_qubit < 1 || logical_qubit > reg.layout.num_logical) {
    throw std::invalid_argument("local_z_rotation: logical qubit out of range");
  }
  const auto block = reg.encoding.block();
  // Block σᶻ is +1 on the lower word index; flip when |0_L⟩ is the higher one.
  const int orientation = reg.encoding.code.index_of(reg.encoding.zero_word) == block.first ? 1 : -1;
  LocalRotation out;
  out.logical_qubit = logical_qubit;
  out.angle = angle;
  out.synthesis = conjugated_sigma_z(device, reg.layout.logical_triplets[logical_qubit - 1],
                                     edge_for_symmetric_block(block), -orientation * angle, options);
  return out;
}

ControlledZPlan controlled_z(const LogicalRegister& reg, const Device& device, const SynthesisOptions& options,
                             CzPath path) {
  require_two_logical(reg, "controlled_z");
  ControlledZPlan plan;
  plan.entangler = entangling_phase(reg, device, options);
  const auto& d = plan.entangler.predicted_phases;
  plan.alpha = std::arg(d[2] / d[0]) / 2.0;
  plan.beta = std::arg(d[1] / d[0]) / 2.0;
  if (path == CzPath::direct) {
    plan.corrections.push_back(local_z_rotation(reg, device, 1, plan.alpha, options));
    plan.corrections.push_back(local_z_rotation(reg, device, 2, plan.beta, options));
  } else {
    plan.corrections.push_back(local_z_rotation(reg, device, 2, plan.beta / 2.0, options));
    plan.corrections.push_back(local_z_rotation(reg, device, 1, plan.alpha, options));
    plan.corrections.push_back(local_z_rotation(reg, device, 2, plan.beta / 2.0, options));
  }
  plan.sequence = plan.entangler.sequence;
  plan.feasible = plan.entangler.feasible;
  for (const LocalRotation& r : plan.corrections) {
    plan.sequence.append(r.synthesis.sequence);
    plan.feasible = plan.feasible && r.synthesis.feasible;
  }
  plan.sequence.provenance = Provenance::cz;
  plan.core_pulses = static_cast<int>(plan.entangler.sequence.size());
  return plan;
}

GateVerification verify_logical_gate(const PulseSequence& seq, const Operator& target, const LogicalRegister& reg,
                                     const Device& device) {
  if (target.dim() != reg.logical_dim()) throw std::invalid_argument("verify_logical_gate: target has wrong dimension");
  const Operator u = compile(seq, device);
  const Restriction r = restrict_to(u, Subspace(u.dim(), logical_basis_strings(reg)));
  GateVerification out;
  out.logical = r.block;
  out.leakage = r.leakage;
  out.distance = phase_aligned_distance(r.block, target);
  Matrix off = r.block.matrix();
  off.diagonal().setZero();
  out.diagonal = off.norm() <= 1e-9;
  if (out.diagonal) {
    for (int k = 0; k < r.block.dim(); ++k) out.phases.push_back(r.block(k, k));
  }
  return out;
}

Operator cz_target() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return Operator(std::move(m), OperatorKind::unitary);
}

double entanglement_entropy(const Eigen::VectorXcd& state) {
  if (state.size() != 4) throw std::invalid_argument("entanglement_entropy: expected a two-qubit state");
  Matrix m(2, 2);
  m << state(0), state(1), state(2), state(3);
  Eigen::JacobiSVD<Matrix> svd(m);
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double p = svd.singularValues()(k) * svd.singularValues()(k);
    if (p > 1e-15) entropy -= p * std::log2(p);
  }
  return entropy;
}

}  // namespace aniso
