#include <gtest/gtest.h>

#include <numbers>

#include "aniso/logic_gates.hpp"

using namespace aniso;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};
const EdgeCouplings kExact = couplings_from_code_basis(1.0, 1.25);
const SynthesisOptions kTight{1e-12, kDefaultMaxBranch};

// Distance between two diagonals after removing the best global phase.
double diag_distance(const std::vector<Complex>& got, const std::vector<Complex>& want) {
  Complex overlap = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) overlap += std::conj(want[k]) * got[k];
  const Complex phase = overlap / std::abs(overlap);
  double sq = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) sq += std::norm(got[k] - phase * want[k]);
  return std::sqrt(sq);
}

}  // namespace

TEST(Register, LogicalBasisStrings) {
  const LogicalRegister reg = LogicalRegister::standard(2);
  // |0_L⟩ = 110, |1_L⟩ = 011 on each triangle; logical qubit 1 is the high triangle.
  EXPECT_EQ(logical_basis_strings(reg), (std::vector<int>{0b110110, 0b110011, 0b011110, 0b011011}));
  EXPECT_EQ(extract_word(0b110011, 6, {2, 3, 4}), 0b100);
  EXPECT_EQ(reg.logical_dim(), 4);
}

TEST(Entangler, PredictedAndCompiledPhases) {
  const LogicalRegister reg = LogicalRegister::standard(2);
  const Device dev = Device::uniform(2, kExact);
  const EntanglerPlan plan = entangling_phase(reg, dev, kTight);
  ASSERT_TRUE(plan.feasible);
  EXPECT_EQ(plan.local_target, Edge(1, 2));
  const std::array<Complex, 4> want{-I, I, 1.0, 1.0};
  for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(plan.predicted_phases[k] - want[k]), 1e-15);
  EXPECT_EQ(plan.sequence.size(), 5u);
  const GateVerification v = verify_logical_gate(plan.sequence, cz_target(), reg, dev);
  ASSERT_TRUE(v.diagonal);
  EXPECT_LE(diag_distance(v.phases, {want.begin(), want.end()}), 1e-9);
  EXPECT_LE(v.leakage, 1e-12);
}

TEST(ControlledZ, DirectPath) {
  const LogicalRegister reg = LogicalRegister::standard(2);
  const Device dev = Device::uniform(2, kExact);
  const ControlledZPlan plan = controlled_z(reg, dev, kTight);
  ASSERT_TRUE(plan.feasible);
  EXPECT_EQ(plan.core_pulses, 5);
  EXPECT_EQ(plan.sequence.size(), 15u);
  EXPECT_NEAR(plan.alpha, kPi / 4.0, 1e-15);  // arg(d10/d00)/2 with d00 = −i, d10 = 1
  EXPECT_NEAR(plan.beta, kPi / 2.0, 1e-15);   // arg(d01/d00)/2 with d01 = i
  const GateVerification v = verify_logical_gate(plan.sequence, cz_target(), reg, dev);
  EXPECT_LE(v.distance, 1e-9);
  EXPECT_LE(v.leakage, 1e-12);
}

TEST(ControlledZ, StagedPathIntermediateStep) {
  const LogicalRegister reg = LogicalRegister::standard(2);
  const Device dev = Device::uniform(2, kExact);
  const ControlledZPlan plan = controlled_z(reg, dev, kTight, CzPath::staged);
  ASSERT_EQ(plan.corrections.size(), 3u);
  EXPECT_NEAR(plan.corrections.front().angle, kPi / 4.0, 1e-15);
  PulseSequence step = plan.entangler.sequence;
  step.append(plan.corrections.front().synthesis.sequence);
  const GateVerification v = verify_logical_gate(step, cz_target(), reg, dev);
  ASSERT_TRUE(v.diagonal);
  EXPECT_LE(diag_distance(v.phases, {-I, 1.0, 1.0, -I}), 1e-9);
  EXPECT_EQ(plan.sequence.size(), 20u);
  EXPECT_LE(verify_logical_gate(plan.sequence, cz_target(), reg, dev).distance, 1e-9);
}

TEST(ControlledZ, EntanglesAndIsSymmetric) {
  const LogicalRegister reg = LogicalRegister::standard(2);
  const Device dev = Device::uniform(2, kExact);
  const Operator u = verify_logical_gate(controlled_z(reg, dev, kTight).sequence, cz_target(), reg, dev).logical;
  const Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(4, 0.5);
  EXPECT_NEAR(entanglement_entropy(u.matrix() * plus), 1.0, 1e-9);
  EXPECT_NEAR(entanglement_entropy(plus), 0.0, 1e-12);
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  EXPECT_LE(phase_aligned_distance(Operator(swap * u.matrix() * swap), u), 1e-9);
  EXPECT_NEAR(phase_aligned_distance(u, Operator::identity(4)), 2.0, 1e-9);
}

TEST(ControlledZ, EveryEncoding) {
  const Device dev = Device::uniform(2, kExact);
  int built = 0;
  for (const CodeSpace* code : {&standard_codes().even, &standard_codes().odd}) {
    for (const LogicalEncoding& enc : enumerate_qubit_encodings(*code)) {
      const LogicalRegister reg{build_layout(2), enc};
      try {
        const ControlledZPlan plan = controlled_z(reg, dev, kTight);
        EXPECT_LE(verify_logical_gate(plan.sequence, cz_target(), reg, dev).distance, 1e-9) << enc.label();
        ++built;
      } catch (const std::runtime_error&) {
        // No bridging block is entangling for this word pair.
      }
    }
  }
  EXPECT_GE(built, 2);
}

TEST(LocalRotation, ActsOnOneLogicalQubit) {
  const LogicalRegister reg = LogicalRegister::standard(2);
  const Device dev = Device::uniform(2, kExact);
  const LocalRotation r = local_z_rotation(reg, dev, 1, kPi / 4.0, kTight);
  const GateVerification v = verify_logical_gate(r.synthesis.sequence, cz_target(), reg, dev);
  ASSERT_TRUE(v.diagonal);
  // e^{iπ/4·σ̄ᶻ} on qubit 1: phase e^{iπ/4} on |0x⟩ and e^{−iπ/4} on |1x⟩.
  const Complex p = std::polar(1.0, kPi / 4.0);
  EXPECT_LE(diag_distance(v.phases, {p, p, std::conj(p), std::conj(p)}), 1e-9);
  EXPECT_THROW(local_z_rotation(reg, dev, 3, 0.1), std::invalid_argument);
}

TEST(Register, NeedsTwoLogicalQubits) {
  const LogicalRegister reg = LogicalRegister::standard(3);
  EXPECT_THROW(controlled_z(reg, Device::uniform(3, kExact)), std::invalid_argument);
  EXPECT_THROW(entanglement_entropy(Eigen::VectorXcd::Zero(3)), std::invalid_argument);
}
