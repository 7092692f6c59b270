#include "aniso/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "aniso/kernels.hpp"
#include "aniso/lie.hpp"

namespace aniso {

namespace {

void check_pulse(const Pulse& p, const Device& device) {
  if (!std::isfinite(p.duration) || p.duration < 0.0) {
    throw std::invalid_argument("pulse on edge " + p.edge.str() + " has invalid duration");
  }
  if (!device.layout.has_edge(p.edge)) {
    throw std::invalid_argument("pulse addresses edge " + p.edge.str() + " which is not in the layout");
  }
}

void check_triplet(const Device& device, const Triplet& t) {
  if (!(t[0] < t[1] && t[1] < t[2])) throw std::invalid_argument("triplet sites must be strictly increasing");
  for (const Edge& local : local_edges()) {
    if (!device.layout.has_edge(lift_edge(t, local))) {
      throw std::invalid_argument("triplet edge " + lift_edge(t, local).str() + " is not in the layout");
    }
  }
}

// An infeasible timing may leave no overlap at all; the sequence is then only a
// best effort and the sign is arbitrary.
int sign_of(double value, const char* what, bool timing_feasible) {
  if (std::abs(value) < 1e-9) {
    if (!timing_feasible) return 1;
    throw std::runtime_error(std::string(what) + ": conjugated generator has no weight on the target block");
  }
  return value > 0.0 ? 1 : -1;
}

std::pair<Edge, Edge> partner_edges(Edge target) {
  std::vector<Edge> others;
  for (const Edge& e : local_edges()) {
    if (e != target) others.push_back(e);
  }
  return {others[0], others[1]};
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::sigma_y_conj: return "sigma_y_conj";
    case Provenance::sigma_z_conj: return "sigma_z_conj";
    case Provenance::entangler: return "entangler";
    case Provenance::cz: return "cz";
    case Provenance::bhc: return "bhc";
    case Provenance::custom: return "custom";
  }
  return "custom";
}

std::string to_string(PulseDirection d) { return d == PulseDirection::forward ? "forward" : "reverse"; }

double PulseSequence::total_time() const {
  double t = 0.0;
  for (const Pulse& p : pulses) t += p.duration;
  return t;
}

void PulseSequence::append(const PulseSequence& later) {
  pulses.insert(pulses.end(), later.pulses.begin(), later.pulses.end());
}

Device Device::uniform(int num_logical, const EdgeCouplings& value) {
  Device d;
  d.layout = build_layout(num_logical);
  d.couplings = CouplingMap::uniform(d.layout, value);
  return d;
}

Operator compile(const PulseSequence& seq, const Device& device) {
  const int n = device.layout.n_physical;
  Matrix state = Matrix::Identity(1 << n, 1 << n);
  for (const Pulse& p : seq.pulses) {
    check_pulse(p, device);
    const Operator h2 = build_pair_hamiltonian(2, 1, 2, device.couplings.at(p.edge));
    apply_pair_gate(state, evolve(h2, p.signed_time()).matrix(), n, p.edge.i, p.edge.j);
  }
  return Operator(std::move(state), OperatorKind::unitary);
}

Operator compile_reference(const PulseSequence& seq, const Device& device) {
  const int n = device.layout.n_physical;
  Operator u = Operator::identity(1 << n);
  for (const Pulse& p : seq.pulses) {
    check_pulse(p, device);
    u = evolve(build_pair_hamiltonian(n, p.edge, device.couplings.at(p.edge)), p.signed_time()) * u;
  }
  return u;
}

SigmaYSynthesis conjugated_sigma_y(const Device& device, const Triplet& triplet, Edge target_edge, double phi,
                                   const SynthesisOptions& options) {
  check_triplet(device, triplet);
  const auto couplings = device.couplings.triplet(triplet);
  const TripletHamiltonians hams = TripletHamiltonians::build(couplings);
  const CodeSpace& code = standard_codes().even;

  SigmaYSynthesis out;
  std::tie(out.conjugator_edge, out.generator_edge) = partner_edges(target_edge);
  out.block = symmetric_block(target_edge);

  const CodeBasisCouplings conj = code_basis_couplings(couplings[edge_slot(out.conjugator_edge)]);
  const CodeBasisCouplings gen = code_basis_couplings(couplings[edge_slot(out.generator_edge)]);
  out.conjugator = solve_theta_cross(conj.antisym, conj.sym, options.epsilon, options.max_branch);

  // Which way the conjugated generator points on the block fixes the sign of φ′.
  const Operator u = evolve(hams.in_code(out.conjugator_edge, code), -out.conjugator.theta);
  const Operator g = u * hams.in_code(out.generator_edge, code) * u.adjoint();
  const Operator sy = block_pauli(Axis::y, out.block.first, out.block.second);
  out.conjugated_sign = sign_of(hs_inner(sy, g).real() / 2.0, "conjugated_sigma_y", out.conjugator.feasible);

  out.rotation = solve_phi(std::abs(gen.antisym), std::abs(gen.sym), -out.conjugated_sign * phi, options.epsilon,
                           options.max_branch);
  out.feasible = out.conjugator.feasible && out.rotation.feasible;

  const Edge conj_phys = lift_edge(triplet, out.conjugator_edge);
  const Edge gen_phys = lift_edge(triplet, out.generator_edge);
  out.sequence.provenance = Provenance::sigma_y_conj;
  out.sequence.pulses = {
      {conj_phys, out.conjugator.theta, PulseDirection::forward},
      {gen_phys, out.rotation.theta, PulseDirection::reverse},
      {conj_phys, out.conjugator.theta, PulseDirection::reverse},
  };
  return out;
}

SigmaZSynthesis conjugated_sigma_z(const Device& device, const Triplet& triplet, Edge target_edge, double phi,
                                   const SynthesisOptions& options) {
  check_triplet(device, triplet);
  const auto couplings = device.couplings.triplet(triplet);
  const TripletHamiltonians hams = TripletHamiltonians::build(couplings);
  const CodeSpace& code = standard_codes().even;

  SigmaZSynthesis out;
  out.outer_edge = target_edge;
  out.block = symmetric_block(target_edge);
  const CodeBasisCouplings cb = code_basis_couplings(couplings[edge_slot(target_edge)]);
  out.outer = solve_quarter_turn(std::abs(cb.antisym), std::abs(cb.sym), options.epsilon, options.max_branch);

  const Operator v = evolve(hams.in_code(target_edge, code), -out.outer.theta);
  const Operator sy = block_pauli(Axis::y, out.block.first, out.block.second);
  const Operator sz = block_pauli(Axis::z, out.block.first, out.block.second);
  out.conjugated_sign = sign_of(hs_inner(sz, v * sy * v.adjoint()).real() / 2.0, "conjugated_sigma_z", out.outer.feasible);

  out.inner = conjugated_sigma_y(device, triplet, target_edge, out.conjugated_sign * phi, options);
  out.feasible = out.outer.feasible && out.inner.feasible;

  const Edge phys = lift_edge(triplet, target_edge);
  out.sequence.provenance = Provenance::sigma_z_conj;
  out.sequence.pulses.push_back({phys, out.outer.theta, PulseDirection::forward});
  out.sequence.append(out.inner.sequence);
  out.sequence.pulses.push_back({phys, out.outer.theta, PulseDirection::reverse});
  return out;
}

Operator block_rotation(Axis axis, std::pair<int, int> block, double phi) {
  const Operator rot = evolve(pauli(axis), phi);
  Matrix m = Matrix::Identity(4, 4);
  const int idx[2] = {block.first, block.second};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(idx[r], idx[c]) = rot(r, c);
  }
  return Operator(std::move(m), OperatorKind::unitary);
}

CodeVerification verify_on_codes(const Operator& unitary, int n, const Triplet& triplet, const Operator& target,
                                 int base_state) {
  CodeVerification out;
  const Restriction even = restrict_to(unitary, embed(standard_codes().even, n, triplet, base_state));
  const Restriction odd = restrict_to(unitary, embed(standard_codes().odd, n, triplet, base_state));
  out.distance_even = phase_aligned_distance(even.block, target);
  out.distance_odd = phase_aligned_distance(odd.block, target);
  out.leakage = std::max(even.leakage, odd.leakage);
  const Matrix defect = unitary.matrix().adjoint() * unitary.matrix() - Matrix::Identity(unitary.dim(), unitary.dim());
  out.unitarity_defect = defect.cwiseAbs().maxCoeff();
  return out;
}

ConjugatedGenerator conjugate_generator_check(double theta, const Operator& h_a, const Operator& h_b,
                                              Edge third_edge, double bound) {
  const Operator u = evolve(h_a, -theta);
  ConjugatedGenerator out;
  out.generator = u * h_b * u.adjoint();
  const auto anti = antisymmetric_block(third_edge);
  const auto sym = symmetric_block(third_edge);
  const Operator ya = block_pauli(Axis::y, anti.first, anti.second);
  const Operator ys = block_pauli(Axis::y, sym.first, sym.second);
  out.antisym_coefficient = hs_inner(ya, out.generator) / 2.0;
  out.sym_coefficient = hs_inner(ys, out.generator) / 2.0;
  out.residual = frobenius_norm(out.generator - out.antisym_coefficient * ya - out.sym_coefficient * ys);
  if (out.residual > bound) {
    throw std::runtime_error("conjugate_generator_check: residual " + std::to_string(out.residual) +
                             " exceeds bound " + std::to_string(bound));
  }
  return out;
}

Operator swap_words_2_4() {
  Matrix p = Matrix::Zero(4, 4);
  p(0, 0) = 1.0;
  p(2, 2) = 1.0;
  p(1, 3) = 1.0;
  p(3, 1) = 1.0;
  return Operator(std::move(p), OperatorKind::unitary);
}

Operator conjugator_reference() {
  const Complex i{0.0, 1.0};
  Matrix s2 = Matrix::Zero(4, 4);
  s2.diagonal() << 1.0, i, 1.0, i;
  return Operator(s2 * swap_words_2_4().matrix(), OperatorKind::unitary);
}

Operator bhc_approximation(const Operator& a, const Operator& b, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bhc_approximation: n must be at least 1");
  const double t = 1.0 / std::sqrt(static_cast<double>(n));
  const Matrix w = evolve(a, t).matrix() * evolve(b, -t).matrix() * evolve(a, -t).matrix() * evolve(b, t).matrix();
  Matrix result = Matrix::Identity(w.rows(), w.cols());
  Matrix base = w;
  for (std::int64_t e = n; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return Operator(std::move(result), OperatorKind::unitary);
}

Operator bhc_target(const Operator& a, const Operator& b) {
  // exp([A,B]) = exp(−iK) with K = i[A,B] Hermitian.
  const Operator k = Complex{0.0, 1.0} * commutator(a, b);
  return evolve(Operator(k.matrix(), OperatorKind::hermitian), 1.0);
}

}  // namespace aniso
