#include "aniso/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "aniso/lie.hpp"
#include "aniso/logic_gates.hpp"

namespace aniso::cli {

namespace {

constexpr double kLeakTol = 1e-12;

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const Operator& op) {
  json rows = json::array();
  for (int r = 0; r < op.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < op.dim(); ++c) row.push_back(complex_json(op(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json edge_json(Edge e) { return json::array({e.i, e.j}); }

json timing_json(const TimingSolution& t) {
  return {{"theta", t.theta},
          {"m", t.m},
          {"k", t.k},
          {"residual_antisym", t.residual_antisym},
          {"residual_sym", t.residual_sym},
          {"phase_antisym", complex_json(t.phase_antisym)},
          {"phase_sym", complex_json(t.phase_sym)},
          {"feasible", t.feasible},
          {"factorized_residual", t.factorized_residual}};
}

json sequence_json(const PulseSequence& seq) {
  json pulses = json::array();
  for (const Pulse& p : seq.pulses) {
    pulses.push_back({{"edge", edge_json(p.edge)}, {"duration", p.duration}, {"direction", to_string(p.direction)}});
  }
  return {{"provenance", to_string(seq.provenance)},
          {"pulse_count", seq.size()},
          {"total_time", seq.total_time()},
          {"pulses", pulses}};
}

SynthesisOptions options_of(const RunConfig& cfg) {
  return {cfg.tolerances.epsilon_timing, cfg.tolerances.max_branch};
}

Triplet triplet_of(const RunConfig& cfg) { return {cfg.task.triplet[0], cfg.task.triplet[1], cfg.task.triplet[2]}; }

Edge target_of(const RunConfig& cfg) { return Edge(cfg.task.target_edge[0], cfg.task.target_edge[1]); }

TripletHamiltonians triplet_hams(const RunConfig& cfg, const Device& device) {
  return TripletHamiltonians::build(device.couplings.triplet(triplet_of(cfg)));
}

// Spectral norm of U − e^{iφ}V at the Frobenius-optimal phase.
double aligned_spectral_error(const Operator& u, const Operator& v) {
  const Complex overlap = hs_inner(v, u);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return spectral_norm(u - phase * v);
}

Report start_report(const std::string& task, const RunConfig& cfg) {
  Report r;
  r.task = task;
  r.inputs = to_json(cfg);
  return r;
}

void add_check(Report& r, const std::string& name, bool ok, int code = kExitValidation) {
  r.checks[name] = ok;
  if (!ok) r.fail(code);
}

json flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

// Expected code-space matrix: half tilde couplings on the two blocks of an edge,
// conjugated for the odd code.
Operator expected_code_matrix(Edge local, const EdgeCouplings& raw, bool odd_code) {
  CodeBasisCouplings cb = code_basis_couplings(raw);
  if (odd_code) cb = {std::conj(cb.antisym), std::conj(cb.sym)};
  Matrix m = Matrix::Zero(4, 4);
  const auto a = antisymmetric_block(local);
  const auto s = symmetric_block(local);
  m(a.first, a.second) = cb.antisym;
  m(a.second, a.first) = std::conj(cb.antisym);
  m(s.first, s.second) = cb.sym;
  m(s.second, s.first) = std::conj(cb.sym);
  return Operator(std::move(m));
}

json verification_json(const CodeVerification& v) {
  return {{"distance_code_I", v.distance_even},
          {"distance_code_II", v.distance_odd},
          {"leakage", v.leakage},
          {"unitarity_defect", v.unitarity_defect}};
}

void synthesize_single(const RunConfig& cfg, Report& r) {
  const Device device = make_device(cfg);
  const Triplet t = triplet_of(cfg);
  const Edge target = target_of(cfg);
  const double phi = cfg.task.phi;
  const bool is_y = cfg.task.gate == "sy";
  PulseSequence seq;
  bool feasible = false;
  json timing;
  std::pair<int, int> block;
  if (is_y) {
    const SigmaYSynthesis s = conjugated_sigma_y(device, t, target, phi, options_of(cfg));
    seq = s.sequence;
    feasible = s.feasible;
    block = s.block;
    timing = {{"conjugator", timing_json(s.conjugator)}, {"rotation", timing_json(s.rotation)},
              {"conjugated_sign", s.conjugated_sign}};
  } else {
    const SigmaZSynthesis s = conjugated_sigma_z(device, t, target, phi, options_of(cfg));
    seq = s.sequence;
    feasible = s.feasible;
    block = s.block;
    timing = {{"outer", timing_json(s.outer)},
              {"conjugator", timing_json(s.inner.conjugator)},
              {"rotation", timing_json(s.inner.rotation)},
              {"conjugated_sign", s.conjugated_sign}};
  }
  const Operator target_block = block_rotation(is_y ? Axis::y : Axis::z, block, phi);
  const Operator u = compile(seq, device);
  const CodeVerification v = verify_on_codes(u, device.layout.n_physical, t, target_block);
  r.outputs["gate"] = cfg.task.gate;
  r.outputs["block_words"] = {block.first, block.second};
  r.outputs["sequence"] = sequence_json(seq);
  r.outputs["timing"] = timing;
  r.outputs["verification"] = verification_json(v);
  r.outputs["gate_count"] = seq.size();
  if (cfg.task.include_matrices) {
    r.outputs["matrices"] = {
        {"target", matrix_json(target_block)},
        {"code_I", matrix_json(restrict_to(u, embed(standard_codes().even, device.layout.n_physical, t)).block)},
        {"code_II", matrix_json(restrict_to(u, embed(standard_codes().odd, device.layout.n_physical, t)).block)}};
  }
  add_check(r, "timing_feasible", feasible, kExitInfeasible);
  add_check(r, "pulse_count", seq.size() == (is_y ? 3u : 5u));
  add_check(r, "distance_within_epsilon", v.distance() <= cfg.tolerances.epsilon_fidelity);
  add_check(r, "code_leakage", v.leakage <= kLeakTol);
  add_check(r, "unitary", v.unitarity_defect <= kUnitaryTol);
}

void synthesize_cz(const RunConfig& cfg, Report& r) {
  if (cfg.num_logical != 2) throw ConfigError("gate cz needs layout.num_logical = 2");
  const Device device = make_device(cfg);
  const LogicalRegister reg{device.layout, selected_encoding(cfg)};
  const ControlledZPlan plan = controlled_z(reg, device, options_of(cfg));

  const GateVerification ent = verify_logical_gate(plan.entangler.sequence, cz_target(), reg, device);
  Matrix predicted = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) predicted(k, k) = plan.entangler.predicted_phases[k];
  const double ent_distance = phase_aligned_distance(ent.logical, Operator(predicted));

  json phases = json::array();
  for (Complex p : ent.phases) phases.push_back(complex_json(p));
  json predicted_json = json::array();
  for (Complex p : plan.entangler.predicted_phases) predicted_json.push_back(complex_json(p));
  json corrections = json::array();
  for (const LocalRotation& c : plan.corrections) {
    corrections.push_back({{"logical_qubit", c.logical_qubit},
                           {"angle", c.angle},
                           {"sequence", sequence_json(c.synthesis.sequence)}});
  }
  r.outputs["gate"] = "cz";
  r.outputs["encoding"] = reg.encoding.label();
  r.outputs["entangler"] = {{"sequence", sequence_json(plan.entangler.sequence)},
                            {"bridging_target_edge", edge_json(plan.entangler.local_target)},
                            {"predicted_phases", predicted_json},
                            {"compiled_phases", phases},
                            {"distance_to_predicted", ent_distance},
                            {"leakage", ent.leakage}};
  r.outputs["core_pulse_count"] = plan.core_pulses;
  r.outputs["local_corrections"] = {{"alpha", plan.alpha}, {"beta", plan.beta}, {"rotations", corrections}};
  add_check(r, "timing_feasible", plan.feasible, kExitInfeasible);
  add_check(r, "core_pulse_count", plan.core_pulses == 5);
  add_check(r, "entangler_matches_prediction", ent_distance <= cfg.tolerances.epsilon_fidelity);
  if (cfg.task.local_corrections) {
    const GateVerification full = verify_logical_gate(plan.sequence, cz_target(), reg, device);
    r.outputs["sequence"] = sequence_json(plan.sequence);
    r.outputs["gate_count"] = plan.sequence.size();
    r.outputs["cz_distance"] = full.distance;
    r.outputs["logical_leakage"] = full.leakage;
    if (cfg.task.include_matrices) r.outputs["matrices"] = {{"logical", matrix_json(full.logical)}};
    add_check(r, "cz_distance_within_epsilon", full.distance <= cfg.tolerances.epsilon_fidelity);
    add_check(r, "logical_leakage", full.leakage <= cfg.tolerances.epsilon_fidelity);
  } else {
    // Up to local transformations only the entangling core is counted.
    r.outputs["sequence"] = sequence_json(plan.entangler.sequence);
    r.outputs["gate_count"] = plan.core_pulses;
    if (cfg.task.include_matrices) r.outputs["matrices"] = {{"logical", matrix_json(ent.logical)}};
  }
}

std::vector<Operator> closure_seeds(const RunConfig& cfg, const TripletHamiltonians& hams) {
  const CodeSpace& code = standard_codes().even;
  const std::string& seed = cfg.task.seed;
  std::vector<Operator> seeds;
  if (seed == "encoded") {
    const Edge target = target_of(cfg);
    std::vector<Edge> others;
    for (const Edge& e : local_edges()) {
      if (e != target) others.push_back(e);
    }
    const EncodedGenerator sx = encoded_sigma_x(hams, code, target);
    const EncodedGenerator sy = encoded_sigma_y(hams, code, others[0], others[1]);
    seeds.push_back(sx.matrix);
    seeds.emplace_back(Complex{0.0, -1.0} * sy.matrix.matrix(), OperatorKind::hermitian);
  } else if (seed == "qutrit") {
    const Subspace words(4, {1, 2, 3});
    for (const Edge& e : local_edges()) seeds.push_back(restrict_to(hams.in_code(e, code), words).block);
  } else if (seed == "code") {
    for (const Edge& e : local_edges()) seeds.push_back(hams.in_code(e, code));
  } else {
    for (const Edge& e : local_edges()) seeds.push_back(hams.edge(e));
  }
  return seeds;
}

json support_json(const Operator& g) {
  json words = json::array();
  for (int k = 0; k < g.dim(); ++k) {
    if (g.matrix().row(k).cwiseAbs().maxCoeff() > 1e-10 || g.matrix().col(k).cwiseAbs().maxCoeff() > 1e-10) {
      words.push_back(k);
    }
  }
  return words;
}

}  // namespace

void Report::fail(int code) { exit_code = std::max(exit_code, code); }

json Report::to_json() const {
  return {{"schema_version", kSchemaVersion}, {"task", task},       {"inputs", inputs},
          {"outputs", outputs},               {"checks", checks},   {"warnings", warnings},
          {"pass", pass()},                   {"exit_code", exit_code}, {"wall_time_s", wall_time_s}};
}

Report cmd_validate(const RunConfig& cfg) {
  Report r = start_report("validate", cfg);
  const Device device = make_device(cfg);
  const Operator z2 = kron(pauli(Axis::z), pauli(Axis::z));
  const Operator x2 = kron(pauli(Axis::x), pauli(Axis::x));
  bool hermitian = true, parity = true, flip = true;
  json edges = json::array();
  for (const auto& [edge, c] : device.couplings.values()) {
    // The register-wide parity and flip operators factor over the edge, so the
    // two-qubit commutators decide the full ones.
    const Operator h = build_pair_hamiltonian(2, 1, 2, c);
    const double pz = frobenius_norm(commutator(h, z2));
    const double px = frobenius_norm(commutator(h, x2));
    const bool cross = c.has_cross_terms();
    const bool flip_ok = cross ? px > kAlgebraTol : px <= kAlgebraTol;
    hermitian = hermitian && h.is_hermitian();
    parity = parity && pz <= kAlgebraTol;
    flip = flip && flip_ok;
    const DerivedCouplings d = derive_couplings(c);
    edges.push_back({{"edge", edge_json(edge)},
                     {"in_layout", device.layout.has_edge(edge)},
                     {"derived", {{"js", d.js}, {"ja", d.ja}, {"ks", d.ks}, {"ka", d.ka},
                                  {"jt_s", complex_json(d.jt_s)}, {"jt_a", complex_json(d.jt_a)}}},
                     {"parity_commutator", pz},
                     {"flip_commutator", px},
                     {"cross_terms", cross}});
    if (!device.layout.has_edge(edge)) r.warnings.push_back("edge " + edge.str() + " is not part of the layout");
  }
  r.outputs["edges"] = edges;

  if (device.layout.n_physical <= 6) {
    const Operator total = total_hamiltonian(device.layout.n_physical, device.couplings);
    const CommutantPair comm = commutant_operators(device.layout.n_physical);
    r.outputs["register"] = {{"parity_commutator", frobenius_norm(commutator(total, comm.parity_op))},
                             {"flip_commutator", frobenius_norm(commutator(total, comm.flip_op))}};
  }

  bool pattern = true, leakage = true, identical = true;
  json triplets = json::array();
  for (const Triplet& t : device.layout.logical_triplets) {
    const auto couplings = device.couplings.triplet(t);
    const TripletHamiltonians hams = TripletHamiltonians::build(couplings);
    double worst = 0.0;
    for (const Edge& e : local_edges()) {
      try {
        const Operator even = hams.in_code(e, standard_codes().even);
        const Operator odd = hams.in_code(e, standard_codes().odd);
        const auto& raw = couplings[edge_slot(e)];
        worst = std::max({worst, max_abs_entry(even - expected_code_matrix(e, raw, false)),
                          max_abs_entry(odd - expected_code_matrix(e, raw, true))});
        if (!raw.has_cross_terms()) identical = identical && max_abs_entry(even - odd) <= kAlgebraTol;
      } catch (const LeakageError& err) {
        leakage = false;
        r.warnings.push_back(err.what());
      }
      const CodeBasisCouplings cb = code_basis_couplings(couplings[edge_slot(e)]);
      if (std::abs(cb.antisym) == 0.0) {
        r.warnings.push_back("edge " + lift_edge(t, e).str() + ": antisymmetric coupling is zero (degenerate branch)");
      } else if (std::abs(cb.antisym) == std::abs(cb.sym)) {
        r.warnings.push_back("edge " + lift_edge(t, e).str() + ": |Ja| = |Js|, timing conditions cannot be met");
      }
    }
    pattern = pattern && worst <= kAlgebraTol;
    triplets.push_back({{"triplet", t}, {"pattern_residual", worst}});
  }
  r.outputs["triplets"] = triplets;

  const CommutantPair c3 = commutant_operators(3);
  const Operator zp = in_permuted_basis(c3.parity_op);
  const Operator xp = in_permuted_basis(c3.flip_op);
  Matrix zb = Matrix::Zero(8, 8), xb = Matrix::Zero(8, 8);
  for (int k = 0; k < 4; ++k) {
    zb.block(2 * k, 2 * k, 2, 2) = pauli(Axis::z).matrix();
    xb.block(2 * k, 2 * k, 2, 2) = pauli(Axis::x).matrix();
  }
  const bool blocks = max_abs_entry(zp - Operator(zb)) == 0.0 && max_abs_entry(xp - Operator(xb)) == 0.0;
  if (device.couplings.has_cross_terms()) {
    r.warnings.push_back("cross terms present: the flip operator is not in the commutant");
  }

  add_check(r, "hermitian", hermitian);
  add_check(r, "parity_commutation", parity);
  add_check(r, "flip_commutation_matches_cross_terms", flip);
  add_check(r, "code_pattern", pattern);
  add_check(r, "code_leakage", leakage);
  add_check(r, "codes_identical_without_cross_terms", identical);
  add_check(r, "permuted_block_structure", blocks);
  return r;
}

Report cmd_synthesize(const RunConfig& cfg) {
  Report r = start_report("synthesize", cfg);
  if (cfg.task.gate == "cz") {
    synthesize_cz(cfg, r);
  } else {
    synthesize_single(cfg, r);
  }
  return r;
}

Report cmd_closure(const RunConfig& cfg) {
  Report r = start_report("closure", cfg);
  const Device device = make_device(cfg);
  const TripletHamiltonians hams = triplet_hams(cfg, device);
  json scan = json::array();
  for (const CrossTermRow& row : cross_term_scan(hams, standard_codes().even)) {
    scan.push_back({{"pair", {edge_json(row.pair_a), edge_json(row.pair_b)}},
                    {"target_words", {row.target_words.first, row.target_words.second}},
                    {"pure", row.pure},
                    {"off_block_norm", row.off_block_norm},
                    {"coefficient", complex_json(row.coefficient)}});
  }
  r.outputs["cross_term_scan"] = scan;
  r.outputs["seed"] = cfg.task.seed;
  std::vector<Operator> seeds;
  try {
    seeds = closure_seeds(cfg, hams);
  } catch (const BlockSupportError& e) {
    r.outputs["error"] = e.what();
    add_check(r, "seed_construction", false);
    return r;
  }
  try {
    const LieBasis basis = lie_closure(seeds, cfg.task.max_dim);
    json supports = json::array();
    for (const Operator& g : basis.generators) supports.push_back(support_json(g));
    r.outputs["dimension"] = basis.dim();
    r.outputs["orthonormality_residual"] = basis.orthonormality_residual();
    r.outputs["closure_residual"] = basis.closure_residual();
    r.outputs["supports"] = supports;
    if (cfg.task.include_matrices) {
      json gens = json::array();
      for (const Operator& g : basis.generators) gens.push_back(matrix_json(g));
      r.outputs["matrices"] = {{"generators", gens}};
    }
    add_check(r, "orthonormal", basis.orthonormality_residual() <= 1e-10);
    add_check(r, "closed", basis.closure_residual() <= kLieIndependenceTol);
    if (cfg.task.seed == "encoded") add_check(r, "dimension_su2", basis.dim() == 3);
    if (cfg.task.seed == "qutrit") add_check(r, "dimension_su3", basis.dim() == 8);
  } catch (const ClosureOverflow& e) {
    r.outputs["error"] = e.what();
    add_check(r, "within_max_dim", false, kExitResource);
  }
  return r;
}

Report cmd_bhc_study(const RunConfig& cfg) {
  Report r = start_report("bhc", cfg);
  const Device device = make_device(cfg);
  const TripletHamiltonians hams = triplet_hams(cfg, device);
  const CodeSpace& code = standard_codes().even;
  const Operator a = hams.in_code(Edge(1, 3), code);
  const Operator b = hams.in_code(Edge(2, 3), code);
  const Operator target = bhc_target(a, b);

  std::vector<std::int64_t> ns = cfg.task.bhc_n;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  json rows = json::array();
  double prev_error = 0.0;
  std::int64_t prev_n = 0;
  double last_error = 0.0;
  for (std::int64_t n : ns) {
    const Operator u = bhc_approximation(a, b, n);
    const double err = aligned_spectral_error(u, target);
    json row = {{"n", n},
                {"pulses", bhc_pulse_count(n)},
                {"spectral_error", err},
                {"distance", phase_aligned_distance(u, target)}};
    if (prev_n > 0 && err > 0.0 && prev_error > 0.0) {
      row["log_slope"] = std::log(err / prev_error) / std::log(static_cast<double>(n) / prev_n);
    }
    rows.push_back(row);
    prev_error = err;
    prev_n = n;
    last_error = err;
  }
  r.outputs["bhc"] = rows;

  // The same target via one conjugation: exp([A,B]) = exp(−iσʸφ) on the block.
  const auto block = symmetric_block(Edge(1, 2));
  const Complex coef = hs_inner(block_pauli(Axis::y, block.first, block.second), commutator(a, b)) / 2.0;
  const double phi = (Complex{0.0, 1.0} * coef).real();
  const Triplet t = triplet_of(cfg);
  const SigmaYSynthesis s = conjugated_sigma_y(device, t, Edge(1, 2), phi, options_of(cfg));
  const Operator u = compile(s.sequence, device);
  const Operator got = restrict_to(u, embed(code, device.layout.n_physical, t)).block;
  const double conj_error = aligned_spectral_error(got, target);
  r.outputs["conjugation"] = {{"phi", phi},
                              {"pulses", s.sequence.size()},
                              {"spectral_error", conj_error},
                              {"distance", phase_aligned_distance(got, target)},
                              {"feasible", s.feasible}};
  add_check(r, "timing_feasible", s.feasible, kExitInfeasible);
  add_check(r, "conjugation_beats_bhc", conj_error < last_error);
  return r;
}

Report cmd_report(const RunConfig& cfg) {
  Report r = start_report("report", cfg);
  auto absorb = [&](const std::string& key, Report sub) {
    r.outputs[key] = {{"outputs", sub.outputs}, {"checks", sub.checks}, {"exit_code", sub.exit_code}};
    for (auto& w : sub.warnings) r.warnings.push_back(key + ": " + w);
    r.fail(sub.exit_code);
  };
  absorb("validate", cmd_validate(cfg));
  std::vector<std::string> gates{"sy", "sz"};
  if (cfg.num_logical == 2) gates.push_back("cz");
  for (const std::string& g : gates) {
    RunConfig c = cfg;
    c.task.gate = g;
    absorb("synthesize_" + g, cmd_synthesize(c));
  }
  for (const char* seed : {"encoded", "qutrit"}) {
    RunConfig c = cfg;
    c.task.seed = seed;
    absorb(std::string("closure_") + seed, cmd_closure(c));
  }
  absorb("bhc", cmd_bhc_study(cfg));
  if (cfg.task.include_matrices) {
    const Device device = make_device(cfg);
    const TripletHamiltonians hams = triplet_hams(cfg, device);
    json code_matrices;
    for (const Edge& e : local_edges()) {
      code_matrices[e.str()] = {{"code_I", matrix_json(hams.in_code(e, standard_codes().even))},
                                {"code_II", matrix_json(hams.in_code(e, standard_codes().odd))}};
    }
    r.outputs["code_matrices"] = code_matrices;
  }
  return r;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  if (report.task == "bhc" && report.outputs.contains("bhc")) {
    os << "method,n,pulses,spectral_error,distance\n";
    os << std::setprecision(17);
    for (const auto& row : report.outputs["bhc"]) {
      os << "bhc," << row["n"].get<std::int64_t>() << ',' << row["pulses"].get<std::int64_t>() << ','
         << row["spectral_error"].get<double>() << ',' << row["distance"].get<double>() << '\n';
    }
    const auto& c = report.outputs["conjugation"];
    os << "conjugation,," << c["pulses"].get<std::int64_t>() << ',' << c["spectral_error"].get<double>() << ','
       << c["distance"].get<double>() << '\n';
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  json body = report.to_json();
  body.erase("inputs");
  flatten(body, "", rows);
  os << "key,value\n";
  for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encoded gate synthesis for anisotropic exchange couplings", "aniso"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  app.add_option("--config", config_path, "JSON config file (default: $ANISO_CONFIG)");
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* validate = app.add_subcommand("validate", "Check Hamiltonian symmetries and code-space structure");
  auto* synth = app.add_subcommand("synthesize", "Synthesize and verify an encoded gate");
  std::string gate;
  double phi = 0.0;
  synth->add_option("--gate", gate, "sy, sz or cz")->check(CLI::IsMember({"sy", "sz", "cz"}));
  auto* phi_opt = synth->add_option("--phi", phi, "Rotation angle in radians");
  bool up_to_local = false;
  synth->add_flag("--up-to-local", up_to_local, "Report cz up to local transformations (entangling core only)");
  auto* closure = app.add_subcommand("closure", "Lie closure of a seed set");
  std::string seed;
  int max_dim = 0;
  closure->add_option("--seed", seed, "encoded, qutrit, code or physical")
      ->check(CLI::IsMember({"encoded", "qutrit", "code", "physical"}));
  closure->add_option("--max-dim", max_dim, "Abort when the algebra exceeds this dimension");
  auto* bhc = app.add_subcommand("bhc", "Group-commutator convergence study");
  std::vector<std::int64_t> n_list;
  bhc->add_option("--n", n_list, "Repetition counts")->delimiter(',');
  auto* report = app.add_subcommand("report", "Run every study and emit one report");
  bool include_matrices = false;
  report->add_flag("--include-matrices", include_matrices, "Embed matrices as [re, im] pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  const auto start = std::chrono::steady_clock::now();
  Report result;
  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv("ANISO_CONFIG")) config_path = env;
    }
    RunConfig cfg = config_path.empty() ? parse_config(json::object()) : load_config(config_path);
    if (!gate.empty()) cfg.task.gate = gate;
    if (*phi_opt) cfg.task.phi = phi;
    if (up_to_local) cfg.task.local_corrections = false;
    if (!seed.empty()) cfg.task.seed = seed;
    if (max_dim > 0) cfg.task.max_dim = max_dim;
    if (!n_list.empty()) cfg.task.bhc_n = n_list;
    if (include_matrices) cfg.task.include_matrices = true;
    // Re-run validation on the merged settings.
    cfg = parse_config(to_json(cfg));

    if (*validate) {
      result = cmd_validate(cfg);
    } else if (*synth) {
      result = cmd_synthesize(cfg);
    } else if (*closure) {
      result = cmd_closure(cfg);
    } else if (*bhc) {
      result = cmd_bhc_study(cfg);
    } else if (*report) {
      result = cmd_report(cfg);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TimingInputError& e) {
    result.task = app.get_subcommands().front()->get_name();
    result.outputs["error"] = e.what();
    result.fail(kExitInfeasible);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = format == "csv" ? report_to_csv(result) : result.to_json().dump(2) + "\n";
  try {
    if (out_path.empty()) {
      out << text;
    } else {
      write_atomic(out_path, text);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  if (!result.pass()) err << result.task << ": exit code " << result.exit_code << '\n';
  return result.exit_code;
}

}  // namespace aniso::cli
