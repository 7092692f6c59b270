#include "aniso/lie.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

namespace {

double real_inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace().real(); }

// Removes the span of `basis` from v (two passes) and returns the remainder.
Matrix orthogonalize(const std::vector<Operator>& basis, Matrix v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Operator& b : basis) v -= real_inner(b.matrix(), v) * b.matrix();
  }
  return v;
}

Edge third_edge(Edge a, Edge b) {
  for (const Edge& e : local_edges()) {
    if (e != a && e != b) return e;
  }
  throw std::invalid_argument("third_edge: edges must be distinct");
}

EncodedGenerator fit_block(EncodedLabel label, Axis axis, const Operator& m, std::pair<int, int> block, double tol,
                           const std::string& context) {
  const Operator unit = block_pauli(axis, block.first, block.second, m.dim());
  const Complex coef = hs_inner(unit, m) / 2.0;
  const double off = frobenius_norm(m - coef * unit);
  // Tolerance scaled by the size of the commutator so large couplings are treated alike.
  const double scale = std::max(1.0, frobenius_norm(m));
  if (off > tol * scale) {
    throw BlockSupportError(context + ": result is not confined to words (" + std::to_string(block.first) + "," +
                                std::to_string(block.second) + "), off-block norm " + std::to_string(off),
                            off);
  }
  return {label, block, m, coef, off};
}

}  // namespace

double LieBasis::orthonormality_residual() const {
  double worst = 0.0;
  for (int a = 0; a < dim(); ++a) {
    for (int b = 0; b < dim(); ++b) {
      const double g = real_inner(generators[a].matrix(), generators[b].matrix());
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double LieBasis::closure_residual() const {
  double worst = 0.0;
  for (int a = 0; a < dim(); ++a) {
    for (int b = a + 1; b < dim(); ++b) {
      const Matrix c = commutator(generators[a], generators[b]).matrix();
      worst = std::max(worst, orthogonalize(generators, c).norm());
    }
  }
  return worst;
}

LieBasis lie_closure(const std::vector<Operator>& seeds, int max_dim, double tol) {
  if (max_dim < 1) throw std::invalid_argument("lie_closure: max_dim must be positive");
  LieBasis basis;
  if (seeds.empty()) return basis;
  const int d = seeds.front().dim();
  auto try_add = [&](const Matrix& candidate) {
    const double norm = candidate.norm();
    if (norm <= tol) return false;
    Matrix v = orthogonalize(basis.generators, candidate);
    const double rest = v.norm();
    if (rest <= tol * norm) return false;
    if (basis.dim() + 1 > max_dim) throw ClosureOverflow(max_dim);
    basis.generators.emplace_back(v / rest);
    return true;
  };
  const Complex i{0.0, 1.0};
  for (const Operator& s : seeds) {
    if (s.dim() != d) throw std::invalid_argument("lie_closure: seeds have unequal dimensions");
    if (!s.is_hermitian(kAlgebraTol)) throw std::invalid_argument("lie_closure: seeds must be Hermitian");
    try_add(i * s.matrix());
  }
  // Breadth-first sweeps: each new element is commuted with everything before it.
  int done = 0;
  while (done < basis.dim()) {
    const int level_end = basis.dim();
    for (int a = done; a < level_end; ++a) {
      for (int b = 0; b < a; ++b) {
        try_add(basis.generators[b].matrix() * basis.generators[a].matrix() -
                basis.generators[a].matrix() * basis.generators[b].matrix());
      }
    }
    done = level_end;
  }
  return basis;
}

Operator block_pauli(Axis axis, int p, int q, int dim) {
  if (p < 0 || q < 0 || p >= dim || q >= dim || p == q) throw std::invalid_argument("block_pauli: invalid block");
  const Operator s = pauli(axis);
  Matrix m = Matrix::Zero(dim, dim);
  const int idx[2] = {p, q};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(idx[r], idx[c]) = s(r, c);
  }
  return Operator(std::move(m), OperatorKind::hermitian);
}

std::string to_string(EncodedLabel label) {
  switch (label) {
    case EncodedLabel::sx: return "sx";
    case EncodedLabel::sy: return "sy";
    case EncodedLabel::sz: return "sz";
  }
  return "?";
}

EncodedGenerator encoded_sigma_y(const TripletHamiltonians& hams, const CodeSpace& code, Edge pair_a, Edge pair_b,
                                 double tol) {
  if (pair_a == pair_b) throw std::invalid_argument("encoded_sigma_y: the two edges must differ");
  const auto block = symmetric_block(third_edge(pair_a, pair_b));
  const Operator c = commutator(hams.in_code(pair_a, code), hams.in_code(pair_b, code));
  return fit_block(EncodedLabel::sy, Axis::y, c, block, tol,
                   "encoded_sigma_y[" + pair_a.str() + "," + pair_b.str() + "]");
}

EncodedGenerator encoded_sigma_z(const TripletHamiltonians& hams, const CodeSpace& code, Edge pair,
                                 const EncodedGenerator& sigma_y, double tol) {
  if (symmetric_block(pair) != sigma_y.target_words) {
    throw BlockSupportError("encoded_sigma_z: edge " + pair.str() + " does not act symmetrically on the sigma_y block",
                            0.0);
  }
  const Operator unit_y = block_pauli(Axis::y, sigma_y.target_words.first, sigma_y.target_words.second);
  const Operator c = commutator(hams.in_code(pair, code), unit_y);
  return fit_block(EncodedLabel::sz, Axis::z, c, sigma_y.target_words, tol, "encoded_sigma_z[" + pair.str() + "]");
}

EncodedGenerator encoded_sigma_x(const TripletHamiltonians& hams, const CodeSpace& code, Edge pair) {
  const auto block = symmetric_block(pair);
  const Operator h = hams.in_code(pair, code);
  Matrix sym = Matrix::Zero(4, 4);
  sym(block.first, block.second) = h(block.first, block.second);
  sym(block.second, block.first) = h(block.second, block.first);
  const Operator unit = block_pauli(Axis::x, block.first, block.second);
  const Complex coef = hs_inner(unit, Operator(sym)) / 2.0;
  return {EncodedLabel::sx, block, Operator(sym, OperatorKind::hermitian), coef,
          frobenius_norm(Operator(sym) - coef * unit)};
}

std::vector<CrossTermRow> cross_term_scan(const TripletHamiltonians& hams, const CodeSpace& code, double tol) {
  const std::array<std::pair<Edge, Edge>, 3> pairs{{{Edge(1, 2), Edge(1, 3)},
                                                    {Edge(1, 2), Edge(2, 3)},
                                                    {Edge(1, 3), Edge(2, 3)}}};
  std::vector<CrossTermRow> rows;
  for (const auto& [a, b] : pairs) {
    CrossTermRow row;
    row.pair_a = a;
    row.pair_b = b;
    row.target_words = symmetric_block(third_edge(a, b));
    try {
      const EncodedGenerator g = encoded_sigma_y(hams, code, a, b, tol);
      row.pure = true;
      row.off_block_norm = g.off_block_norm;
      row.coefficient = g.coefficient;
    } catch (const BlockSupportError& e) {
      row.pure = false;
      row.off_block_norm = e.off_block_norm;
      const Operator c = commutator(hams.in_code(a, code), hams.in_code(b, code));
      row.coefficient = hs_inner(block_pauli(Axis::y, row.target_words.first, row.target_words.second), c) / 2.0;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aniso
