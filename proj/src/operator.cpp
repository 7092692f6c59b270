#include "aniso/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace aniso {

namespace {

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Operator::Operator(Matrix entries, OperatorKind kind) : entries_(std::move(entries)), kind_(kind) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("Operator: matrix must be square");
  }
}

Operator Operator::identity(int dim) {
  return Operator(Matrix::Identity(dim, dim), OperatorKind::unitary);
}

Operator Operator::zero(int dim) { return Operator(Matrix::Zero(dim, dim)); }

bool Operator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_unitary(double tol) const {
  const Matrix defect = entries_.adjoint() * entries_ - Matrix::Identity(dim(), dim());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::adjoint() const {
  return Operator(entries_.adjoint(), kind_);
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_dim(*this, other, "operator+");
  entries_ += other.entries_;
  kind_ = (kind_ == OperatorKind::hermitian && other.kind_ == OperatorKind::hermitian)
              ? OperatorKind::hermitian
              : OperatorKind::general;
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_dim(*this, other, "operator-");
  entries_ -= other.entries_;
  kind_ = (kind_ == OperatorKind::hermitian && other.kind_ == OperatorKind::hermitian)
              ? OperatorKind::hermitian
              : OperatorKind::general;
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  entries_ *= scale;
  const bool real_scale = scale.imag() == 0.0;
  const bool unit_scale = std::abs(std::abs(scale) - 1.0) == 0.0;
  if (!(kind_ == OperatorKind::hermitian && real_scale) &&
      !(kind_ == OperatorKind::unitary && unit_scale)) {
    kind_ = OperatorKind::general;
  }
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const OperatorKind kind = (lhs.kind() == OperatorKind::unitary && rhs.kind() == OperatorKind::unitary)
                                ? OperatorKind::unitary
                                : OperatorKind::general;
  return Operator(lhs.matrix() * rhs.matrix(), kind);
}

Subspace::Subspace(int ambient_dim, std::vector<int> basis_states)
    : ambient_dim_(ambient_dim), basis_(std::move(basis_states)) {
  if (ambient_dim_ <= 0) throw std::invalid_argument("Subspace: ambient dimension must be positive");
  std::unordered_set<int> seen;
  for (int index : basis_) {
    if (index < 0 || index >= ambient_dim_) {
      throw std::invalid_argument("Subspace: basis index " + std::to_string(index) + " out of range");
    }
    if (!seen.insert(index).second) {
      throw std::invalid_argument("Subspace: duplicate basis index " + std::to_string(index));
    }
  }
}

Operator pauli(Axis axis) {
  Matrix m(2, 2);
  const Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::x: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::y: m << 0.0, -i, i, 0.0; break;
    case Axis::z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return Operator(m, OperatorKind::hermitian);
}

Operator kron(const Operator& lhs, const Operator& rhs) {
  const auto& a = lhs.matrix();
  const auto& b = rhs.matrix();
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  const OperatorKind kind = lhs.kind() == rhs.kind() ? lhs.kind() : OperatorKind::general;
  return Operator(std::move(out), kind);
}

Operator pauli_on(int n, int site, Axis axis) {
  if (n < 1) throw std::invalid_argument("pauli_on: qubit count must be positive");
  if (site < 1 || site > n) {
    throw std::invalid_argument("pauli_on: site " + std::to_string(site) + " outside 1.." + std::to_string(n));
  }
  // Diagonal/antidiagonal structure lets us fill entries directly.
  const int dim = 1 << n;
  const int bit = n - site;
  const Complex i{0.0, 1.0};
  Matrix m = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int b = (col >> bit) & 1;
    switch (axis) {
      case Axis::x: m(col ^ (1 << bit), col) = 1.0; break;
      case Axis::y: m(col ^ (1 << bit), col) = b == 0 ? i : -i; break;
      case Axis::z: m(col, col) = b == 0 ? 1.0 : -1.0; break;
    }
  }
  return Operator(std::move(m), OperatorKind::hermitian);
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "commutator");
  return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Operator evolve(const Operator& hamiltonian, double t) {
  if (!hamiltonian.is_hermitian(kAlgebraTol)) {
    throw std::domain_error("evolve: generator is not Hermitian within tolerance");
  }
  // Symmetrize so the solver sees an exactly self-adjoint input.
  const Matrix h = 0.5 * (hamiltonian.matrix() + hamiltonian.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("evolve: eigendecomposition failed");
  const Eigen::VectorXd& energies = solver.eigenvalues();
  Eigen::VectorXcd phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    phases(k) = std::polar(1.0, -energies(k) * t);
  }
  const Matrix& vecs = solver.eigenvectors();
  return Operator(vecs * phases.asDiagonal() * vecs.adjoint(), OperatorKind::unitary);
}

Restriction restrict_to(const Operator& op, const Subspace& subspace) {
  if (op.dim() != subspace.ambient_dim()) {
    throw std::invalid_argument("restrict_to: operator dim does not match subspace ambient dim");
  }
  const auto& basis = subspace.basis();
  const int k = subspace.dim();
  Matrix block(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) block(r, c) = op(basis[r], basis[c]);
  }
  std::vector<bool> inside(op.dim(), false);
  for (int index : basis) inside[index] = true;
  double leak_sq = 0.0;
  for (int c : basis) {
    for (int r = 0; r < op.dim(); ++r) {
      if (!inside[r]) leak_sq += std::norm(op(r, c));
    }
  }
  return {Operator(std::move(block)), std::sqrt(leak_sq)};
}

Complex hs_inner(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "hs_inner");
  return (a.matrix().adjoint() * b.matrix()).trace();
}

double frobenius_norm(const Operator& op) { return op.matrix().norm(); }

double max_abs_entry(const Operator& op) {
  return op.dim() == 0 ? 0.0 : op.matrix().cwiseAbs().maxCoeff();
}

double spectral_norm(const Operator& op) {
  if (op.dim() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(op.matrix());
  return svd.singularValues()(0);
}

double phase_aligned_distance(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "phase_aligned_distance");
  const Complex overlap = hs_inner(b, a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return (a.matrix() - phase * b.matrix()).norm();
}

double distance_up_to_phase(const Operator& u, const Operator& v, double unitary_tol) {
  require_same_dim(u, v, "distance_up_to_phase");
  if (!u.is_unitary(unitary_tol) || !v.is_unitary(unitary_tol)) {
    throw std::domain_error("distance_up_to_phase: inputs must be unitary");
  }
  // Direct form; sqrt(2d - 2|tr|) loses ~8 digits to cancellation near zero.
  return phase_aligned_distance(u, v);
}

}  // namespace aniso
