#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace aniso {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for exact algebraic identities (commutators, Hermiticity, block support).
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance for unitarity of compiled evolutions.
inline constexpr double kUnitaryTol = 1e-10;

enum class OperatorKind { general, hermitian, unitary };

enum class Axis { x, y, z };

/// Dense complex square matrix. The kind is an advisory label; the
/// is_hermitian/is_unitary predicates check the entries on demand.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix entries, OperatorKind kind = OperatorKind::general);

  static Operator identity(int dim);
  static Operator zero(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  OperatorKind kind() const { return kind_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  bool is_hermitian(double tol = kAlgebraTol) const;
  bool is_unitary(double tol = kUnitaryTol) const;

  Operator adjoint() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scale);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Complex scale, Operator op) { return op *= scale; }
  friend Operator operator*(Operator op, Complex scale) { return op *= scale; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  Matrix entries_;
  OperatorKind kind_ = OperatorKind::general;
};

/// Subspace spanned by computational-basis vectors of an ambient space.
class Subspace {
 public:
  Subspace(int ambient_dim, std::vector<int> basis_states);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<int>& basis() const { return basis_; }

 private:
  int ambient_dim_;
  std::vector<int> basis_;
};

struct Restriction {
  Operator block;
  /// Frobenius norm of (I - P) A P: amplitude carried out of the subspace.
  double leakage = 0.0;
};

Operator pauli(Axis axis);

/// I ⊗ ... ⊗ σ^axis ⊗ ... ⊗ I with the Pauli factor on `site` (1-based, site 1
/// is the most significant bit of the basis index).
Operator pauli_on(int n, int site, Axis axis);

Operator kron(const Operator& lhs, const Operator& rhs);

/// AB - BA.
Operator commutator(const Operator& a, const Operator& b);

/// exp(-iHt) by Hermitian eigendecomposition.
Operator evolve(const Operator& hamiltonian, double t);

Restriction restrict_to(const Operator& op, const Subspace& subspace);

/// tr(A†B).
Complex hs_inner(const Operator& a, const Operator& b);

double frobenius_norm(const Operator& op);
double max_abs_entry(const Operator& op);
/// Largest singular value.
double spectral_norm(const Operator& op);

/// min over φ of ‖A − e^{iφ}B‖_F, without any unitarity requirement.
double phase_aligned_distance(const Operator& a, const Operator& b);

/// min over φ of ‖U − e^{iφ}V‖_F for unitaries; equals sqrt(2d − 2|tr(U†V)|).
/// Throws std::domain_error when either input is not unitary within `unitary_tol`.
double distance_up_to_phase(const Operator& u, const Operator& v, double unitary_tol = kUnitaryTol);

}  // namespace aniso
