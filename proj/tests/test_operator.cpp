#include <gtest/gtest.h>

#include <algorithm>


#include "aniso/operator.hpp"
#include "test_support.hpp"

using namespace aniso;
using aniso::testing::random_hermitian;
using aniso::testing::random_matrix;
using aniso::testing::series_exp;

namespace {

const Complex I{0.0, 1.0};

// Kronecker product written out entry by entry.
Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST(Pauli, Algebra) {
  const Operator x = pauli(Axis::x), y = pauli(Axis::y), z = pauli(Axis::z);
  EXPECT_LE(max_abs_entry(x * y - I * z), 1e-15);
  EXPECT_LE(max_abs_entry(y * z - I * x), 1e-15);
  EXPECT_LE(max_abs_entry(z * x - I * y), 1e-15);
  for (const Operator& p : {x, y, z}) {
    EXPECT_TRUE(p.is_hermitian());
    EXPECT_TRUE(p.is_unitary());
    EXPECT_LE(max_abs_entry(p * p - Operator::identity(2)), 1e-15);
  }
}

TEST(Pauli, OnSiteMatchesKroneckerChain) {
  for (int n = 1; n <= 4; ++n) {
    for (int site = 1; site <= n; ++site) {
      for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        Matrix expected = Matrix::Identity(1, 1);
        for (int k = 1; k <= n; ++k) {
          expected = kron_oracle(expected, k == site ? pauli(axis).matrix() : Matrix::Identity(2, 2));
        }
        EXPECT_EQ((pauli_on(n, site, axis).matrix() - expected).norm(), 0.0) << n << " " << site;
      }
    }
  }
}

TEST(Pauli, SiteOneIsMostSignificantBit) {
  // σᶻ on site 1 of three qubits is −1 exactly on states with the top bit set.
  const Operator z1 = pauli_on(3, 1, Axis::z);
  for (int s = 0; s < 8; ++s) EXPECT_EQ(z1(s, s).real(), (s & 4) ? -1.0 : 1.0);
}

TEST(Pauli, RejectsBadSite) {
  EXPECT_THROW(pauli_on(3, 0, Axis::x), std::invalid_argument);
  EXPECT_THROW(pauli_on(3, 4, Axis::x), std::invalid_argument);
}

TEST(Kron, MatchesOracle) {
  std::mt19937_64 rng(7);
  const Matrix a = random_matrix(rng, 2), b = random_matrix(rng, 4);
  EXPECT_LE((kron(Operator(a), Operator(b)).matrix() - kron_oracle(a, b)).norm(), 1e-14);
}

TEST(Evolve, MatchesPowerSeries) {
  std::mt19937_64 rng(11);
  for (int dim : {2, 4, 8, 16}) {
    const Operator h = random_hermitian(rng, dim);
    for (double t : {0.0, 0.3, -1.7, 5.0}) {
      const Operator u = evolve(h, t);
      EXPECT_LE((u.matrix() - series_exp(-I * t * h.matrix())).norm(), 1e-10) << dim << " " << t;
      EXPECT_TRUE(u.is_unitary());
    }
  }
}

TEST(Evolve, GroupProperty) {
  std::mt19937_64 rng(3);
  const Operator h = random_hermitian(rng, 8);
  EXPECT_LE(max_abs_entry(evolve(h, 0.4) * evolve(h, 0.9) - evolve(h, 1.3)), 1e-12);
  EXPECT_LE(max_abs_entry(evolve(h, 0.4) * evolve(h, -0.4) - Operator::identity(8)), 1e-12);
}

TEST(Evolve, RejectsNonHermitian) {
  std::mt19937_64 rng(5);
  EXPECT_THROW(evolve(Operator(random_matrix(rng, 4)), 1.0), std::domain_error);
}

TEST(Commutator, Antisymmetric) {
  std::mt19937_64 rng(13);
  const Operator a = random_hermitian(rng, 4), b = random_hermitian(rng, 4);
  EXPECT_LE(max_abs_entry(commutator(a, b) + commutator(b, a)), 1e-12);
  // i[A,B] is Hermitian for Hermitian A, B.
  EXPECT_TRUE((I * commutator(a, b)).is_hermitian());
}

TEST(Restrict, BlockAndLeakage) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  m(2, 0) = 3.0;  // carries |0⟩ out of span{|0⟩,|1⟩}
  const Restriction r = restrict_to(Operator(m), Subspace(4, {0, 1}));
  EXPECT_EQ(r.block(0, 0), Complex(1.0));
  EXPECT_EQ(r.block(1, 1), Complex(2.0));
  EXPECT_DOUBLE_EQ(r.leakage, 3.0);
  EXPECT_THROW(Subspace(4, {0, 4}), std::invalid_argument);
}

TEST(Distance, PhaseInvariance) {
  std::mt19937_64 rng(17);
  const Operator u = evolve(random_hermitian(rng, 4), 1.0);
  const Operator v = std::exp(I * 0.77) * u;
  EXPECT_LE(distance_up_to_phase(u, v), 1e-7);
  EXPECT_LE(phase_aligned_distance(u, v), 1e-12);
  // Orthogonal-trace unitaries are at distance sqrt(2d).
  EXPECT_NEAR(distance_up_to_phase(pauli(Axis::x), pauli(Axis::z)), 2.0, 1e-12);
  EXPECT_THROW(distance_up_to_phase(Operator(Matrix::Zero(2, 2)), pauli(Axis::x)), std::domain_error);
}

TEST(Distance, ClosedFormAgrees) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator u = evolve(random_hermitian(rng, 4), 1.0), v = evolve(random_hermitian(rng, 4), 1.0);
    const double closed = std::sqrt(std::max(0.0, 8.0 - 2.0 * std::abs(hs_inner(u, v))));
    EXPECT_NEAR(distance_up_to_phase(u, v), closed, 1e-10);
  }
}

TEST(Norms, SpectralBelowFrobenius) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Operator a(random_matrix(rng, 6));
    EXPECT_LE(spectral_norm(a), frobenius_norm(a) + 1e-12);
    EXPECT_GE(spectral_norm(a), frobenius_norm(a) / std::sqrt(6.0) - 1e-12);
  }
  EXPECT_NEAR(spectral_norm(Complex(3.0) * pauli(Axis::y)), 3.0, 1e-14);
}

TEST(Operator, KindPropagation) {
  const Operator h = pauli(Axis::x);
  EXPECT_EQ(h.kind(), OperatorKind::hermitian);
  EXPECT_EQ((h + pauli(Axis::z)).kind(), OperatorKind::hermitian);
  EXPECT_EQ(evolve(h, 0.3).kind(), OperatorKind::unitary);
  EXPECT_THROW(pauli(Axis::x) + Operator::identity(4), std::invalid_argument);
}
