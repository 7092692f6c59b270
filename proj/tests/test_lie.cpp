#include <gtest/gtest.h>

#include <random>

#include "aniso/lie.hpp"
#include "test_support.hpp"

using namespace aniso;

namespace {

const Complex I{0.0, 1.0};

Operator traceless_hermitian(std::mt19937_64& rng, int dim) {
  Matrix m = aniso::testing::random_hermitian(rng, dim).matrix();
  m -= (m.trace() / static_cast<double>(dim)) * Matrix::Identity(dim, dim);
  return Operator(m, OperatorKind::hermitian);
}

std::array<EdgeCouplings, 3> uniform_triplet(const EdgeCouplings& c) { return {c, c, c}; }

EdgeCouplings random_couplings(std::mt19937_64& rng, double ks_scale, double ka_scale) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double ks = ks_scale * u(rng), ka = ka_scale * u(rng);
  // jxy + jyx = 2ks, jxy − jyx = 2ka.
  return {u(rng), u(rng), ks + ka, ks - ka};
}

}  // namespace

TEST(Closure, PauliPairGivesSu2) {
  const LieBasis b = lie_closure({pauli(Axis::x), pauli(Axis::y)}, 16);
  EXPECT_EQ(b.dim(), 3);
  EXPECT_LE(b.orthonormality_residual(), 1e-12);
  EXPECT_LE(b.closure_residual(), 1e-12);
}

TEST(Closure, GenericTracelessPairGivesSuN) {
  std::mt19937_64 rng(61);
  for (int dim : {2, 3, 4}) {
    const LieBasis b = lie_closure({traceless_hermitian(rng, dim), traceless_hermitian(rng, dim)}, 64);
    EXPECT_EQ(b.dim(), dim * dim - 1);
    EXPECT_LE(b.closure_residual(), 1e-8);
  }
}

TEST(Closure, CommutingSeedsStayAbelian) {
  const LieBasis b = lie_closure({pauli(Axis::z), Operator::identity(2), Complex(2.0) * pauli(Axis::z)}, 8);
  EXPECT_EQ(b.dim(), 2);
}

TEST(Closure, GeneratorsAreAntiHermitian) {
  std::mt19937_64 rng(67);
  const LieBasis b = lie_closure({traceless_hermitian(rng, 3), traceless_hermitian(rng, 3)}, 64);
  for (const Operator& g : b.generators) EXPECT_LE(max_abs_entry(g + g.adjoint()), 1e-12);
}

TEST(Closure, OverflowAndBadSeeds) {
  std::mt19937_64 rng(71);
  EXPECT_THROW(lie_closure({traceless_hermitian(rng, 4), traceless_hermitian(rng, 4)}, 10), ClosureOverflow);
  EXPECT_THROW(lie_closure({Operator(aniso::testing::random_matrix(rng, 2))}, 8), std::invalid_argument);
  EXPECT_THROW(lie_closure({pauli(Axis::x), Operator::identity(4)}, 8), std::invalid_argument);
}

TEST(BlockPauli, Placement) {
  const Operator y = block_pauli(Axis::y, 2, 3);
  EXPECT_EQ(y(2, 3), Complex(0.0, -1.0));
  EXPECT_EQ(y(3, 2), Complex(0.0, 1.0));
  EXPECT_EQ(frobenius_norm(y), std::sqrt(2.0));
  EXPECT_THROW(block_pauli(Axis::x, 1, 1), std::invalid_argument);
}

TEST(EncodedGenerators, SigmaYCommutatorIdentityReal) {
  // Worked by hand on the code words: [H13, H23] = i(A² − S²)·σʸ on words (2,3),
  // where A and S are the antisymmetric and symmetric code-space entries.
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCouplings c = random_couplings(rng, 0.0, 0.0);
    const TripletHamiltonians hams = TripletHamiltonians::build(uniform_triplet(c));
    const CodeBasisCouplings cb = code_basis_couplings(c);
    const double a = cb.antisym.real(), s = cb.sym.real();
    for (const CodeSpace* code : {&standard_codes().even, &standard_codes().odd}) {
      const EncodedGenerator g = encoded_sigma_y(hams, *code, Edge(1, 3), Edge(2, 3));
      EXPECT_EQ(g.target_words, (std::pair<int, int>{2, 3}));
      const Operator expected = I * (a * a - s * s) * block_pauli(Axis::y, 2, 3);
      EXPECT_LE(max_abs_entry(g.matrix - expected), 1e-12);
      // [H12, σʸ] = 2iS·σᶻ on the same block.
      const EncodedGenerator z = encoded_sigma_z(hams, *code, Edge(1, 2), g);
      EXPECT_LE(max_abs_entry(z.matrix - I * (2.0 * s) * block_pauli(Axis::z, 2, 3)), 1e-12);
    }
  }
}

TEST(EncodedGenerators, SigmaYCommutatorIdentityComplex) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCouplings c = random_couplings(rng, 1.0, 1.0);
    const TripletHamiltonians hams = TripletHamiltonians::build(uniform_triplet(c));
    const CodeBasisCouplings cb = code_basis_couplings(c);
    const double a2 = std::norm(cb.antisym), s2 = std::norm(cb.sym);
    const EncodedGenerator g = encoded_sigma_y(hams, standard_codes().even, Edge(1, 3), Edge(2, 3));
    EXPECT_LE(max_abs_entry(g.matrix - I * (a2 - s2) * block_pauli(Axis::y, 2, 3)), 1e-12);
  }
}

TEST(EncodedGenerators, CommutatorsVanishOnAntisymmetricPositions) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const EdgeCouplings c = random_couplings(rng, 0.0, 1.0);
    const TripletHamiltonians hams = TripletHamiltonians::build(uniform_triplet(c));
    const CodeSpace& code = standard_codes().even;
    for (const CrossTermRow& row : cross_term_scan(hams, code)) {
      const Operator m = commutator(hams.in_code(row.pair_a, code), hams.in_code(row.pair_b, code));
      for (const Edge& e : local_edges()) {
        const auto blk = antisymmetric_block(e);
        EXPECT_LE(std::abs(m(blk.first, blk.second)), 1e-12);
        EXPECT_LE(std::abs(m(blk.second, blk.first)), 1e-12);
      }
    }
  }
}

TEST(EncodedGenerators, CrossTermScan) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    const bool with_ks = trial % 2 == 0;
    const EdgeCouplings c = random_couplings(rng, with_ks ? 1.0 : 0.0, 1.0);
    const auto rows = cross_term_scan(TripletHamiltonians::build(uniform_triplet(c)), standard_codes().even);
    ASSERT_EQ(rows.size(), 3u);
    for (const CrossTermRow& row : rows) {
      const bool failing_pair = row.pair_a == Edge(1, 2) && row.pair_b == Edge(2, 3);
      EXPECT_EQ(row.pure, !(with_ks && failing_pair)) << row.pair_a.str() << "," << row.pair_b.str();
    }
  }
}

TEST(EncodedGenerators, SigmaXReadsSymmetricBlock) {
  const EdgeCouplings c{3.0, 1.0, 0.4, 0.0};
  const TripletHamiltonians hams = TripletHamiltonians::build(uniform_triplet(c));
  const EncodedGenerator x = encoded_sigma_x(hams, standard_codes().even, Edge(1, 2));
  EXPECT_EQ(x.target_words, (std::pair<int, int>{2, 3}));
  EXPECT_NEAR(x.coefficient.real(), code_basis_couplings(c).sym.real(), 1e-15);
  EXPECT_GT(x.off_block_norm, 0.0);  // Ks tilts the block generator toward σʸ
}

TEST(EncodedGenerators, QutritBlockGeneratesSu3) {
  // Pure symmetric couplings (Ja = 0): the three occupation-2 words close on su(3).
  const TripletHamiltonians hams = TripletHamiltonians::build(uniform_triplet({1.3, 1.3, 0.0, 0.0}));
  std::vector<Operator> seeds;
  for (const Edge& e : local_edges()) {
    seeds.push_back(restrict_to(hams.in_code(e, standard_codes().even), Subspace(4, {1, 2, 3})).block);
  }
  EXPECT_EQ(lie_closure(seeds, 64).dim(), 8);
}
