#include "qnetmax/swap.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace qnetmax;

namespace {

MeasurementVector random_direction(std::mt19937_64& rng) {
  return MeasurementVector::normalized(random_unit_vector(rng));
}

Matrix4c pauli_pair(int i, int j) { return kron(pauli(i), pauli(j)); }

}  // namespace

TEST(BsmObservable, EqualsSeparablePair) {
  EXPECT_LT((bsm_observable(0) - pauli_pair(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((bsm_observable(1) - pauli_pair(0, 0)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BsmObservable, SignTableMatchesBellLabels) {
  EXPECT_EQ(bell_outcome(0), BellState::PhiPlus);
  EXPECT_EQ(bell_outcome(1), BellState::PhiMinus);
  EXPECT_EQ(bell_outcome(2), BellState::PsiPlus);
  EXPECT_EQ(bell_outcome(3), BellState::PsiMinus);
  // σz⊗σz is +1 on φ±, σx⊗σx is +1 on φ+ and ψ+.
  for (int b = 0; b < 4; ++b) {
    const Eigen::Vector4cd v = bell_vector(bell_outcome(b));
    EXPECT_NEAR((v.adjoint() * pauli_pair(2, 2) * v)(0).real(), kBsmSign[0][b], 1e-15);
    EXPECT_NEAR((v.adjoint() * pauli_pair(0, 0) * v)(0).real(), kBsmSign[1][b], 1e-15);
  }
}

TEST(BsmDistribution, SingletsGiveUniformBellOutcomes) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = bsm_distribution(fixtures::singlet(), fixtures::singlet(), random_direction(rng), random_direction(rng),
                                    random_direction(rng), random_direction(rng));
    for (int x = 0; x < 2; ++x)
      for (int z = 0; z < 2; ++z)
        for (int b = 0; b < 4; ++b) {
          double total = 0.0;
          for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) total += d.p(x, z, a, b, c);
          EXPECT_NEAR(total, 0.25, 1e-12);
        }
  }
}

TEST(BsmDistribution, ProductStateOnlyPhiOutcomes) {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 1.0;
  const auto zz = make_state(m);
  const auto s = BilocalSettings::branciard();
  const auto d = bsm_distribution(zz, zz, s.a0, s.a1, s.c0, s.c1);
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      double by_outcome[4] = {0, 0, 0, 0};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 2; ++c) by_outcome[b] += d.p(x, z, a, b, c);
      EXPECT_NEAR(by_outcome[0], 0.5, 1e-15);
      EXPECT_NEAR(by_outcome[1], 0.5, 1e-15);
      EXPECT_NEAR(by_outcome[2], 0.0, 1e-15);
      EXPECT_NEAR(by_outcome[3], 0.0, 1e-15);
    }
}

TEST(BsmDistribution, RowsAreProbabilityVectors) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = bsm_distribution(random_state(rng), random_state(rng), random_direction(rng), random_direction(rng),
                                    random_direction(rng), random_direction(rng));
    ASSERT_LE(d.max_normalization_error(), 1e-12);
    ASSERT_GE(d.min_entry(), -1e-12);
  }
}

TEST(BsmCorrelator, SingletsReachTsirelson) {
  const auto s = BilocalSettings::branciard();
  const auto d = bsm_distribution(fixtures::singlet(), fixtures::singlet(), s.a0, s.a1, s.c0, s.c1);
  const auto v = bsm_bilocality(d);
  EXPECT_NEAR(v.I, 0.5, 1e-12);
  EXPECT_NEAR(v.J, 0.5, 1e-12);
  EXPECT_NEAR(v.B, std::sqrt(2.0), 1e-12);
}

TEST(BsmCorrelator, TrivialTables) {
  const auto u = BsmDistribution::uniform();
  for (int y = 0; y < 2; ++y) EXPECT_NEAR(bsm_correlator(u, 0, y, 1), 0.0, 1e-15);

  // Symmetric under b0 <-> b1: outcomes 01 and 10 carry equal weight.
  BsmDistribution sym;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      sym.set(x, z, 0, 0, 0, 0.4);
      sym.set(x, z, 1, 1, 0, 0.15);
      sym.set(x, z, 1, 2, 0, 0.15);
      sym.set(x, z, 0, 3, 1, 0.3);
    }
  EXPECT_NEAR(bsm_correlator(sym, 0, 0, 0), bsm_correlator(sym, 0, 1, 0), 1e-15);
}

TEST(BsmIdentity, MatchesSeparablePairCorrelators) {
  const auto s = BilocalSettings::branciard();
  EXPECT_LE(theorem1_check(fixtures::singlet(), fixtures::singlet(), s.a0, s.a1, s.c0, s.c1), 1e-12);
  EXPECT_LE(theorem1_check(maximally_mixed_state(), maximally_mixed_state(), s.a0, s.a1, s.c0, s.c1), 1e-15);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ab = random_state(rng);
    const auto bc = random_state(rng);
    ASSERT_LE(theorem1_check(ab, bc, random_direction(rng), random_direction(rng), random_direction(rng),
                             random_direction(rng)),
              1e-12);
  }
}

TEST(RotatedBsm, OrthogonalSeparablePair) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix2c u1 = random_unitary2(rng);
    const Matrix2c u2 = random_unitary2(rng);
    const auto f0 = separable_factor(rotated_bsm_observable(0, u1, u2));
    const auto f1 = separable_factor(rotated_bsm_observable(1, u1, u2));
    ASSERT_LE(f0.residual, 1e-9);
    ASSERT_LE(f1.residual, 1e-9);
    ASSERT_NEAR(f0.a.dot(f1.a), 0.0, 1e-9);
    ASSERT_NEAR(f0.c.dot(f1.c), 0.0, 1e-9);
  }
}

TEST(RotatedBsm, PauliCoefficientsOfIdentityRotation) {
  const Matrix3 m = pauli_product_coefficients(rotated_bsm_observable(1, Matrix2c::Identity(), Matrix2c::Identity()));
  Matrix3 expect = Matrix3::Zero();
  expect(0, 0) = 1.0;
  EXPECT_LT((m - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BsmCsv, HeaderAndRowCount) {
  std::ostringstream out;
  write_bsm_csv(out, BsmDistribution::uniform());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,z,a,b0,b1,c,p");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 64);
}
