#include "qnetmax/criteria.hpp"
#include "qnetmax/error.hpp"
#include "qnetmax/oracle.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace qnetmax;

namespace {

double chsh_product_bound(const NetworkConfig& net) {
  double log_sum = 0.0;
  for (const auto& s : net) log_sum += std::log(chsh_max(s));
  return std::exp(log_sum / static_cast<double>(net.size()));
}

}  // namespace

TEST(OptimizerConfig, Validation) {
  OptimizerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.obj_tol = 0.0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(MaximizeBilocality, Singlets) {
  const auto c = maximize_bilocality(fixtures::singlet(), fixtures::singlet());
  EXPECT_NEAR(c.best_value, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(c.gap, 0.0, 1e-7);
  EXPECT_TRUE(c.converged);
  ASSERT_TRUE(std::holds_alternative<BilocalSettings>(c.best_settings));
  const auto& s = std::get<BilocalSettings>(c.best_settings);
  EXPECT_NEAR(bilocality_value(fixtures::singlet(), fixtures::singlet(), s).B, c.best_value, 1e-15);
}

TEST(MaximizeBilocality, Werner) {
  const auto c = maximize_bilocality(werner_state(0.8), werner_state(0.9));
  EXPECT_NEAR(c.best_value, std::sqrt(2 * 0.72), 1e-4);
  EXPECT_NEAR(c.closed_form, std::sqrt(2 * 0.72), 1e-12);
}

// The eigenvalue-pairing closed form is attainable but not an upper bound;
// the true optimum on the counterexample pair is sqrt(S_AB S_BC).
TEST(MaximizeBilocality, CounterexampleReachesChshProduct) {
  const auto ab = fixtures::counterexample_ab();
  const auto bc = fixtures::counterexample_bc();
  const auto c = maximize_bilocality(ab, bc);
  EXPECT_NEAR(c.closed_form, 0.97, 0.005);
  EXPECT_NEAR(c.best_value, std::sqrt(chsh_max(ab) * chsh_max(bc)), 1e-7);
  EXPECT_LT(c.gap, -0.07);
}

TEST(MaximizeBilocality, RandomPairsBracketedByKnownBounds) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ab = random_state(rng);
    const auto bc = random_state(rng);
    OptimizerConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto c = maximize_bilocality(ab, bc, cfg);
    ASSERT_GE(c.best_value, c.closed_form - 1e-4);
    ASSERT_LE(c.best_value, std::sqrt(chsh_max(ab) * chsh_max(bc)) + 1e-7);
    ASSERT_NEAR(c.best_value, std::sqrt(chsh_max(ab) * chsh_max(bc)), 1e-6);
  }
}

TEST(MaximizeBilocality, ParallelSpectraMatchClosedForm) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ab = werner_state(u(rng)).local_unitary(random_unitary2(rng), random_unitary2(rng));
    const auto bc = werner_state(u(rng)).local_unitary(random_unitary2(rng), random_unitary2(rng));
    const auto c = maximize_bilocality(ab, bc);
    ASSERT_GE(c.gap, -1e-7);
    ASSERT_LE(c.gap, 1e-4);
  }
}

TEST(MaximizeBilocality, Stationarity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = maximize_bilocality(random_state(rng), random_state(rng));
    ASSERT_EQ(c.angles.size(), 2u);
    ASSERT_NEAR(std::pow(std::tan(c.angles[0]), 2), std::pow(std::tan(c.angles[1]), 2), 1e-4);
  }
}

TEST(MaximizeBilocality, Deterministic) {
  const auto ab = random_state(std::uint64_t{5});
  const auto bc = random_state(std::uint64_t{6});
  OptimizerConfig cfg;
  cfg.seed = 99;
  const auto a = maximize_bilocality(ab, bc, cfg);
  const auto b = maximize_bilocality(ab, bc, cfg);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.best_restart, b.best_restart);
  EXPECT_EQ(a.angles, b.angles);
}

TEST(MaximizeBilocality, ThreadCountDoesNotChangeResult) {
  const auto ab = random_state(std::uint64_t{7});
  const auto bc = random_state(std::uint64_t{8});
  OptimizerConfig one;
  one.restarts = 8;
  OptimizerConfig four = one;
  four.threads = 4;
  const auto a = maximize_bilocality(ab, bc, one);
  const auto b = maximize_bilocality(ab, bc, four);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.best_restart, b.best_restart);
}

TEST(MaximizeBilocality, DegenerateShortCircuits) {
  const auto c = maximize_bilocality(maximally_mixed_state(), fixtures::singlet());
  EXPECT_TRUE(c.degenerate);
  EXPECT_EQ(c.best_value, 0.0);
  EXPECT_EQ(c.cycles, 0);
}

TEST(MaximizeBilocality, NoConvergenceCarriesCertificate) {
  OptimizerConfig cfg;
  cfg.max_iters = 1;
  cfg.restarts = 2;
  cfg.obj_tol = 1e-300;
  try {
    maximize_bilocality(random_state(std::uint64_t{1}), random_state(std::uint64_t{2}), cfg);
    FAIL();
  } catch (const NoConvergenceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
    EXPECT_GT(e.certificate().best_value, 0.0);
  }
}

TEST(MaximizeStar, SingletsThreeBranches) {
  const auto c = maximize_star(NetworkConfig(3, fixtures::singlet()));
  EXPECT_NEAR(c.best_value, std::sqrt(2.0), 1e-3);
  ASSERT_TRUE(std::holds_alternative<StarSettings>(c.best_settings));
  EXPECT_EQ(c.angles.size(), 3u);
}

TEST(MaximizeStar, MatchesBilocalAtTwo) {
  const auto ab = random_state(std::uint64_t{11});
  const auto bc = random_state(std::uint64_t{12});
  const auto s = maximize_star(bilocal_network(ab, bc));
  const auto b = maximize_bilocality(ab, bc);
  EXPECT_NEAR(s.best_value, b.best_value, 1e-6);
}

TEST(MaximizeStar, MixedBranchGivesZero) {
  const auto c = maximize_star({fixtures::singlet(), maximally_mixed_state(), werner_state(0.9)});
  EXPECT_NEAR(c.best_value, 0.0, 1e-6);
  EXPECT_TRUE(c.degenerate);
}

TEST(MaximizeStar, RandomNetworksReachChshGeometricMean) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    NetworkConfig net;
    for (int k = 0; k < 3 + trial % 2; ++k) net.push_back(random_state(rng));
    const auto c = maximize_star(net);
    ASSERT_GE(c.best_value, c.closed_form - 1e-4);
    ASSERT_NEAR(c.best_value, chsh_product_bound(net), 1e-6);
    for (std::size_t j = 1; j < c.angles.size(); ++j)
      ASSERT_NEAR(std::pow(std::tan(c.angles[j]), 2), std::pow(std::tan(c.angles[0]), 2), 1e-4);
  }
}

TEST(MaximizeStar, Errors) {
  try {
    maximize_star({fixtures::singlet()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParameterOutOfRange);
  }
  try {
    maximize_star({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyNetwork);
  }
}

TEST(MaximizeChsh, MatchesHorodecki) {
  EXPECT_NEAR(maximize_chsh(fixtures::singlet()).best_value, std::sqrt(2.0), 1e-5);
  EXPECT_NEAR(maximize_chsh(werner_state(0.5)).best_value, 0.5 * std::sqrt(2.0), 1e-5);
  EXPECT_NEAR(maximize_chsh(fixtures::counterexample_ab()).best_value, 1.02, 1e-3);
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    const auto c = maximize_chsh(s);
    ASSERT_NEAR(c.best_value, chsh_max(s), 1e-6);
  }
}

TEST(PairAngle, Definition) {
  const Vector3 z(0, 0, 1), x(1, 0, 0);
  EXPECT_NEAR(pair_angle(z, z), 0.0, 1e-15);
  EXPECT_NEAR(pair_angle(z, -z), M_PI / 2, 1e-15);
  EXPECT_NEAR(pair_angle(z, x), M_PI / 4, 1e-15);
  EXPECT_NEAR(pair_tan2(z, x), 1.0, 1e-15);
}
