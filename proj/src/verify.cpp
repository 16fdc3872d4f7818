#include "qnetmax/verify.hpp"

#include "qnetmax/classify.hpp"
#include "qnetmax/criteria.hpp"
#include "qnetmax/error.hpp"
#include "qnetmax/oracle.hpp"
#include "qnetmax/swap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace qnetmax {

namespace {

constexpr double kOracleUpper = 1e-7;  // best_value may exceed the closed form by at most this
constexpr double kOracleLower = 1e-4;  // and fall short by at most this

std::mt19937_64 instance_rng(std::uint64_t seed, int instance) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(instance), 0x51ed2701u};
  return std::mt19937_64(seq);
}

MeasurementVector random_direction(std::mt19937_64& rng) {
  return MeasurementVector::normalized(random_unit_vector(rng));
}

void record(SuiteSummary& s, int instance, bool ok) {
  if (ok) {
    ++s.passed;
  } else {
    ++s.failed;
    s.failing_instances.push_back(instance);
  }
}

OptimumCertificate certify(auto&& run) {
  try {
    return run();
  } catch (const NoConvergenceError& e) {
    return e.certificate();
  }
}

void oracle_record(SuiteSummary& s, int i, const OptimumCertificate& cert) {
  s.worst = std::max(s.worst, cert.gap);
  s.worst_low = std::min(s.worst_low, cert.gap);
  record(s, i, cert.gap <= kOracleLower && cert.gap >= -kOracleUpper);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem1", "theorem3", "theorem4", "lemma2", "lemma4", "prop1"};
  return names;
}

SuiteSummary run_suite(std::string_view name, std::uint64_t seed, int instances, int restarts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + std::string(name) + "\"");
  if (instances < 1 || restarts < 1)
    throw Error(ErrorKind::ParameterOutOfRange, "instances and restarts must be >= 1");

  SuiteSummary s;
  s.suite = std::string(name);
  s.seed = seed;
  s.instances = instances;
  s.restarts = restarts;

  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;

  for (int i = 0; i < instances; ++i) {
    auto rng = instance_rng(seed, i);
    if (name == "theorem1") {
      s.metric = "max_correlator_difference";
      const auto ab = random_state(rng);
      const auto bc = random_state(rng);
      const auto a0 = random_direction(rng), a1 = random_direction(rng);
      const auto c0 = random_direction(rng), c1 = random_direction(rng);
      const double diff = theorem1_check(ab, bc, a0, a1, c0, c1);
      s.worst = std::max(s.worst, diff);
      record(s, i, diff <= 1e-12);
    } else if (name == "theorem3") {
      s.metric = "max_gap";
      const auto ab = random_state(rng);
      const auto bc = random_state(rng);
      cfg.seed = seed + static_cast<std::uint64_t>(i);
      oracle_record(s, i, certify([&] { return maximize_bilocality(ab, bc, cfg); }));
    } else if (name == "theorem4") {
      s.metric = "max_gap";
      const std::size_t n = 3 + static_cast<std::size_t>(i % 2);
      NetworkConfig net;
      for (std::size_t k = 0; k < n; ++k) net.push_back(random_state(rng));
      cfg.seed = seed + static_cast<std::uint64_t>(i);
      oracle_record(s, i, certify([&] { return maximize_star(net, cfg); }));
    } else if (name == "lemma2") {
      s.metric = "max_eigenvalue_mismatch";
      std::normal_distribution<double> gauss;
      Matrix3 m;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = gauss(rng);
      if (i % 4 == 3) m.col(2) = 0.5 * m.col(0) - 2.0 * m.col(1);  // rank-deficient case
      const auto e1 = symmetric_eigen3(m.transpose() * m).values;
      const auto e2 = symmetric_eigen3(m * m.transpose()).values;
      std::vector<double> nz1, nz2;
      for (int k = 0; k < 3; ++k) {
        if (e1(k) > 1e-10) nz1.push_back(e1(k));
        if (e2(k) > 1e-10) nz2.push_back(e2(k));
      }
      double diff = nz1.size() == nz2.size() ? 0.0 : std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < std::min(nz1.size(), nz2.size()); ++k)
        diff = std::max(diff, std::abs(nz1[k] - nz2[k]));
      s.worst = std::max(s.worst, diff);
      record(s, i, diff <= 1e-9);
    } else if (name == "lemma4") {
      s.metric = "max_t";
      const TSpectrum t = t_spectrum(random_state(rng));
      s.worst = std::max(s.worst, t.t1);
      s.worst_low = std::min(s.worst_low, t.t3);
      record(s, i, t.t3 >= -1e-12 && t.t1 <= 1.0 + 1e-9);
    } else {  // prop1
      s.metric = "max_excess_b2_over_s_product";
      const auto ab = random_state(rng);
      const auto bc = random_state(rng);
      const double b = bilocality_max(ab, bc);
      const double excess = b * b - chsh_max(ab) * chsh_max(bc);
      const RegionFlags f = classify_pair(ab, bc);
      const bool forbidden = !f.ab_nonlocal && !f.bc_nonlocal && f.nonbilocal;
      s.worst = std::max(s.worst, excess);
      record(s, i, excess <= 1e-12 && !forbidden);
    }
  }
  return s;
}

}  // namespace qnetmax
