#include "qnetmax/oracle.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <thread>

namespace qnetmax {

namespace {

constexpr int kLineSamples = 8;
constexpr int kBrentBits = 26;
constexpr double kPolishTol = 1e-15;

struct RestartResult {
  double value = -1.0;
  std::vector<Vector3> vectors;
  bool converged = false;
  int cycles = 0;
};

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

Vector3 random_tangent(const Vector3& v, std::mt19937_64& rng) {
  Vector3 e;
  do {
    e = random_unit_vector(rng);
    e -= e.dot(v) * v;
  } while (e.norm() < 1e-6);
  return e.normalized();
}

/// Cyclic coordinate ascent over `count` unit vectors. Each step maximizes
/// the objective along the great circle through the current vector in a
/// tangent direction; two orthogonal tangent directions per vector per cycle.
template <typename Objective>
RestartResult ascend(const Objective& f, std::vector<Vector3> start_vectors, std::mt19937_64& rng, double tol,
                     int max_cycles) {
  RestartResult r;
  r.vectors = std::move(start_vectors);
  const std::size_t count = r.vectors.size();
  r.value = f(std::span<const Vector3>(r.vectors));

  std::vector<Vector3> trial = r.vectors;
  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    const double start = r.value;
    for (std::size_t k = 0; k < count; ++k) {
      const Vector3 e1 = random_tangent(r.vectors[k], rng);
      const Vector3 e2 = r.vectors[k].cross(e1).normalized();
      for (const Vector3& e : {e1, e2}) {
        const Vector3 v = r.vectors[k];
        auto along = [&](double t) {
          trial[k] = std::cos(t) * v + std::sin(t) * e;
          return f(std::span<const Vector3>(trial));
        };
        double best_t = 0.0;
        double best = r.value;
        const double step = 2.0 * std::numbers::pi / kLineSamples;
        for (int j = 1; j < kLineSamples; ++j) {
          const double t = j * step - (j > kLineSamples / 2 ? 2.0 * std::numbers::pi : 0.0);
          const double val = along(t);
          if (val > best) {
            best = val;
            best_t = t;
          }
        }
        const auto [t_opt, neg] = boost::math::tools::brent_find_minima(
            [&](double t) { return -along(t); }, best_t - step, best_t + step, kBrentBits);
        if (-neg > best) {
          best = -neg;
          best_t = t_opt;
        }
        if (best > r.value) {
          r.vectors[k] = (std::cos(best_t) * v + std::sin(best_t) * e).normalized();
          r.value = f(std::span<const Vector3>(r.vectors));
        }
        trial[k] = r.vectors[k];
      }
    }
    r.cycles = cycle;
    if (r.value - start < tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

/// Runs every restart (optionally in parallel) and merges by max value,
/// ties going to the lowest restart index.
template <typename Objective>
std::pair<int, RestartResult> run_restarts(const Objective& f, std::size_t count, const OptimizerConfig& cfg) {
  std::vector<RestartResult> results(static_cast<std::size_t>(cfg.restarts));
  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      auto rng = restart_rng(cfg.seed, i);
      std::vector<Vector3> start(count);
      for (auto& v : start) v = random_unit_vector(rng);
      results[static_cast<std::size_t>(i)] = ascend(f, std::move(start), rng, cfg.obj_tol, cfg.max_iters);
    }
  };

  int threads = cfg.threads == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : cfg.threads;
  threads = std::min(threads, cfg.restarts);
  if (threads <= 1) {
    work(0, cfg.restarts);
  } else {
    std::vector<std::future<void>> jobs;
    const int chunk = (cfg.restarts + threads - 1) / threads;
    for (int begin = 0; begin < cfg.restarts; begin += chunk)
      jobs.push_back(std::async(std::launch::async, work, begin, std::min(cfg.restarts, begin + chunk)));
    for (auto& j : jobs) j.get();
  }

  int best = 0;
  for (int i = 1; i < cfg.restarts; ++i)
    if (results[static_cast<std::size_t>(i)].value > results[static_cast<std::size_t>(best)].value) best = i;

  // Polish the winner well below obj_tol so the recovered angles are
  // accurate; the objective is flat to second order around the optimum.
  RestartResult winner = std::move(results[static_cast<std::size_t>(best)]);
  auto rng = restart_rng(cfg.seed, cfg.restarts);
  RestartResult polished = ascend(f, winner.vectors, rng, kPolishTol, cfg.max_iters);
  if (polished.value >= winner.value) {
    winner.vectors = std::move(polished.vectors);
    winner.value = polished.value;
  }
  return {best, std::move(winner)};
}

// Unit vector along m, or a fixed axis when m vanishes (any b is optimal then).
MeasurementVector direction_or_z(const Vector3& m) {
  if (m.norm() < 1e-300) return MeasurementVector::z_axis();
  return MeasurementVector::normalized(m);
}

bool is_zero(const Matrix3& t) { return t.cwiseAbs().maxCoeff() == 0.0; }

OptimumCertificate finish(OptimumCertificate cert, bool any_converged) {
  cert.gap = cert.closed_form - cert.best_value;
  cert.converged = any_converged;
  if (!any_converged) throw NoConvergenceError(std::move(cert));
  return cert;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw Error(ErrorKind::ParameterOutOfRange, "restarts must be >= 1");
  if (max_iters < 1) throw Error(ErrorKind::ParameterOutOfRange, "max_iters must be >= 1");
  if (!(obj_tol > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "obj_tol must be > 0");
  if (threads < 0) throw Error(ErrorKind::ParameterOutOfRange, "threads must be >= 0");
}

NoConvergenceError::NoConvergenceError(OptimumCertificate cert)
    : Error(ErrorKind::NoConvergence, "no restart converged; best " + std::to_string(cert.best_value) +
                                          ", gap " + std::to_string(cert.gap)),
      cert_(std::move(cert)) {}

double chsh_value(const TwoQubitState& rho, const ChshSettings& s) {
  const Matrix3 t = correlation_matrix(rho).t;
  const double sum = s.u0.vec().dot(t * (s.v0.vec() + s.v1.vec())) + s.u1.vec().dot(t * (s.v0.vec() - s.v1.vec()));
  return 0.5 * std::abs(sum);
}

double pair_angle(const Vector3& v0, const Vector3& v1) {
  return std::atan2((v0 - v1).norm(), (v0 + v1).norm());
}

double pair_tan2(const Vector3& v0, const Vector3& v1) {
  return (v0 - v1).squaredNorm() / (v0 + v1).squaredNorm();
}

OptimumCertificate maximize_bilocality(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                                       const OptimizerConfig& cfg) {
  cfg.validate();
  const Matrix3 ta = correlation_matrix(rho_ab).t;
  const Matrix3 tc = correlation_matrix(rho_bc).t;
  const Matrix3 ta_t = ta.transpose();

  OptimumCertificate cert;
  cert.best_settings = BilocalSettings::branciard();
  cert.closed_form = bilocality_max(rho_ab, rho_bc);
  if (is_zero(ta) || is_zero(tc)) {
    cert.degenerate = true;
    cert.best_value = bilocality_value(rho_ab, rho_bc, std::get<BilocalSettings>(cert.best_settings)).B;
    cert.angles = {std::numbers::pi / 4, std::numbers::pi / 4};
    return finish(std::move(cert), true);
  }

  // vectors: a0, a1, c0, c1
  auto objective = [&](std::span<const Vector3> v) {
    const double i = (ta_t * (v[0] + v[1])).norm() * (tc * (v[2] + v[3])).norm();
    const double j = (ta_t * (v[0] - v[1])).norm() * (tc * (v[2] - v[3])).norm();
    return 0.5 * (std::sqrt(i) + std::sqrt(j));
  };

  auto [restart, best] = run_restarts(objective, 4, cfg);
  const auto& v = best.vectors;
  BilocalSettings s{MeasurementVector::normalized(v[0]),
                    MeasurementVector::normalized(v[1]),
                    direction_or_z(ta_t * (v[0] + v[1])),
                    direction_or_z(ta_t * (v[0] - v[1])),
                    direction_or_z(tc * (v[2] + v[3])),
                    direction_or_z(tc * (v[2] - v[3])),
                    MeasurementVector::normalized(v[2]),
                    MeasurementVector::normalized(v[3])};
  cert.best_value = bilocality_value(rho_ab, rho_bc, s).B;
  cert.angles = {pair_angle(s.a0.vec(), s.a1.vec()), pair_angle(s.c0.vec(), s.c1.vec())};
  cert.best_settings = std::move(s);
  cert.best_restart = restart;
  cert.cycles = best.cycles;
  return finish(std::move(cert), best.converged);
}

OptimumCertificate maximize_star(const NetworkConfig& states, const OptimizerConfig& cfg) {
  cfg.validate();
  if (states.empty()) throw Error(ErrorKind::EmptyNetwork, "star network needs at least one source");
  if (states.size() < 2)
    throw Error(ErrorKind::ParameterOutOfRange, "star optimization needs n >= 2; use maximize_chsh for n = 1");
  const std::size_t n = states.size();
  std::vector<Matrix3> tt;
  bool degenerate = false;
  for (const auto& s : states) {
    const Matrix3 t = correlation_matrix(s).t;
    degenerate = degenerate || is_zero(t);
    tt.push_back(t.transpose());
  }

  OptimumCertificate cert;
  cert.best_settings = StarSettings::branciard(n);
  cert.closed_form = star_max(states);
  if (degenerate) {
    cert.degenerate = true;
    cert.best_value = star_value(states, std::get<StarSettings>(cert.best_settings)).N;
    cert.angles.assign(n, std::numbers::pi / 4);
    return finish(std::move(cert), true);
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  // vectors: a_i0 at 2i, a_i1 at 2i+1
  auto objective = [&](std::span<const Vector3> v) {
    double pi = 1.0;
    double pj = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      pi *= 0.5 * (tt[i] * (v[2 * i] + v[2 * i + 1])).norm();
      pj *= 0.5 * (tt[i] * (v[2 * i] - v[2 * i + 1])).norm();
    }
    return std::pow(pi, inv_n) + std::pow(pj, inv_n);
  };

  auto [restart, best] = run_restarts(objective, 2 * n, cfg);
  const auto& v = best.vectors;
  StarSettings s;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector3& x0 = v[2 * i];
    const Vector3& x1 = v[2 * i + 1];
    s.branches.push_back({MeasurementVector::normalized(x0), MeasurementVector::normalized(x1),
                          direction_or_z(tt[i] * (x0 + x1)), direction_or_z(tt[i] * (x0 - x1))});
    cert.angles.push_back(pair_angle(x0, x1));
  }
  cert.best_value = star_value(states, s).N;
  cert.best_settings = std::move(s);
  cert.best_restart = restart;
  cert.cycles = best.cycles;
  return finish(std::move(cert), best.converged);
}

OptimumCertificate maximize_chsh(const TwoQubitState& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  const Matrix3 t = correlation_matrix(rho).t;
  const MeasurementVector z = MeasurementVector::z_axis();
  OptimumCertificate cert;
  cert.best_settings = ChshSettings{z, z, z, z};
  cert.closed_form = chsh_max(rho);
  if (is_zero(t)) {
    cert.degenerate = true;
    cert.best_value = chsh_value(rho, std::get<ChshSettings>(cert.best_settings));
    return finish(std::move(cert), true);
  }

  // vectors: v0, v1; u's follow as normalized T(v0 ± v1).
  auto objective = [&](std::span<const Vector3> v) {
    return 0.5 * ((t * (v[0] + v[1])).norm() + (t * (v[0] - v[1])).norm());
  };
  auto [restart, best] = run_restarts(objective, 2, cfg);
  const auto& v = best.vectors;
  ChshSettings s{direction_or_z(t * (v[0] + v[1])), direction_or_z(t * (v[0] - v[1])),
                 MeasurementVector::normalized(v[0]), MeasurementVector::normalized(v[1])};
  cert.best_value = chsh_value(rho, s);
  cert.best_settings = std::move(s);
  cert.best_restart = restart;
  cert.cycles = best.cycles;
  return finish(std::move(cert), best.converged);
}

}  // namespace qnetmax
