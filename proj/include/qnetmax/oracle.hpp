#pragma once

#include "qnetmax/correlations.hpp"
#include "qnetmax/criteria.hpp"
#include "qnetmax/error.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace qnetmax {

/// Numerical search over measurement directions. Each restart draws random
/// initial unit vectors and runs cyclic coordinate ascent along great
/// circles, with an exact 1-D line search per direction. Central-node
/// vectors are never searched: for fixed branch vectors the optimal b is
/// the normalized image under Tᵀ (or T), so they are filled in directly.
struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 500;  ///< coordinate-ascent cycles per restart
  double obj_tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 1;  ///< 0 = hardware concurrency

  void validate() const;
};

/// Settings of the normalized CHSH test on a single source: U_x on the
/// first qubit, V_y on the second.
struct ChshSettings {
  MeasurementVector u0, u1;
  MeasurementVector v0, v1;
};

/// Normalized CHSH value ½|<U0V0 + U0V1 + U1V0 - U1V1>|.
double chsh_value(const TwoQubitState& rho, const ChshSettings& s);

using OracleSettings = std::variant<BilocalSettings, StarSettings, ChshSettings>;

struct OptimumCertificate {
  double best_value = 0.0;
  OracleSettings best_settings = BilocalSettings::branciard();
  double closed_form = 0.0;
  double gap = 0.0;  ///< closed_form - best_value
  bool converged = false;
  bool degenerate = false;  ///< a zero correlation matrix short-circuited the search
  int best_restart = -1;
  int cycles = 0;  ///< cycles used by the winning restart
  /// Recovered angles: {α, γ} for bilocal, {α_1..α_n} for star, {} for CHSH.
  std::vector<double> angles;
};

/// Thrown when no restart met obj_tol within max_iters; carries the best
/// certificate found anyway.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(OptimumCertificate cert);
  const OptimumCertificate& certificate() const noexcept { return cert_; }

 private:
  OptimumCertificate cert_;
};

OptimumCertificate maximize_bilocality(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                                       const OptimizerConfig& cfg = {});

/// n >= 2 required; throws EmptyNetwork / ParameterOutOfRange otherwise.
OptimumCertificate maximize_star(const NetworkConfig& states, const OptimizerConfig& cfg = {});

OptimumCertificate maximize_chsh(const TwoQubitState& rho, const OptimizerConfig& cfg = {});

/// Angle α in [0, π/2] with a0 + a1 = 2 cos α n, a0 - a1 = 2 sin α n'.
double pair_angle(const Vector3& v0, const Vector3& v1);

/// tan²α = |v0 - v1|² / |v0 + v1|².
double pair_tan2(const Vector3& v0, const Vector3& v1);

}  // namespace qnetmax
