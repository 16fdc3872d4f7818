#pragma once

#include "qnetmax/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qnetmax {

/// Tolerance shared by the Hermiticity, trace and positivity checks.
inline constexpr double kStateTolerance = 1e-9;

/// A validated two-qubit density matrix in the basis |00>,|01>,|10>,|11>.
/// The first tensor factor is the first qubit named in the source (A for
/// rho_AB, B for rho_BC).
class TwoQubitState {
 public:
  /// Validates `entries`; throws Error{NotHermitian|TraceNotOne|NotPSD}.
  static TwoQubitState make(const Matrix4c& entries, std::optional<std::string> label = {});

  const Matrix4c& matrix() const noexcept { return rho_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

  TwoQubitState with_label(std::string label) const;

  /// The same physical state with the two qubits exchanged.
  TwoQubitState swapped() const;

  /// (U1 ⊗ U2) rho (U1 ⊗ U2)†.
  TwoQubitState local_unitary(const Matrix2c& u1, const Matrix2c& u2) const;

  /// tr(rho²).
  double purity() const;

 private:
  TwoQubitState(Matrix4c rho, std::optional<std::string> label)
      : rho_(std::move(rho)), label_(std::move(label)) {}

  Matrix4c rho_;
  std::optional<std::string> label_;
};

/// Pauli correlation matrix t_nm = tr[rho (σ_n ⊗ σ_m)], index order (x,y,z).
struct CorrelationMatrix {
  Matrix3 t;
};

/// A unit vector on the Bloch sphere defining the observable v·σ.
class MeasurementVector {
 public:
  /// Throws ParameterOutOfRange if | |v| - 1 | > 1e-9.
  explicit MeasurementVector(const Vector3& v);
  MeasurementVector(double x, double y, double z) : MeasurementVector(Vector3(x, y, z)) {}

  /// Normalizes any nonzero vector.
  static MeasurementVector normalized(const Vector3& v);

  const Vector3& vec() const noexcept { return v_; }
  double operator()(int i) const { return v_(i); }

  static MeasurementVector x_axis() { return MeasurementVector(1, 0, 0); }
  static MeasurementVector y_axis() { return MeasurementVector(0, 1, 0); }
  static MeasurementVector z_axis() { return MeasurementVector(0, 0, 1); }

 private:
  struct Trusted {};
  MeasurementVector(const Vector3& v, Trusted) : v_(v) {}
  Vector3 v_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(BellState which);
std::optional<BellState> parse_bell_state(std::string_view name);

/// Amplitudes of a Bell state in the computational basis.
Eigen::Vector4cd bell_vector(BellState which);

TwoQubitState make_state(const Matrix4c& entries, std::optional<std::string> label = {});
TwoQubitState bell_state(BellState which);
TwoQubitState maximally_mixed_state();

/// v |ψ⁻><ψ⁻| + (1 - v) I/4.
TwoQubitState werner_state(double v);

/// v |ψ⁻><ψ⁻| + (1 - v) [ λ (|ψ⁻><ψ⁻| + |ψ⁺><ψ⁺|)/2 + (1 - λ) I/4 ].
TwoQubitState colored_noise_state(double v, double lambda);

/// Deterministic pseudo-random state G G† / tr(G G†) with G a 4x4 matrix of
/// standard complex Gaussians drawn from `seed`.
TwoQubitState random_state(std::uint64_t seed);
TwoQubitState random_state(std::mt19937_64& rng);

CorrelationMatrix correlation_matrix(const TwoQubitState& rho);

struct BlochVectors {
  Vector3 r;  ///< first-qubit marginal, r_n = tr[rho (σ_n ⊗ I)]
  Vector3 s;  ///< second-qubit marginal, s_m = tr[rho (I ⊗ σ_m)]
};

BlochVectors bloch_vectors(const TwoQubitState& rho);

/// Eigenvalues of a Hermitian 4x4 matrix (descending), by complex Jacobi.
Eigen::Vector4d hermitian_eigenvalues(const Matrix4c& m);

}  // namespace qnetmax
