#pragma once

#include "qnetmax/correlations.hpp"
#include "qnetmax/qstate.hpp"

#include <array>
#include <iosfwd>
#include <utility>

namespace qnetmax {

/// Two-bit BSM outcome b0b1: 00 ↔ φ⁺, 01 ↔ φ⁻, 10 ↔ ψ⁺, 11 ↔ ψ⁻.
/// Encoded as the integer 2*b0 + b1.
BellState bell_outcome(int b0b1);

/// (-1)^{b_y} for each (y, b0b1). The single source of the BSM sign map.
inline constexpr std::array<std::array<int, 4>, 2> kBsmSign = {{
    {{+1, +1, -1, -1}},
    {{+1, -1, +1, -1}},
}};

/// p(a, b0, b1, c | x, z) for a complete Bell-state measurement at B.
class BsmDistribution {
 public:
  BsmDistribution();

  double p(int x, int z, int a, int b0b1, int c) const { return table_[index(x, z, a, b0b1, c)]; }
  void set(int x, int z, int a, int b0b1, int c, double value) { table_[index(x, z, a, b0b1, c)] = value; }

  /// Σ over the 16 outcomes of row (x, z), minus one; worst absolute value.
  double max_normalization_error() const;
  double min_entry() const;

  static BsmDistribution uniform();

 private:
  static std::size_t index(int x, int z, int a, int b0b1, int c) {
    return static_cast<std::size_t>((((x * 2 + z) * 2 + a) * 4 + b0b1) * 2 + c);
  }
  std::array<double, 64> table_{};
};

/// Exact BSM statistics from rho_AB ⊗ rho_BC (qubit order A, B^A, B^C, C).
BsmDistribution bsm_distribution(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                                 const MeasurementVector& a0, const MeasurementVector& a1,
                                 const MeasurementVector& c0, const MeasurementVector& c1);

/// <A_x B_y C_z> with B_y = (-1)^{b_y}, marginalizing the other bit.
double bsm_correlator(const BsmDistribution& d, int x, int y, int z);

/// I, J and B assembled from BSM correlators.
BilocalValue bsm_bilocality(const BsmDistribution& d);

/// Σ_{b0b1} sign(y, b0b1) |Bell_{b0b1}><Bell_{b0b1}|, built algebraically.
Matrix4c bsm_observable(int y);

/// Max over (x, y, z) of |BSM correlator - separable correlator| where the
/// separable central measurement is bA0 = bC0 = ẑ, bA1 = bC1 = x̂.
double theorem1_check(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc, const MeasurementVector& a0,
                      const MeasurementVector& a1, const MeasurementVector& c0, const MeasurementVector& c1);

/// (U1 ⊗ U2)† B_y (U1 ⊗ U2): the BSM observable in a locally rotated Bell basis.
Matrix4c rotated_bsm_observable(int y, const Matrix2c& u1, const Matrix2c& u2);

/// Coefficients M_ij = tr[op (σ_i ⊗ σ_j)]/4 of a traceless two-qubit
/// observable in the Pauli product basis.
Matrix3 pauli_product_coefficients(const Matrix4c& op);

/// Best rank-one fit op ≈ (a·σ) ⊗ (c·σ) with unit a, c. `residual` is the
/// Frobenius distance between the coefficient matrix and a cᵀ.
struct SeparableFactor {
  Vector3 a;
  Vector3 c;
  double residual = 0.0;
};
SeparableFactor separable_factor(const Matrix4c& op);

/// CSV with header x,z,a,b0,b1,c,p.
void write_bsm_csv(std::ostream& out, const BsmDistribution& d);

}  // namespace qnetmax
