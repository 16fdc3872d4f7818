#pragma once

#include "qnetmax/criteria.hpp"
#include "qnetmax/qstate.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qnetmax {

/// Measurement settings for the bilocal scenario. Station B measures
/// (bA_y·σ) ⊗ (bC_y·σ) on its two qubits.
struct BilocalSettings {
  MeasurementVector a0, a1;
  MeasurementVector bA0, bA1;
  MeasurementVector bC0, bC1;
  MeasurementVector c0, c1;

  /// A_x = C_z = (σ_z + (-1)^x σ_x)/√2, B_0 = σ_z ⊗ σ_z, B_1 = σ_x ⊗ σ_x.
  static BilocalSettings branciard();
};

/// Per-branch settings of a star network: branch party i measures a_i{0,1},
/// the central node measures ⊗_i (b_i{y}·σ).
struct BranchSettings {
  MeasurementVector a0, a1;
  MeasurementVector b0, b1;
};

struct StarSettings {
  std::vector<BranchSettings> branches;

  /// Branciard-style settings on every branch.
  static StarSettings branciard(std::size_t n);
};

/// The star settings equivalent to a bilocal setting, with A_2 = C.
StarSettings as_star_settings(const BilocalSettings& s);

/// Outcome table p(outputs | inputs) over `parties` binary parties. Inputs
/// and outputs are bit-packed, party k at bit k. The bilocal scenario uses
/// party order (A, B, C); the star network uses (A_1, ..., A_n, B).
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::size_t parties);

  std::size_t parties() const noexcept { return parties_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }

  bool has_row(std::size_t inputs) const;
  std::span<const double> row(std::size_t inputs) const;
  void set_row(std::size_t inputs, std::vector<double> probabilities);

  double p(std::size_t inputs, std::size_t outputs) const;

  /// Largest deviation from normalization, and most negative entry, over
  /// every present row.
  double max_normalization_error() const;
  double min_entry() const;

 private:
  std::size_t parties_;
  std::vector<std::vector<double>> rows_;
};

/// Packs per-party bits into an index (party k at bit k).
std::size_t pack_bits(std::span<const int> bits);

struct BilocalValue {
  double I = 0.0;
  double J = 0.0;
  double B = 0.0;
};

/// I, J and B = sqrt|I| + sqrt|J| via the vector form
/// I = ¼ [(a0+a1)·T_AB bA0] [bC0·T_BC (c0+c1)],
/// J = ¼ [(a0-a1)·T_AB bA1] [bC1·T_BC (c0-c1)].
BilocalValue bilocality_value(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                              const BilocalSettings& s);

/// Exact probabilities p(a,b,c|x,y,z) from projector traces on
/// rho_AB ⊗ rho_BC (qubit order A, B^A, B^C, C). B's outcome is the parity
/// of its two single-qubit outcomes.
OutcomeDistribution outcome_distribution(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                                         const BilocalSettings& s);

/// Σ (-1)^{Σ outputs} p(outputs | inputs). Throws MissingInputTuple.
double correlator_from_distribution(const OutcomeDistribution& d, std::span<const int> inputs);
double correlator_from_distribution(const OutcomeDistribution& d, int x, int y, int z);

/// Assembles I, J, B from a bilocal outcome table (party order A, B, C).
BilocalValue bilocality_from_distribution(const OutcomeDistribution& d);

struct StarValue {
  double I = 0.0;
  double J = 0.0;
  double N = 0.0;
};

/// I = ∏ ½ (a_i0 + a_i1)·T_i b_i0, J = ∏ ½ (a_i0 - a_i1)·T_i b_i1,
/// N = |I|^(1/n) + |J|^(1/n). Throws EmptyNetwork or SettingsArityMismatch.
StarValue star_value(const NetworkConfig& states, const StarSettings& s);

/// Exact outcome table over (A_1..A_n, B) from the full 2^(2n)-dimensional
/// product state. Intended for small n (cost grows as 16^n).
OutcomeDistribution star_outcome_distribution(const NetworkConfig& states, const StarSettings& s);

/// Assembles I, J, N from a star outcome table.
StarValue star_from_distribution(const OutcomeDistribution& d);

/// <(u·σ) ⊗ (w·σ)>_rho = u · T w.
double two_body_correlator(const TwoQubitState& rho, const Vector3& u, const Vector3& w);

}  // namespace qnetmax
