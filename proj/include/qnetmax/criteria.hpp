#pragma once

#include "qnetmax/qstate.hpp"

#include <span>
#include <vector>

namespace qnetmax {

/// An ordered list of sources, each shared between a branch party and the
/// central node. Every state is stored with the branch qubit first and the
/// central qubit second (rho_{A_i B}). A bilocal pair (rho_AB, rho_BC) maps
/// to {rho_AB, rho_BC.swapped()}; see bilocal_network().
using NetworkConfig = std::vector<TwoQubitState>;

NetworkConfig bilocal_network(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc);

/// Descending eigenvalues t1 >= t2 >= t3 of TᵀT (squared singular values of T).
struct TSpectrum {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

/// Eigen-decomposition of a real symmetric 3x3 matrix by cyclic Jacobi
/// rotations (tol 1e-12, at most 64 sweeps). Values descending.
JacobiResult<double, 3> symmetric_eigen3(const Matrix3& m);

TSpectrum t_spectrum(const CorrelationMatrix& t);
TSpectrum t_spectrum(const TwoQubitState& rho);

/// Largest normalized CHSH value sqrt(t1 + t2) reachable with rho.
double chsh_max(const TSpectrum& s);
double chsh_max(const TwoQubitState& rho);

/// Largest bilocality parameter sqrt(sqrt(t1A t1C) + sqrt(t2A t2C)) reachable
/// with separable projective measurements at the central node.
double bilocality_max(const TSpectrum& ab, const TSpectrum& bc);
double bilocality_max(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc);

/// Largest star-network parameter
/// sqrt( (prod t1)^(1/n) + (prod t2)^(1/n) ). Throws EmptyNetwork when empty.
double star_max(std::span<const TSpectrum> spectra);
double star_max(const NetworkConfig& states);

struct PhiPlusComparison {
  double biloc = 0.0;  ///< B_max(|Φ+><Φ+| ⊗ rho_BC)
  double chsh = 0.0;   ///< S_max(rho_BC)
};

/// Compares the bilocality maximum obtained by pairing rho_BC with a
/// maximally entangled source against the CHSH maximum of rho_BC alone.
PhiPlusComparison phi_plus_comparison(const TwoQubitState& rho_bc);

struct MaxReport {
  std::vector<double> chsh_per_link;
  double biloc_or_star = 0.0;  ///< B_max for n = 2, N_star^max otherwise (0 for n = 1)
  std::vector<TSpectrum> spectra;
};

/// Runs every closed-form criterion over a network. For n = 1 only the CHSH
/// maximum is meaningful and biloc_or_star is left at 0.
MaxReport max_report(const NetworkConfig& states);

/// Strict violation test against the classical bound 1 (no tolerance).
inline bool violates(double value) { return value > 1.0; }

}  // namespace qnetmax
