#include "qnetmax/criteria.hpp"

#include "qnetmax/error.hpp"

#include <cmath>

namespace qnetmax {

namespace {

// TᵀT is PSD, so negative eigenvalues are round-off.
double clamp_nonnegative(double x) { return x < 0.0 ? 0.0 : x; }

}  // namespace

NetworkConfig bilocal_network(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc) {
  return {rho_ab, rho_bc.swapped()};
}

JacobiResult<double, 3> symmetric_eigen3(const Matrix3& m) {
  return jacobi_eigen<double, 3>(m, 1e-12, 64);
}

TSpectrum t_spectrum(const CorrelationMatrix& t) {
  const Matrix3 gram = t.t.transpose() * t.t;
  const auto eig = symmetric_eigen3(gram);
  return {clamp_nonnegative(eig.values(0)), clamp_nonnegative(eig.values(1)),
          clamp_nonnegative(eig.values(2))};
}

TSpectrum t_spectrum(const TwoQubitState& rho) { return t_spectrum(correlation_matrix(rho)); }

double chsh_max(const TSpectrum& s) { return std::sqrt(s.t1 + s.t2); }

double chsh_max(const TwoQubitState& rho) { return chsh_max(t_spectrum(rho)); }

double bilocality_max(const TSpectrum& ab, const TSpectrum& bc) {
  return std::sqrt(std::sqrt(ab.t1 * bc.t1) + std::sqrt(ab.t2 * bc.t2));
}

double bilocality_max(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc) {
  return bilocality_max(t_spectrum(rho_ab), t_spectrum(rho_bc));
}

double star_max(std::span<const TSpectrum> spectra) {
  if (spectra.empty()) throw Error(ErrorKind::EmptyNetwork, "star network needs at least one source");
  const double n = static_cast<double>(spectra.size());
  // Geometric means through logs keep large-n products from underflowing.
  double log1 = 0.0;
  double log2 = 0.0;
  bool zero1 = false;
  bool zero2 = false;
  for (const auto& s : spectra) {
    if (s.t1 <= 0.0) zero1 = true; else log1 += std::log(s.t1);
    if (s.t2 <= 0.0) zero2 = true; else log2 += std::log(s.t2);
  }
  const double g1 = zero1 ? 0.0 : std::exp(log1 / n);
  const double g2 = zero2 ? 0.0 : std::exp(log2 / n);
  return std::sqrt(g1 + g2);
}

double star_max(const NetworkConfig& states) {
  std::vector<TSpectrum> spectra;
  spectra.reserve(states.size());
  for (const auto& s : states) spectra.push_back(t_spectrum(s));
  return star_max(spectra);
}

PhiPlusComparison phi_plus_comparison(const TwoQubitState& rho_bc) {
  const TSpectrum bc = t_spectrum(rho_bc);
  return {std::sqrt(std::sqrt(bc.t1) + std::sqrt(bc.t2)), chsh_max(bc)};
}

MaxReport max_report(const NetworkConfig& states) {
  if (states.empty()) throw Error(ErrorKind::EmptyNetwork, "no sources given");
  MaxReport report;
  for (const auto& s : states) {
    report.spectra.push_back(t_spectrum(s));
    report.chsh_per_link.push_back(chsh_max(report.spectra.back()));
  }
  if (states.size() == 2)
    report.biloc_or_star = bilocality_max(report.spectra[0], report.spectra[1]);
  else if (states.size() > 2)
    report.biloc_or_star = star_max(report.spectra);
  return report;
}

}  // namespace qnetmax
