#include "qnetmax/qstate.hpp"

#include "qnetmax/error.hpp"

#include <cstdio>

namespace qnetmax {

namespace {

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::string residual_text(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0))
    throw Error(ErrorKind::ParameterOutOfRange,
                std::string(name) + " = " + std::to_string(value) + " is outside [0, 1]");
}

Matrix4c projector(const Eigen::Vector4cd& psi) { return psi * psi.adjoint(); }

}  // namespace

Eigen::Vector4d hermitian_eigenvalues(const Matrix4c& m) {
  const Matrix4c h = 0.5 * (m + m.adjoint());
  return jacobi_eigen<cx, 4>(h, 1e-12, 100).values;
}

TwoQubitState TwoQubitState::make(const Matrix4c& entries, std::optional<std::string> label) {
  const double herm = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStateTolerance)
    throw Error(ErrorKind::NotHermitian,
                "max |rho_ij - conj(rho_ji)| = " + residual_text(herm) + " exceeds 1e-9");

  const double trace_err = std::abs(entries.trace().real() - 1.0);
  if (trace_err > kStateTolerance)
    throw Error(ErrorKind::TraceNotOne, "|tr(rho) - 1| = " + residual_text(trace_err) + " exceeds 1e-9");

  const double min_eig = hermitian_eigenvalues(entries)(3);
  if (min_eig < -kStateTolerance)
    throw Error(ErrorKind::NotPSD, "smallest eigenvalue " + residual_text(min_eig) + " is below -1e-9");

  return TwoQubitState(entries, std::move(label));
}

TwoQubitState TwoQubitState::with_label(std::string label) const {
  return TwoQubitState(rho_, std::move(label));
}

TwoQubitState TwoQubitState::swapped() const {
  // Permutation |ab> -> |ba| swaps indices 1 and 2.
  Eigen::PermutationMatrix<4> swap;
  swap.indices() << 0, 2, 1, 3;
  Matrix4c out = swap * rho_ * swap.transpose();
  return TwoQubitState(out, label_);
}

TwoQubitState TwoQubitState::local_unitary(const Matrix2c& u1, const Matrix2c& u2) const {
  const Matrix4c u = kron2(u1, u2);
  return TwoQubitState(u * rho_ * u.adjoint(), label_);
}

double TwoQubitState::purity() const { return (rho_ * rho_).trace().real(); }

MeasurementVector::MeasurementVector(const Vector3& v) : v_(v) {
  const double dev = std::abs(v.norm() - 1.0);
  if (dev > 1e-9)
    throw Error(ErrorKind::ParameterOutOfRange, "measurement vector norm deviates from 1 by " + residual_text(dev));
}

MeasurementVector MeasurementVector::normalized(const Vector3& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "cannot normalize a zero measurement vector");
  return MeasurementVector(v / n, Trusted{});
}

std::string_view to_string(BellState which) {
  switch (which) {
    case BellState::PhiPlus: return "phi+";
    case BellState::PhiMinus: return "phi-";
    case BellState::PsiPlus: return "psi+";
    case BellState::PsiMinus: return "psi-";
  }
  return "?";
}

std::optional<BellState> parse_bell_state(std::string_view name) {
  for (auto b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
    if (to_string(b) == name) return b;
  return std::nullopt;
}

Eigen::Vector4cd bell_vector(BellState which) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (which) {
    case BellState::PhiPlus: v(0) = h; v(3) = h; break;
    case BellState::PhiMinus: v(0) = h; v(3) = -h; break;
    case BellState::PsiPlus: v(1) = h; v(2) = h; break;
    case BellState::PsiMinus: v(1) = h; v(2) = -h; break;
  }
  return v;
}

TwoQubitState make_state(const Matrix4c& entries, std::optional<std::string> label) {
  return TwoQubitState::make(entries, std::move(label));
}

TwoQubitState bell_state(BellState which) {
  return TwoQubitState::make(projector(bell_vector(which)), std::string(to_string(which)));
}

TwoQubitState maximally_mixed_state() { return TwoQubitState::make(Matrix4c::Identity() / 4.0, "mixed"); }

TwoQubitState werner_state(double v) {
  require_unit_interval(v, "v");
  const Matrix4c rho = v * projector(bell_vector(BellState::PsiMinus)) + (1.0 - v) * Matrix4c::Identity() / 4.0;
  return TwoQubitState::make(rho, "werner");
}

TwoQubitState colored_noise_state(double v, double lambda) {
  require_unit_interval(v, "v");
  require_unit_interval(lambda, "lambda");
  const Matrix4c psi_minus = projector(bell_vector(BellState::PsiMinus));
  const Matrix4c psi_plus = projector(bell_vector(BellState::PsiPlus));
  const Matrix4c noise = lambda * (psi_minus + psi_plus) / 2.0 + (1.0 - lambda) * Matrix4c::Identity() / 4.0;
  return TwoQubitState::make(v * psi_minus + (1.0 - v) * noise, "colored");
}

TwoQubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = cx(re, im);
    }
  Matrix4c rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exact Hermiticity; the product is Hermitian only up to rounding.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return TwoQubitState::make(rho, "random");
}

TwoQubitState random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_state(rng);
}

CorrelationMatrix correlation_matrix(const TwoQubitState& rho) {
  CorrelationMatrix out;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m)
      out.t(n, m) = (rho.matrix() * kron2(pauli(n), pauli(m))).trace().real();
  return out;
}

BlochVectors bloch_vectors(const TwoQubitState& rho) {
  BlochVectors out;
  const Matrix2c id = Matrix2c::Identity();
  for (int n = 0; n < 3; ++n) {
    out.r(n) = (rho.matrix() * kron2(pauli(n), id)).trace().real();
    out.s(n) = (rho.matrix() * kron2(id, pauli(n))).trace().real();
  }
  return out;
}

}  // namespace qnetmax
