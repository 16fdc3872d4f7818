#include "qnetmax/linalg.hpp"

#include "qnetmax/error.hpp"

namespace qnetmax {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::EmptyNetwork: return "EmptyNetwork";
    case ErrorKind::MissingInputTuple: return "MissingInputTuple";
    case ErrorKind::SettingsArityMismatch: return "SettingsArityMismatch";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

const Matrix2c& pauli(int axis) {
  static const std::array<Matrix2c, 3> sigma = [] {
    std::array<Matrix2c, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, cx(0, -1), cx(0, 1), 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(axis));
}

Matrix2c bloch_operator(const Vector3& v) {
  return v(0) * pauli(0) + v(1) * pauli(1) + v(2) * pauli(2);
}

Matrix2c outcome_projector(const Vector3& v, int outcome) {
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (Matrix2c::Identity() + sign * bloch_operator(v));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix3 bloch_rotation(const Matrix2c& u) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = 0.5 * (pauli(i) * u * pauli(j) * u.adjoint()).trace().real();
  return r;
}

Matrix2c random_unitary2(std::mt19937_64& rng) {
  // Normalized complex Gaussian 4-vector -> uniform point on S³ -> Haar SU(2).
  std::normal_distribution<double> gauss;
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q(i) = gauss(rng);
  q.normalize();
  const cx alpha(q(0), q(1));
  const cx beta(q(2), q(3));
  Matrix2c u;
  u << alpha, -std::conj(beta), beta, std::conj(alpha);
  return u;
}

Vector3 random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector3 v;
  do {
    v << gauss(rng), gauss(rng), gauss(rng);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

}  // namespace qnetmax
