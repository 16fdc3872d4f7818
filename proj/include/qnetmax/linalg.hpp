#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace qnetmax {

using cx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

/// Pauli matrices indexed 0,1,2 for x,y,z.
const Matrix2c& pauli(int axis);

/// v·σ for a real 3-vector.
Matrix2c bloch_operator(const Vector3& v);

/// Projector (I + (-1)^outcome v·σ)/2 onto the eigenspace of v·σ with
/// eigenvalue (-1)^outcome. v must be a unit vector.
Matrix2c outcome_projector(const Vector3& v, int outcome);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Result of a cyclic Jacobi diagonalization. Eigenvalues are sorted in
/// descending order; column k of `vectors` belongs to `values[k]`.
template <typename Scalar, int N>
struct JacobiResult {
  Eigen::Matrix<double, N, 1> values;
  Eigen::Matrix<Scalar, N, N> vectors;
  int sweeps = 0;
  bool converged = false;
};

namespace detail {
inline double abs2(double x) { return x * x; }
inline double abs2(const cx& z) { return std::norm(z); }
inline double re(double x) { return x; }
inline double re(const cx& z) { return z.real(); }
inline double conj(double x) { return x; }
inline cx conj(const cx& z) { return std::conj(z); }
}  // namespace detail

/// Cyclic Jacobi eigen-decomposition of a symmetric (real) or Hermitian
/// (complex) matrix. Iterates until the off-diagonal Frobenius norm drops
/// below `tol` or `max_sweeps` sweeps have run.
template <typename Scalar, int N>
JacobiResult<Scalar, N> jacobi_eigen(const Eigen::Matrix<Scalar, N, N>& input, double tol,
                                     int max_sweeps) {
  using Mat = Eigen::Matrix<Scalar, N, N>;
  Mat a = input;
  Mat v = Mat::Identity();
  const int n = static_cast<int>(a.rows());

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += detail::abs2(a(i, j));
    return std::sqrt(s);
  };

  JacobiResult<Scalar, N> out;
  while (off_norm() > tol && out.sweeps < max_sweeps) {
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double mag = std::sqrt(detail::abs2(a(p, q)));
        if (mag == 0.0) continue;
        // Phase e^{iφ} of a(p,q); the unitary diag(1, e^{-iφ}) on index q
        // makes the pivot real before the real Givens rotation.
        const Scalar phase = a(p, q) / mag;
        const double app = detail::re(a(p, p));
        const double aqq = detail::re(a(q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // G = D R with D = diag(.., 1 at p, conj(phase) at q, ..) and
        // R the real rotation [[c, s], [-s, c]] on (p,q). A <- G^H A G.
        Mat g = Mat::Identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * detail::conj(phase);
        g(q, q) = c * detail::conj(phase);
        a = (g.adjoint() * a * g).eval();
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        v = (v * g).eval();
      }
    }
  }
  out.converged = off_norm() <= tol;

  std::array<int, N> order{};
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return detail::re(a(i, i)) > detail::re(a(j, j)); });
  for (int k = 0; k < n; ++k) {
    out.values(k) = detail::re(a(order[k], order[k]));
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

/// SO(3) matrix R with U (v·σ) U† = (R v)·σ, i.e. R_ij = tr(σ_i U σ_j U†)/2.
Matrix3 bloch_rotation(const Matrix2c& u);

/// Haar-random single-qubit unitary.
Matrix2c random_unitary2(std::mt19937_64& rng);

/// Uniform random unit vector in R³.
Vector3 random_unit_vector(std::mt19937_64& rng);

}  // namespace qnetmax
