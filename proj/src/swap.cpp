#include "qnetmax/swap.hpp"

#include "qnetmax/error.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qnetmax {

namespace {

// Bell projectors written directly in the computational basis; every entry
// is 0 or ±1/2, so sums of them are exact.
Matrix4c bell_projector(int b0b1) {
  Matrix4c p = Matrix4c::Zero();
  switch (b0b1) {
    case 0:  // φ⁺
      p(0, 0) = p(3, 3) = p(0, 3) = p(3, 0) = 0.5;
      break;
    case 1:  // φ⁻
      p(0, 0) = p(3, 3) = 0.5;
      p(0, 3) = p(3, 0) = -0.5;
      break;
    case 2:  // ψ⁺
      p(1, 1) = p(2, 2) = p(1, 2) = p(2, 1) = 0.5;
      break;
    case 3:  // ψ⁻
      p(1, 1) = p(2, 2) = 0.5;
      p(1, 2) = p(2, 1) = -0.5;
      break;
    default:
      throw Error(ErrorKind::ParameterOutOfRange, "BSM outcome must be in 0..3");
  }
  return p;
}

double trace_product(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& rho) {
  return p.transpose().cwiseProduct(rho).sum().real();
}

Matrix4c kron22(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

BellState bell_outcome(int b0b1) {
  static constexpr BellState order[4] = {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                                         BellState::PsiMinus};
  if (b0b1 < 0 || b0b1 > 3) throw Error(ErrorKind::ParameterOutOfRange, "BSM outcome must be in 0..3");
  return order[b0b1];
}

BsmDistribution::BsmDistribution() = default;

double BsmDistribution::max_normalization_error() const {
  double worst = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 2; ++c) sum += p(x, z, a, b, c);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  return worst;
}

double BsmDistribution::min_entry() const {
  double lo = 1.0;
  for (double v : table_) lo = std::min(lo, v);
  return lo;
}

BsmDistribution BsmDistribution::uniform() {
  BsmDistribution d;
  d.table_.fill(1.0 / 16.0);
  return d;
}

BsmDistribution bsm_distribution(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                                 const MeasurementVector& a0, const MeasurementVector& a1,
                                 const MeasurementVector& c0, const MeasurementVector& c1) {
  const Eigen::MatrixXcd rho = kron(rho_ab.matrix(), rho_bc.matrix());
  const MeasurementVector* a[2] = {&a0, &a1};
  const MeasurementVector* c[2] = {&c0, &c1};
  BsmDistribution d;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z)
      for (int oa = 0; oa < 2; ++oa)
        for (int b = 0; b < 4; ++b) {
          const Eigen::MatrixXcd left = kron(outcome_projector(a[x]->vec(), oa), bell_projector(b));
          for (int oc = 0; oc < 2; ++oc)
            d.set(x, z, oa, b, oc, trace_product(kron(left, outcome_projector(c[z]->vec(), oc)), rho));
        }
  return d;
}

double bsm_correlator(const BsmDistribution& d, int x, int y, int z) {
  double value = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 2; ++c) {
        const int sign_ac = ((a + c) % 2 == 0) ? 1 : -1;
        value += sign_ac * kBsmSign[static_cast<std::size_t>(y)][static_cast<std::size_t>(b)] * d.p(x, z, a, b, c);
      }
  return value;
}

BilocalValue bsm_bilocality(const BsmDistribution& d) {
  BilocalValue v;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      const double sign = ((x + z) % 2 == 0) ? 1.0 : -1.0;
      v.I += 0.25 * bsm_correlator(d, x, 0, z);
      v.J += 0.25 * sign * bsm_correlator(d, x, 1, z);
    }
  v.B = std::sqrt(std::abs(v.I)) + std::sqrt(std::abs(v.J));
  return v;
}

Matrix4c bsm_observable(int y) {
  Matrix4c op = Matrix4c::Zero();
  for (int b = 0; b < 4; ++b)
    op += static_cast<double>(kBsmSign[static_cast<std::size_t>(y)][static_cast<std::size_t>(b)]) * bell_projector(b);
  return op;
}

double theorem1_check(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc, const MeasurementVector& a0,
                      const MeasurementVector& a1, const MeasurementVector& c0, const MeasurementVector& c1) {
  const BsmDistribution d = bsm_distribution(rho_ab, rho_bc, a0, a1, c0, c1);
  const Eigen::MatrixXcd rho = kron(rho_ab.matrix(), rho_bc.matrix());
  const Matrix4c separable[2] = {kron22(pauli(2), pauli(2)), kron22(pauli(0), pauli(0))};
  const MeasurementVector* a[2] = {&a0, &a1};
  const MeasurementVector* c[2] = {&c0, &c1};

  double worst = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        const Eigen::MatrixXcd op =
            kron(kron(bloch_operator(a[x]->vec()), separable[y]), bloch_operator(c[z]->vec()));
        const double sep = trace_product(op, rho);
        worst = std::max(worst, std::abs(bsm_correlator(d, x, y, z) - sep));
      }
  return worst;
}

Matrix4c rotated_bsm_observable(int y, const Matrix2c& u1, const Matrix2c& u2) {
  const Matrix4c u = kron22(u1, u2);
  return u.adjoint() * bsm_observable(y) * u;
}

Matrix3 pauli_product_coefficients(const Matrix4c& op) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = 0.25 * (op * kron22(pauli(i), pauli(j))).trace().real();
  return m;
}

SeparableFactor separable_factor(const Matrix4c& op) {
  const Matrix3 m = pauli_product_coefficients(op);
  Eigen::JacobiSVD<Matrix3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SeparableFactor f;
  f.a = svd.matrixU().col(0);
  f.c = svd.matrixV().col(0);
  f.residual = (m - f.a * f.c.transpose()).norm();
  return f;
}

void write_bsm_csv(std::ostream& out, const BsmDistribution& d) {
  out << "x,z,a,b0,b1,c,p\n";
  char buf[64];
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 2; ++c) {
            std::snprintf(buf, sizeof buf, "%.12g", d.p(x, z, a, b, c));
            out << x << ',' << z << ',' << a << ',' << (b >> 1) << ',' << (b & 1) << ',' << c << ',' << buf << '\n';
          }
}

}  // namespace qnetmax
