#include "qnetmax/correlations.hpp"

#include "qnetmax/error.hpp"

#include <cmath>
#include <string>

namespace qnetmax {

namespace {

MeasurementVector branciard_vector(int x) {
  const double h = 1.0 / std::sqrt(2.0);
  return MeasurementVector::normalized(Vector3(x == 0 ? h : -h, 0.0, h));
}

// tr(P rho) for square P, rho of equal size.
double trace_product(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& rho) {
  return p.transpose().cwiseProduct(rho).sum().real();
}

int bit(std::size_t word, std::size_t k) { return static_cast<int>((word >> k) & 1u); }

int parity(std::size_t word) {
  int p = 0;
  while (word) {
    p ^= static_cast<int>(word & 1u);
    word >>= 1;
  }
  return p;
}

}  // namespace

BilocalSettings BilocalSettings::branciard() {
  const auto z = MeasurementVector::z_axis();
  const auto x = MeasurementVector::x_axis();
  return {branciard_vector(0), branciard_vector(1), z, x, z, x, branciard_vector(0), branciard_vector(1)};
}

StarSettings StarSettings::branciard(std::size_t n) {
  StarSettings s;
  for (std::size_t i = 0; i < n; ++i)
    s.branches.push_back({branciard_vector(0), branciard_vector(1), MeasurementVector::z_axis(),
                          MeasurementVector::x_axis()});
  return s;
}

StarSettings as_star_settings(const BilocalSettings& s) {
  StarSettings out;
  out.branches.push_back({s.a0, s.a1, s.bA0, s.bA1});
  out.branches.push_back({s.c0, s.c1, s.bC0, s.bC1});
  return out;
}

OutcomeDistribution::OutcomeDistribution(std::size_t parties)
    : parties_(parties), rows_(std::size_t{1} << parties) {}

bool OutcomeDistribution::has_row(std::size_t inputs) const {
  return inputs < rows_.size() && !rows_[inputs].empty();
}

std::span<const double> OutcomeDistribution::row(std::size_t inputs) const {
  if (!has_row(inputs))
    throw Error(ErrorKind::MissingInputTuple, "no outcome row for input tuple " + std::to_string(inputs));
  return rows_[inputs];
}

void OutcomeDistribution::set_row(std::size_t inputs, std::vector<double> probabilities) {
  if (inputs >= rows_.size() || probabilities.size() != (std::size_t{1} << parties_))
    throw Error(ErrorKind::ParameterOutOfRange, "outcome row has the wrong shape");
  rows_[inputs] = std::move(probabilities);
}

double OutcomeDistribution::p(std::size_t inputs, std::size_t outputs) const { return row(inputs)[outputs]; }

double OutcomeDistribution::max_normalization_error() const {
  double worst = 0.0;
  for (const auto& r : rows_) {
    if (r.empty()) continue;
    double sum = 0.0;
    for (double v : r) sum += v;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double OutcomeDistribution::min_entry() const {
  double lo = 1.0;
  for (const auto& r : rows_)
    for (double v : r) lo = std::min(lo, v);
  return lo;
}

std::size_t pack_bits(std::span<const int> bits) {
  std::size_t word = 0;
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k]) word |= std::size_t{1} << k;
  return word;
}

double two_body_correlator(const TwoQubitState& rho, const Vector3& u, const Vector3& w) {
  return u.dot(correlation_matrix(rho).t * w);
}

BilocalValue bilocality_value(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                              const BilocalSettings& s) {
  const Matrix3 tab = correlation_matrix(rho_ab).t;
  const Matrix3 tbc = correlation_matrix(rho_bc).t;
  const Vector3 plus_a = s.a0.vec() + s.a1.vec();
  const Vector3 minus_a = s.a0.vec() - s.a1.vec();
  const Vector3 plus_c = s.c0.vec() + s.c1.vec();
  const Vector3 minus_c = s.c0.vec() - s.c1.vec();

  BilocalValue v;
  v.I = 0.25 * plus_a.dot(tab * s.bA0.vec()) * s.bC0.vec().dot(tbc * plus_c);
  v.J = 0.25 * minus_a.dot(tab * s.bA1.vec()) * s.bC1.vec().dot(tbc * minus_c);
  v.B = std::sqrt(std::abs(v.I)) + std::sqrt(std::abs(v.J));
  return v;
}

OutcomeDistribution outcome_distribution(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc,
                                         const BilocalSettings& s) {
  const Eigen::MatrixXcd rho = kron(rho_ab.matrix(), rho_bc.matrix());
  const MeasurementVector* a[2] = {&s.a0, &s.a1};
  const MeasurementVector* ba[2] = {&s.bA0, &s.bA1};
  const MeasurementVector* bc[2] = {&s.bC0, &s.bC1};
  const MeasurementVector* c[2] = {&s.c0, &s.c1};

  OutcomeDistribution d(3);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        std::vector<double> probs(8, 0.0);
        for (int oa = 0; oa < 2; ++oa)
          for (int oba = 0; oba < 2; ++oba)
            for (int obc = 0; obc < 2; ++obc)
              for (int oc = 0; oc < 2; ++oc) {
                const Eigen::MatrixXcd proj =
                    kron(kron(outcome_projector(a[x]->vec(), oa), outcome_projector(ba[y]->vec(), oba)),
                         kron(outcome_projector(bc[y]->vec(), obc), outcome_projector(c[z]->vec(), oc)));
                const int ob = oba ^ obc;
                probs[static_cast<std::size_t>(oa | (ob << 1) | (oc << 2))] += trace_product(proj, rho);
              }
        const int in[3] = {x, y, z};
        d.set_row(pack_bits(in), std::move(probs));
      }
  return d;
}

double correlator_from_distribution(const OutcomeDistribution& d, std::span<const int> inputs) {
  if (inputs.size() != d.parties())
    throw Error(ErrorKind::MissingInputTuple, "input tuple has " + std::to_string(inputs.size()) +
                                                  " entries, distribution has " + std::to_string(d.parties()) +
                                                  " parties");
  const auto r = d.row(pack_bits(inputs));
  double value = 0.0;
  for (std::size_t out = 0; out < r.size(); ++out) value += (parity(out) ? -1.0 : 1.0) * r[out];
  return value;
}

double correlator_from_distribution(const OutcomeDistribution& d, int x, int y, int z) {
  const int in[3] = {x, y, z};
  return correlator_from_distribution(d, in);
}

BilocalValue bilocality_from_distribution(const OutcomeDistribution& d) {
  BilocalValue v;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      const double sign = ((x + z) % 2 == 0) ? 1.0 : -1.0;
      v.I += 0.25 * correlator_from_distribution(d, x, 0, z);
      v.J += 0.25 * sign * correlator_from_distribution(d, x, 1, z);
    }
  v.B = std::sqrt(std::abs(v.I)) + std::sqrt(std::abs(v.J));
  return v;
}

namespace {

void check_arity(const NetworkConfig& states, const StarSettings& s) {
  if (states.empty()) throw Error(ErrorKind::EmptyNetwork, "star network needs at least one source");
  if (s.branches.size() != states.size())
    throw Error(ErrorKind::SettingsArityMismatch, std::to_string(states.size()) + " sources but " +
                                                      std::to_string(s.branches.size()) + " branch settings");
}

}  // namespace

StarValue star_value(const NetworkConfig& states, const StarSettings& s) {
  check_arity(states, s);
  StarValue v{1.0, 1.0, 0.0};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Matrix3 t = correlation_matrix(states[i]).t;
    const auto& b = s.branches[i];
    v.I *= 0.5 * (b.a0.vec() + b.a1.vec()).dot(t * b.b0.vec());
    v.J *= 0.5 * (b.a0.vec() - b.a1.vec()).dot(t * b.b1.vec());
  }
  const double inv_n = 1.0 / static_cast<double>(states.size());
  v.N = std::pow(std::abs(v.I), inv_n) + std::pow(std::abs(v.J), inv_n);
  return v;
}

OutcomeDistribution star_outcome_distribution(const NetworkConfig& states, const StarSettings& s) {
  check_arity(states, s);
  const std::size_t n = states.size();
  Eigen::MatrixXcd rho = states[0].matrix();
  for (std::size_t i = 1; i < n; ++i) rho = kron(rho, states[i].matrix());

  OutcomeDistribution d(n + 1);
  const std::size_t sub_outcomes = std::size_t{1} << (2 * n);
  for (std::size_t inputs = 0; inputs < (std::size_t{1} << (n + 1)); ++inputs) {
    const int y = bit(inputs, n);
    std::vector<double> probs(std::size_t{1} << (n + 1), 0.0);
    // Sub-outcome word: bit 2i is a_i, bit 2i+1 is the central outcome on branch i.
    for (std::size_t word = 0; word < sub_outcomes; ++word) {
      Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(1, 1);
      std::size_t outputs = 0;
      int b = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& br = s.branches[i];
        const int x = bit(inputs, i);
        const int oa = bit(word, 2 * i);
        const int ob = bit(word, 2 * i + 1);
        proj = kron(proj, kron(outcome_projector((x ? br.a1 : br.a0).vec(), oa),
                               outcome_projector((y ? br.b1 : br.b0).vec(), ob)));
        outputs |= static_cast<std::size_t>(oa) << i;
        b ^= ob;
      }
      outputs |= static_cast<std::size_t>(b) << n;
      probs[outputs] += trace_product(proj, rho);
    }
    d.set_row(inputs, std::move(probs));
  }
  return d;
}

StarValue star_from_distribution(const OutcomeDistribution& d) {
  const std::size_t n = d.parties() - 1;
  const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
  StarValue v;
  std::vector<int> in(n + 1, 0);
  for (std::size_t xs = 0; xs < (std::size_t{1} << n); ++xs) {
    for (std::size_t i = 0; i < n; ++i) in[i] = bit(xs, i);
    const double sign = parity(xs) ? -1.0 : 1.0;
    in[n] = 0;
    v.I += scale * correlator_from_distribution(d, in);
    in[n] = 1;
    v.J += scale * sign * correlator_from_distribution(d, in);
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  v.N = std::pow(std::abs(v.I), inv_n) + std::pow(std::abs(v.J), inv_n);
  return v;
}

}  // namespace qnetmax
