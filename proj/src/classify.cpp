#include "qnetmax/classify.hpp"

#include "qnetmax/criteria.hpp"
#include "qnetmax/error.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qnetmax {

namespace {

ScanRow make_row(double p1, double p2, const TwoQubitState& ab, const TwoQubitState& bc) {
  const TSpectrum sa = t_spectrum(ab);
  const TSpectrum sc = t_spectrum(bc);
  ScanRow row{p1, p2, chsh_max(sa), chsh_max(sc), bilocality_max(sa, sc), {}};
  row.flags = {violates(row.s_ab), violates(row.s_bc), violates(row.b_max)};
  return row;
}

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

RegionFlags classify_pair(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc) {
  return make_row(0, 0, rho_ab, rho_bc).flags;
}

std::vector<ScanRow> werner_scan(const std::vector<std::pair<double, double>>& grid) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (const auto& [vab, vbc] : grid) rows.push_back(make_row(vab, vbc, werner_state(vab), werner_state(vbc)));
  return rows;
}

std::vector<ScanRow> colored_scan(const std::vector<std::pair<double, double>>& grid) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (const auto& [v, lambda] : grid) {
    const TwoQubitState rho = colored_noise_state(v, lambda);
    rows.push_back(make_row(v, lambda, rho, rho));
  }
  return rows;
}

void write_scan_csv(std::ostream& out, ScanFamily family, const std::vector<ScanRow>& rows) {
  out << (family == ScanFamily::Werner ? "v_ab,v_bc" : "v,lambda")
      << ",s_ab,s_bc,b_max,ab_nl,bc_nl,nonbiloc\n";
  for (const auto& r : rows) {
    out << num(r.p1) << ',' << num(r.p2) << ',' << num(r.s_ab) << ',' << num(r.s_bc) << ',' << num(r.b_max)
        << ',' << int(r.flags.ab_nonlocal) << ',' << int(r.flags.bc_nonlocal) << ',' << int(r.flags.nonbilocal)
        << '\n';
  }
}

std::vector<double> grid_axis(double start, double stop, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "grid step must be positive");
  if (stop < start) throw Error(ErrorKind::ParameterOutOfRange, "grid stop is below start");
  // Index-based points avoid accumulating rounding from repeated addition.
  const auto count = static_cast<long>(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> axis;
  axis.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) axis.push_back(start + static_cast<double>(i) * step);
  if (std::abs(axis.back() - stop) <= 1e-9 * step) axis.back() = stop;
  return axis;
}

}  // namespace qnetmax
