#pragma once

#include "qnetmax/qstate.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qnetmax {

/// Regions of the CHSH / bilocality Venn diagram a source pair falls into.
/// All comparisons are strict against 1. S_AB, S_BC <= 1 rules out
/// {false, false, true}.
struct RegionFlags {
  bool ab_nonlocal = false;
  bool bc_nonlocal = false;
  bool nonbilocal = false;

  bool operator==(const RegionFlags&) const = default;
};

RegionFlags classify_pair(const TwoQubitState& rho_ab, const TwoQubitState& rho_bc);

struct ScanRow {
  double p1 = 0.0;  ///< v_AB (werner) or v (colored)
  double p2 = 0.0;  ///< v_BC (werner) or λ (colored)
  double s_ab = 0.0;
  double s_bc = 0.0;
  double b_max = 0.0;
  RegionFlags flags;
};

/// One row per (v_AB, v_BC) grid point, both sources Werner states.
/// Throws ParameterOutOfRange for values outside [0, 1].
std::vector<ScanRow> werner_scan(const std::vector<std::pair<double, double>>& grid);

/// One row per (v, λ) grid point with both sources equal to ρ(v, λ).
std::vector<ScanRow> colored_scan(const std::vector<std::pair<double, double>>& grid);

enum class ScanFamily { Werner, Colored };

/// CSV: "v_ab,v_bc,..." for Werner, "v,lambda,..." for colored; floats at
/// 12 significant digits, flags as 0/1.
void write_scan_csv(std::ostream& out, ScanFamily family, const std::vector<ScanRow>& rows);

/// Points start, start+step, ... up to stop (inclusive within half a step).
/// Throws ParameterOutOfRange on a non-positive step or stop < start.
std::vector<double> grid_axis(double start, double stop, double step);

}  // namespace qnetmax
