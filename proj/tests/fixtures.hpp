#pragma once

#include "qnetmax/qstate.hpp"

namespace qnetmax::fixtures {

/// (3/5)|ψ+><ψ+| + (2/5)|φ+><φ+|: CHSH-violating, t-spectrum {1, 0.04, 0.04}.
inline TwoQubitState counterexample_ab() {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.2;
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = 0.3;
  return make_state(m, "counterexample_ab");
}

/// ρ(7/10, 1/3): T = diag(-0.7, -0.7, -0.8), t-spectrum {0.64, 0.49, 0.49}.
inline TwoQubitState counterexample_bc() { return colored_noise_state(0.7, 1.0 / 3.0); }

inline TwoQubitState singlet() { return bell_state(BellState::PsiMinus); }

}  // namespace qnetmax::fixtures
