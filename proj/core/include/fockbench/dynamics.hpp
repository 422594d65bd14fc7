#pragma once

#include "fockbench/moments.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/state.hpp"

namespace fockbench {

/// Uniformly sampled closed interval [t0, t1].
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 0.0;
  int n_samples = 0;

  TimeGrid(double t0, double t1, int n_samples);

  double span() const { return t1 - t0; }
  double dt() const { return span() / (n_samples - 1); }
  double t(int i) const { return t0 + i * dt(); }

  /// One full mechanical period starting at t = 0.
  static TimeGrid one_period(const OscillatorParams& params, int n_samples);
};

/// Closed-form Heisenberg evolution of the moments by a time t:
/// means rotate classically, the second moments mix at frequency 2 omega,
/// and K_t = K_0 cos(2wt) + (var_p0/(m w) - m w var_x0)/2 sin(2wt) keeps the
/// set closed under evolution. delta_h is conserved exactly.
MomentSet evolve_moments(const MomentSet& m0, double t);

/// delta L at time t from its initial value and the initial correlation:
/// dL_t = dL0 cos(2wt) - w K0 sin(2wt). Period pi/omega.
double delta_L_t(double dL0, double K0, const OscillatorParams& params,
                 double t);

/// (dx_t dp_t)^2 = (dH/w)^2 - (dL_t/w)^2. Throws InconsistentMomentsError
/// when |dL_t| > dH, which no physical state produces.
double uncertainty_product_sq(double dH, double dL_t,
                              const OscillatorParams& params);

/// Exact Schroedinger evolution on the truncated basis:
/// c_n -> exp(-i omega (n + 1/2) t) c_n.
PureState unitary_evolve(const PureState& psi, const OperatorSet& ops,
                         double t);

}  // namespace fockbench
