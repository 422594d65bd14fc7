#pragma once

#include "fockbench/operators.hpp"
#include "fockbench/oscillator.hpp"
#include "fockbench/state.hpp"
#include "fockbench/types.hpp"

namespace fockbench {

/// First and second moments of x and p, plus the derived energy-difference
/// quantities. K is the symmetrized correlation <xp + px>/2 - <x><p>.
struct MomentSet {
  OscillatorParams params;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double corr_k = 0.0;

  /// delta T = <T> - Tbar = var_p / 2m.
  double delta_t() const { return var_p / (2.0 * params.mass); }
  /// delta V = <V> - Vbar = m omega^2 var_x / 2.
  double delta_v() const {
    return 0.5 * params.mass * params.omega * params.omega * var_x;
  }
  double delta_h() const { return delta_t() + delta_v(); }
  double delta_l() const { return delta_t() - delta_v(); }

  /// <a> reconstructed from the means (exact: x and p are linear in a, a^dag).
  Complex alpha() const {
    const double s = params.sigma();
    const double inv_sqrt2 = 0.70710678118654752440;
    return {mean_x * inv_sqrt2 / s, mean_p * s * inv_sqrt2 / params.hbar};
  }
  /// Energy of the expectation values, hbar omega |alpha|^2.
  double ebar() const { return params.quantum() * std::norm(alpha()); }

  double uncertainty_product() const { return std::sqrt(var_x * var_p); }
};

/// Moments of a pure state. Warns when the top-level occupancy exceeds
/// kTailWarnThreshold. Throws on dimension mismatch.
MomentSet moments(const PureState& psi, const OperatorSet& ops);

/// Same via Tr[rho A].
MomentSet moments(const DensityMatrix& rho, const OperatorSet& ops);

/// ||(a - alpha)|psi>||^2 with alpha = <a>. Zero exactly on annihilation
/// eigenstates; relates to the energy difference by
/// hbar omega (residual + 1/2) = delta_h away from the truncation edge.
double eigen_residual(const PureState& psi, const OperatorSet& ops);

}  // namespace fockbench
