#pragma once

#include <string>
#include <vector>

#include "fockbench/dynamics.hpp"
#include "fockbench/moments.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/state.hpp"

namespace fockbench {

/// High-temperature quantum Brownian motion parameters. The master equation
/// is valid when kT dominates every other energy scale (see validity_check).
struct QBMParams {
  double gamma = 1e-3;  // damping rate, in units of omega when natural
  double kT = 100.0;    // temperature as k_B T (energy)
  OscillatorParams osc;

  QBMParams() = default;
  QBMParams(double gamma, double kT, const OscillatorParams& osc = {});

  /// Squared thermal de Broglie length hbar^2 / (m kT).
  double lambda_T_sq() const {
    return osc.hbar * osc.hbar / (osc.mass * kT);
  }
};

/// Right-hand side of the high-T master equation:
/// drho/dt = -(i/hbar)[H, rho] - (i gamma/hbar)[x, {p, rho}]
///           - (2 m gamma kT / hbar^2)[x, [x, rho]].
/// The result is Hermitian and traceless to machine precision.
Matrix master_rhs(const DensityMatrix& rho, const OperatorSet& ops,
                  const QBMParams& qbm);

/// Closed-form purity rate, 2 gamma Tr[rho^2] - 8 gamma Tr(rho^2 x^2 -
/// rho x rho x) / lambda_T^2. Agrees with 2 Tr[rho * master_rhs(rho)] for
/// states with negligible top-level occupancy (the dissipator picks up the
/// truncated commutator's corner otherwise).
double purity_rate_exact(const DensityMatrix& rho, const OperatorSet& ops,
                         const QBMParams& qbm);

/// Period-averaged estimate -8 gamma kT dH / (hbar omega)^2, linear in the
/// energy difference dH.
double purity_rate_estimate(const MomentSet& m, const QBMParams& qbm);

/// Instantaneous rate for a pure state with position variance var_x:
/// 2 gamma - 8 gamma var_x / lambda_T^2.
double purity_rate_pure(const MomentSet& m, const QBMParams& qbm);

/// The three high-temperature validity ratios; each should be large.
struct ValidityReport {
  double kt_over_homega = 0.0;   // kT / (hbar omega)
  double kt_over_hgamma = 0.0;   // kT / (hbar gamma)
  double thermal_length = 0.0;   // 2 m var_x kT / hbar^2
  double threshold = 10.0;
  std::vector<std::string> flags;

  bool ok() const { return flags.empty(); }
};

ValidityReport validity_check(const MomentSet& m, const QBMParams& qbm,
                              double threshold = 10.0);

struct TrajectoryPoint {
  double t = 0.0;
  double xi = 0.0;         // purity
  double trace_err = 0.0;  // |Tr rho - 1|
  double min_eig = 0.0;    // smallest eigenvalue of rho
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::vector<Matrix> states;  // per sample, only when requested
  Matrix final_rho;
  double max_herm_err = 0.0;
  int negativity_warnings = 0;
};

struct IntegrateOptions {
  double dt_max = 0.0;        // 0 = period/4000
  bool store_states = false;
};

/// Fixed-step classical RK4 over the density matrix, sampled on the grid.
/// Preconditions: the internal step dt must satisfy
/// dt * max(omega, gamma (kT/hbar omega) D) <= 0.05, else ConfigurationError.
/// Trace drift beyond 1e-6 or an eigenvalue below -1e-3 aborts with
/// IntegrationDivergedError; eigenvalues below -1e-6 only warn (the equation
/// is not of Lindblad form, small transients are expected).
Trajectory integrate(const DensityMatrix& rho0, const OperatorSet& ops,
                     const QBMParams& qbm, const TimeGrid& grid,
                     const IntegrateOptions& opts = {});

struct LabeledState {
  std::string label;
  PureState state;
};

struct SieveEntry {
  std::string label;
  bool excluded = false;
  std::string reason;
  double slope_initial = 0.0;     // 5-point one-sided fit at t0
  double slope_measured = 0.0;    // (xi(t0+T) - xi(t0)) / T, the ranking key
  double slope_theory = 0.0;      // period-averaged estimate, linear in dH
  double slope_theory_initial = 0.0;  // instantaneous pure-state rate
  double rel_dev = 0.0;           // |initial - theory_initial| / |theory_initial|
  double dh = 0.0;
  std::vector<TrajectoryPoint> trajectory;
};

struct SieveReport {
  QBMParams params;
  int dim = 0;
  std::vector<SieveEntry> states;
  std::vector<std::string> ranking;  // least purity loss first
};

/// Integrates every admissible state, fits the purity slopes and ranks by
/// period-averaged purity loss. States failing validity_check are excluded
/// with a reason and never integrated. Trajectories run in parallel.
/// The grid must cover at least one period. dt_max = 0 keeps the
/// integrator's default step.
SieveReport sieve_experiment(const std::vector<LabeledState>& states,
                             const OperatorSet& ops, const QBMParams& qbm,
                             const TimeGrid& grid,
                             double validity_threshold = 10.0,
                             double dt_max = 0.0);

}  // namespace fockbench
