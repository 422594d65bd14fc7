#include "fockbench/qbm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fockbench/diagnostics.hpp"
#include "fockbench/errors.hpp"
#include "fockbench/parallel.hpp"

namespace fockbench {

namespace {

/// Ladder-shift kernels. a has a single superdiagonal sqrt(n+1), so every
/// product with x and p is a scaled row/column shift; the integrator runs on
/// these O(D^2) forms with preallocated scratch, while the public master_rhs
/// keeps the literal dense expression (the two are cross-checked in the test
/// suite).
class Stepper {
 public:
  Stepper(const OperatorSet& ops, const QBMParams& qbm)
      : dim_(ops.dim),
        s_(ops.dim),
        gamma_(qbm.gamma),
        hbar_(ops.params.hbar) {
    for (int n = 0; n < dim_; ++n) {
      s_(n) = std::sqrt(static_cast<double>(n));
    }
    const double sigma = ops.params.sigma();
    cx_ = sigma / std::sqrt(2.0);
    cp_ = hbar_ / (sigma * std::sqrt(2.0));
    diffusion_ = 2.0 * ops.params.mass * gamma_ * qbm.kT / (hbar_ * hbar_);

    // gap(i, j) = -i (h_i - h_j) / hbar; the unitary term is elementwise
    gap_.resize(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        gap_(i, j) = Complex(0.0, -(ops.h(i, i) - ops.h(j, j)).real() / hbar_);
      }
    }
    anti_.resize(dim_, dim_);
    xc_.resize(dim_, dim_);
    k1_.resize(dim_, dim_);
    k2_.resize(dim_, dim_);
    k3_.resize(dim_, dim_);
    k4_.resize(dim_, dim_);
    tmp_.resize(dim_, dim_);
  }

  void rk4_step(Matrix& rho, double dt) {
    rhs(rho, k1_);
    tmp_ = rho + (0.5 * dt) * k1_;
    rhs(tmp_, k2_);
    tmp_ = rho + (0.5 * dt) * k2_;
    rhs(tmp_, k3_);
    tmp_ = rho + dt * k3_;
    rhs(tmp_, k4_);
    rho += (dt / 6.0) * (k1_ + k4_) + (dt / 3.0) * (k2_ + k3_);
  }

  /// out = drho/dt, no allocation.
  void rhs(const Matrix& rho, Matrix& out) {
    out.array() = gap_.array() * rho.array();
    if (gamma_ == 0.0) return;

    anti_.setZero();
    add_p_left(rho, Complex(1.0, 0.0), anti_);
    add_p_right(rho, Complex(1.0, 0.0), anti_);
    const Complex c_dis(0.0, -gamma_ / hbar_);
    add_x_left(anti_, c_dis, out);
    add_x_right(anti_, -c_dis, out);

    xc_.setZero();
    add_x_left(rho, Complex(1.0, 0.0), xc_);
    add_x_right(rho, Complex(-1.0, 0.0), xc_);
    add_x_left(xc_, Complex(-diffusion_, 0.0), out);
    add_x_right(xc_, Complex(diffusion_, 0.0), out);
  }

 private:
  // out += coef * (a A) and friends; a shifts rows up, a^dag rows down,
  // right multiplication shifts columns instead.
  void add_lower_left(const Matrix& A, Complex coef, Matrix& out) const {
    for (int n = 0; n + 1 < dim_; ++n) {
      out.row(n) += (coef * s_(n + 1)) * A.row(n + 1);
    }
  }
  void add_raise_left(const Matrix& A, Complex coef, Matrix& out) const {
    for (int n = 1; n < dim_; ++n) {
      out.row(n) += (coef * s_(n)) * A.row(n - 1);
    }
  }
  void add_lower_right(const Matrix& A, Complex coef, Matrix& out) const {
    for (int m = 1; m < dim_; ++m) {
      out.col(m) += (coef * s_(m)) * A.col(m - 1);
    }
  }
  void add_raise_right(const Matrix& A, Complex coef, Matrix& out) const {
    for (int m = 0; m + 1 < dim_; ++m) {
      out.col(m) += (coef * s_(m + 1)) * A.col(m + 1);
    }
  }

  void add_x_left(const Matrix& A, Complex coef, Matrix& out) const {
    add_lower_left(A, coef * cx_, out);
    add_raise_left(A, coef * cx_, out);
  }
  void add_x_right(const Matrix& A, Complex coef, Matrix& out) const {
    add_lower_right(A, coef * cx_, out);
    add_raise_right(A, coef * cx_, out);
  }
  void add_p_left(const Matrix& A, Complex coef, Matrix& out) const {
    const Complex icp = coef * Complex(0.0, cp_);
    add_raise_left(A, icp, out);
    add_lower_left(A, -icp, out);
  }
  void add_p_right(const Matrix& A, Complex coef, Matrix& out) const {
    const Complex icp = coef * Complex(0.0, cp_);
    add_raise_right(A, icp, out);
    add_lower_right(A, -icp, out);
  }

  int dim_;
  Eigen::VectorXd s_;
  double gamma_, hbar_, cx_ = 0.0, cp_ = 0.0, diffusion_ = 0.0;
  Matrix gap_, anti_, xc_, k1_, k2_, k3_, k4_, tmp_;
};

void check_same_oscillator(const OperatorSet& ops, const QBMParams& qbm) {
  const OscillatorParams& a = ops.params;
  const OscillatorParams& b = qbm.osc;
  if (a.mass != b.mass || a.omega != b.omega || a.hbar != b.hbar) {
    throw ConfigurationError(
        "QBM parameters and operator set carry different oscillator params");
  }
}

}  // namespace

QBMParams::QBMParams(double gamma, double kT, const OscillatorParams& osc)
    : gamma(gamma), kT(kT), osc(osc) {
  if (!(gamma >= 0.0)) {
    throw ConfigurationError("damping gamma must be >= 0");
  }
  if (!(kT > 0.0)) {
    throw ConfigurationError("temperature kT must be > 0");
  }
}

Matrix master_rhs(const DensityMatrix& rho, const OperatorSet& ops,
                  const QBMParams& qbm) {
  if (rho.dim() != ops.dim) {
    throw DimensionMismatchError("density matrix/operator dimension mismatch");
  }
  check_same_oscillator(ops, qbm);

  const Matrix& r = rho.matrix();
  const double hbar = ops.params.hbar;
  const Complex minus_i_over_h(0.0, -1.0 / hbar);

  Matrix out = minus_i_over_h * (ops.h * r - r * ops.h);
  if (qbm.gamma != 0.0) {
    const Matrix anti = ops.p * r + r * ops.p;
    out += (minus_i_over_h * qbm.gamma) * (ops.x * anti - anti * ops.x);
    const Matrix xc = ops.x * r - r * ops.x;
    const double diffusion =
        2.0 * ops.params.mass * qbm.gamma * qbm.kT / (hbar * hbar);
    out -= diffusion * (ops.x * xc - xc * ops.x);
  }
  return out;
}

double purity_rate_exact(const DensityMatrix& rho, const OperatorSet& ops,
                         const QBMParams& qbm) {
  if (rho.dim() != ops.dim) {
    throw DimensionMismatchError("density matrix/operator dimension mismatch");
  }
  check_same_oscillator(ops, qbm);
  if (qbm.gamma == 0.0) return 0.0;

  const Matrix& r = rho.matrix();
  const Matrix rx = r * ops.x;
  const double corr =
      ((r * r * ops.x * ops.x).trace() - (rx * rx).trace()).real();
  return 2.0 * qbm.gamma * purity(rho) -
         8.0 * qbm.gamma * corr / qbm.lambda_T_sq();
}

double purity_rate_estimate(const MomentSet& m, const QBMParams& qbm) {
  const double quantum = qbm.osc.quantum();
  return -8.0 * qbm.gamma * qbm.kT * m.delta_h() / (quantum * quantum);
}

double purity_rate_pure(const MomentSet& m, const QBMParams& qbm) {
  return 2.0 * qbm.gamma - 8.0 * qbm.gamma * m.var_x / qbm.lambda_T_sq();
}

ValidityReport validity_check(const MomentSet& m, const QBMParams& qbm,
                              double threshold) {
  ValidityReport rep;
  rep.threshold = threshold;
  const double h = qbm.osc.hbar;
  rep.kt_over_homega = qbm.kT / (h * qbm.osc.omega);
  rep.kt_over_hgamma = qbm.gamma > 0.0
                           ? qbm.kT / (h * qbm.gamma)
                           : std::numeric_limits<double>::infinity();
  rep.thermal_length = 2.0 * qbm.osc.mass * m.var_x * qbm.kT / (h * h);

  auto flag = [&](double value, const char* name) {
    if (value < threshold) {
      rep.flags.push_back(std::string(name) + " = " + std::to_string(value) +
                          " below threshold " + std::to_string(threshold));
    }
  };
  flag(rep.kt_over_homega, "kT/(hbar omega)");
  flag(rep.kt_over_hgamma, "kT/(hbar gamma)");
  flag(rep.thermal_length, "2 m var_x kT/hbar^2");
  return rep;
}

Trajectory integrate(const DensityMatrix& rho0, const OperatorSet& ops,
                     const QBMParams& qbm, const TimeGrid& grid,
                     const IntegrateOptions& opts) {
  if (rho0.dim() != ops.dim) {
    throw DimensionMismatchError("density matrix/operator dimension mismatch");
  }
  check_same_oscillator(ops, qbm);

  const double period = ops.params.period();
  const double dt_max = opts.dt_max > 0.0 ? opts.dt_max : period / 4000.0;
  const double sample_dt = grid.dt();
  const int substeps = std::max(1, static_cast<int>(std::ceil(sample_dt / dt_max)));
  const double dt = sample_dt / substeps;

  // stiffness scale: unitary rotation or the diffusion across D levels
  const double quantum = ops.params.quantum();
  const double stiff = std::max(ops.params.omega,
                                qbm.gamma * (qbm.kT / quantum) * ops.dim);
  if (dt * stiff > 0.05) {
    throw ConfigurationError(
        "step size dt = " + std::to_string(dt) +
        " too coarse: dt * max(omega, gamma kT D / hbar omega) = " +
        std::to_string(dt * stiff) + " exceeds 0.05");
  }

  Stepper stepper(ops, qbm);
  const Matrix x2 = ops.x * ops.x;
  const Matrix p2 = ops.p * ops.p;

  Trajectory traj;
  traj.points.reserve(grid.n_samples);
  if (opts.store_states) traj.states.reserve(grid.n_samples);

  if (rho0.tail_mass() > kTailWarnThreshold) {
    warn("initial density matrix top-level occupancy " +
         std::to_string(rho0.tail_mass()) + "; truncation artifacts likely");
  }

  Matrix rho = rho0.matrix();
  bool warned_negative = false;

  auto record = [&](int i) {
    TrajectoryPoint pt;
    pt.t = grid.t(i);
    pt.xi = rho.squaredNorm();
    pt.trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    traj.max_herm_err = std::max(traj.max_herm_err,
                                 (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        (0.5 * (rho + rho.adjoint())).eval(), Eigen::EigenvaluesOnly);
    pt.min_eig = es.eigenvalues().minCoeff();

    pt.mean_x = (ops.x * rho).trace().real();
    pt.mean_p = (ops.p * rho).trace().real();
    pt.var_x = (x2 * rho).trace().real() - pt.mean_x * pt.mean_x;
    pt.var_p = (p2 * rho).trace().real() - pt.mean_p * pt.mean_p;

    if (pt.trace_err > 1e-6) {
      throw IntegrationDivergedError("trace drift " +
                                     std::to_string(pt.trace_err) + " at t = " +
                                     std::to_string(pt.t));
    }
    if (pt.min_eig < -1e-3) {
      throw IntegrationDivergedError(
          "density matrix eigenvalue " + std::to_string(pt.min_eig) +
          " at t = " + std::to_string(pt.t) +
          "; the high-temperature equation is outside its validity regime");
    }
    if (pt.min_eig < -1e-6) {
      ++traj.negativity_warnings;
      if (!warned_negative) {
        warned_negative = true;
        warn("density matrix eigenvalue " + std::to_string(pt.min_eig) +
             " at t = " + std::to_string(pt.t) +
             " (non-Lindblad transient)");
      }
    }
    traj.points.push_back(pt);
    if (opts.store_states) traj.states.push_back(rho);
  };

  record(0);
  for (int i = 1; i < grid.n_samples; ++i) {
    for (int k = 0; k < substeps; ++k) stepper.rk4_step(rho, dt);
    record(i);
  }
  traj.final_rho = rho;
  return traj;
}

SieveReport sieve_experiment(const std::vector<LabeledState>& states,
                             const OperatorSet& ops, const QBMParams& qbm,
                             const TimeGrid& grid, double validity_threshold,
                             double dt_max) {
  check_same_oscillator(ops, qbm);
  const double period = ops.params.period();
  if (grid.span() < period * (1.0 - 1e-12)) {
    throw InvalidGridError("sieve grid must cover at least one period");
  }
  if (grid.n_samples < 5) {
    throw InvalidGridError("sieve grid needs at least 5 samples for the "
                           "initial-slope fit");
  }

  SieveReport report;
  report.params = qbm;
  report.dim = ops.dim;
  report.states.resize(states.size());

  for (std::size_t i = 0; i < states.size(); ++i) {
    SieveEntry& e = report.states[i];
    e.label = states[i].label;
    const MomentSet m = moments(states[i].state, ops);
    e.dh = m.delta_h();
    e.slope_theory = purity_rate_estimate(m, qbm);
    e.slope_theory_initial = purity_rate_pure(m, qbm);
    const ValidityReport v = validity_check(m, qbm, validity_threshold);
    if (!v.ok()) {
      e.excluded = true;
      std::string reason;
      for (const auto& f : v.flags) {
        if (!reason.empty()) reason += "; ";
        reason += f;
      }
      e.reason = reason;
    }
  }

  std::vector<int> todo;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!report.states[i].excluded) todo.push_back(static_cast<int>(i));
  }

  parallel_for(static_cast<int>(todo.size()), [&](int k) {
    const int i = todo[k];
    SieveEntry& e = report.states[i];
    Trajectory traj = integrate(DensityMatrix::from_pure(states[i].state),
                                ops, qbm, grid, {dt_max, false});
    e.trajectory = std::move(traj.points);
    const auto xi = [&](int j) { return e.trajectory[j].xi; };
    const double h = grid.dt();
    e.slope_initial = (-25.0 * xi(0) + 48.0 * xi(1) - 36.0 * xi(2) +
                       16.0 * xi(3) - 3.0 * xi(4)) /
                      (12.0 * h);
    // sample closest to one period after t0 (the grid covers >= one period)
    const int iT = std::min<int>(grid.n_samples - 1,
                                 static_cast<int>(std::lround(period / h)));
    e.slope_measured = (xi(iT) - xi(0)) / (grid.t(iT) - grid.t0);
    const double scale = std::abs(e.slope_theory_initial);
    e.rel_dev = scale > 1e-15
                    ? std::abs(e.slope_initial - e.slope_theory_initial) / scale
                    : std::abs(e.slope_initial - e.slope_theory_initial);
  });

  std::vector<int> order = todo;
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    const double loss_l = -report.states[lhs].slope_measured;
    const double loss_r = -report.states[rhs].slope_measured;
    if (loss_l != loss_r) return loss_l < loss_r;
    return report.states[lhs].label < report.states[rhs].label;
  });
  for (int i : order) report.ranking.push_back(report.states[i].label);
  return report;
}

}  // namespace fockbench
