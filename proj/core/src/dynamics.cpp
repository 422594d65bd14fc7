#include "fockbench/dynamics.hpp"

#include <cmath>
#include <string>

#include "fockbench/errors.hpp"

namespace fockbench {

TimeGrid::TimeGrid(double t0, double t1, int n_samples)
    : t0(t0), t1(t1), n_samples(n_samples) {
  if (!(t1 > t0)) {
    throw InvalidGridError("time grid needs t1 > t0");
  }
  if (n_samples < 2) {
    throw InvalidGridError("time grid needs at least 2 samples");
  }
}

TimeGrid TimeGrid::one_period(const OscillatorParams& params, int n_samples) {
  return TimeGrid(0.0, params.period(), n_samples);
}

MomentSet evolve_moments(const MomentSet& m0, double t) {
  const double m = m0.params.mass;
  const double w = m0.params.omega;
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  const double c2 = std::cos(2.0 * w * t);
  const double s2 = std::sin(2.0 * w * t);

  MomentSet mt;
  mt.params = m0.params;
  mt.mean_x = m0.mean_x * c + m0.mean_p / (m * w) * s;
  mt.mean_p = m0.mean_p * c - m * w * m0.mean_x * s;
  mt.var_x = m0.var_x * c * c + m0.var_p / (m * m * w * w) * s * s +
             m0.corr_k / (m * w) * s2;
  mt.var_p = m0.var_p * c * c + m * m * w * w * m0.var_x * s * s -
             m * w * m0.corr_k * s2;
  mt.corr_k = m0.corr_k * c2 +
              0.5 * (m0.var_p / (m * w) - m * w * m0.var_x) * s2;
  return mt;
}

double delta_L_t(double dL0, double K0, const OscillatorParams& params,
                 double t) {
  const double w = params.omega;
  return dL0 * std::cos(2.0 * w * t) - w * K0 * std::sin(2.0 * w * t);
}

double uncertainty_product_sq(double dH, double dL_t,
                              const OscillatorParams& params) {
  const double w = params.omega;
  const double lhs = (dH - dL_t) * (dH + dL_t);
  // tolerate roundoff-scale excursions below zero
  const double slack = 1e-12 * std::max(dH * dH, params.quantum() * params.quantum());
  if (lhs < -slack) {
    throw InconsistentMomentsError("|dL_t| = " + std::to_string(std::abs(dL_t)) +
                                   " exceeds dH = " + std::to_string(dH));
  }
  return std::max(lhs, 0.0) / (w * w);
}

PureState unitary_evolve(const PureState& psi, const OperatorSet& ops,
                         double t) {
  if (psi.dim() != ops.dim) {
    throw DimensionMismatchError("state/operator dimension mismatch in evolve");
  }
  const double w = ops.params.omega;
  Vector c = psi.amplitudes();
  for (int n = 0; n < c.size(); ++n) {
    c(n) *= std::exp(Complex(0.0, -w * (n + 0.5) * t));
  }
  return PureState(std::move(c));
}

}  // namespace fockbench
