#include "fockbench/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fockbench/errors.hpp"

namespace fockbench {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSaturating:
      return "saturating";
    case Verdict::kConstantNotMinimal:
      return "constant-but-not-minimal";
    case Verdict::kOscillating:
      return "oscillating";
  }
  return "unknown";
}

CertificationReport certify(const PureState& psi, const OperatorSet& ops,
                            const TimeGrid& grid, double tol) {
  const double period = ops.params.period();
  if (grid.span() < period * (1.0 - 1e-12)) {
    throw InvalidGridError("grid spans " + std::to_string(grid.span()) +
                           " but certification needs a full period " +
                           std::to_string(period));
  }

  const MomentSet m0 = moments(psi, ops);
  const double half_hbar = 0.5 * ops.params.hbar;

  CertificationReport rep;
  rep.dL0 = m0.delta_l();
  rep.K0 = m0.corr_k;
  rep.residual = eigen_residual(psi, ops);
  rep.tol = tol;
  rep.max_violation = 0.0;
  rep.min_product = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.n_samples; ++i) {
    const MomentSet mt = evolve_moments(m0, grid.t(i) - grid.t0);
    const double product = mt.uncertainty_product();
    rep.max_violation = std::max(rep.max_violation,
                                 std::abs(product - half_hbar));
    rep.min_product = std::min(rep.min_product, product);
  }

  if (rep.max_violation <= tol * ops.params.hbar) {
    rep.verdict = Verdict::kSaturating;
  } else if (std::abs(rep.dL0) <= tol * ops.params.quantum() &&
             std::abs(rep.K0) <= tol * ops.params.hbar) {
    rep.verdict = Verdict::kConstantNotMinimal;
  } else {
    rep.verdict = Verdict::kOscillating;
  }
  return rep;
}

}  // namespace fockbench
