#include "fockbench/moments.hpp"

#include <string>

#include "fockbench/diagnostics.hpp"
#include "fockbench/errors.hpp"

namespace fockbench {

namespace {

void check_dims(int state_dim, const OperatorSet& ops, const char* what) {
  if (state_dim != ops.dim) {
    throw DimensionMismatchError(std::string(what) + " dimension " +
                                 std::to_string(state_dim) +
                                 " does not match operator dimension " +
                                 std::to_string(ops.dim));
  }
}

void check_tail(double tail, const char* what) {
  if (tail > kTailWarnThreshold) {
    warn(std::string(what) + " top-level occupancy " + std::to_string(tail) +
         " exceeds " + std::to_string(kTailWarnThreshold) +
         "; truncation artifacts likely");
  }
}

}  // namespace

MomentSet moments(const PureState& psi, const OperatorSet& ops) {
  check_dims(psi.dim(), ops, "state");
  check_tail(psi.tail_mass(), "state");

  const Vector& c = psi.amplitudes();
  const Vector xc = ops.x * c;
  const Vector pc = ops.p * c;

  MomentSet m;
  m.params = ops.params;
  m.mean_x = c.dot(xc).real();
  m.mean_p = c.dot(pc).real();
  m.var_x = xc.squaredNorm() - m.mean_x * m.mean_x;
  m.var_p = pc.squaredNorm() - m.mean_p * m.mean_p;
  m.corr_k = xc.dot(pc).real() - m.mean_x * m.mean_p;
  return m;
}

MomentSet moments(const DensityMatrix& rho, const OperatorSet& ops) {
  check_dims(rho.dim(), ops, "density matrix");
  check_tail(rho.tail_mass(), "density matrix");

  const Matrix& r = rho.matrix();
  const Matrix xr = ops.x * r;
  const Matrix pr = ops.p * r;

  MomentSet m;
  m.params = ops.params;
  m.mean_x = xr.trace().real();
  m.mean_p = pr.trace().real();
  m.var_x = (ops.x * xr).trace().real() - m.mean_x * m.mean_x;
  m.var_p = (ops.p * pr).trace().real() - m.mean_p * m.mean_p;
  // K = Tr[rho (xp + px)]/2 - <x><p>; for Hermitian factors that is
  // Re Tr[x p rho].
  m.corr_k = (ops.x * pr).trace().real() - m.mean_x * m.mean_p;
  return m;
}

double eigen_residual(const PureState& psi, const OperatorSet& ops) {
  check_dims(psi.dim(), ops, "state");
  check_tail(psi.tail_mass(), "state");
  const Vector& c = psi.amplitudes();
  const Vector ac = ops.a * c;
  const Complex alpha = c.dot(ac);
  return (ac - alpha * c).squaredNorm();
}

}  // namespace fockbench
