#include "fockbench/operators.hpp"

#include <cmath>

#include "fockbench/errors.hpp"

namespace fockbench {

OperatorSet build_operators(int dim, const OscillatorParams& params) {
  if (dim < 2) {
    throw InvalidDimensionError("basis dimension must be at least 2, got " +
                                std::to_string(dim));
  }

  OperatorSet ops;
  ops.dim = dim;
  ops.params = params;

  ops.a = Matrix::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    ops.a(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
  }
  ops.a_dag = ops.a.adjoint();

  ops.n = Matrix::Zero(dim, dim);
  ops.h = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    ops.n(k, k) = static_cast<double>(k);
    ops.h(k, k) = params.quantum() * (k + 0.5);
  }

  const double sigma = params.sigma();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ops.x = (sigma * inv_sqrt2) * (ops.a + ops.a_dag);
  ops.p = Complex(0.0, params.hbar * inv_sqrt2 / sigma) * (ops.a_dag - ops.a);

  ops.kinetic = ops.p * ops.p / (2.0 * params.mass);
  ops.potential = (0.5 * params.mass * params.omega * params.omega) * ops.x * ops.x;
  ops.lagrangian = ops.kinetic - ops.potential;
  return ops;
}

}  // namespace fockbench
