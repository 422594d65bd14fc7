#pragma once

#include "fockbench/oscillator.hpp"
#include "fockbench/types.hpp"

namespace fockbench {

/// Dense matrix representations of the oscillator operators on the
/// D-dimensional truncated number basis.
///
/// h is built diagonally as hbar*omega*(N + 1/2), so its spectrum (and the
/// evolution operator derived from it) is exact on the truncated space.
/// kinetic/potential are built from the quadrature matrices and carry the
/// usual truncation corruption in the last two levels; they exist for
/// cross-checks and for the Lagrangian.
struct OperatorSet {
  int dim = 0;
  OscillatorParams params;

  Matrix a;           // lowering: a[n, n+1] = sqrt(n+1)
  Matrix a_dag;       // adjoint of a
  Matrix n;           // diag(0, 1, ..., D-1)
  Matrix x;           // (sigma/sqrt(2)) (a + a^dag)
  Matrix p;           // (i hbar / (sigma sqrt(2))) (a^dag - a)
  Matrix h;           // hbar omega (N + 1/2), diagonal
  Matrix kinetic;     // p^2 / 2m
  Matrix potential;   // m omega^2 x^2 / 2
  Matrix lagrangian;  // kinetic - potential
};

/// Throws InvalidDimensionError for dim < 2.
OperatorSet build_operators(int dim, const OscillatorParams& params = {});

}  // namespace fockbench
