#pragma once

#include "fockbench/types.hpp"

namespace fockbench {

/// Normalized amplitude vector on the truncated number basis.
class PureState {
 public:
  /// Validates sum |c_n|^2 = 1 within 1e-12; throws NormalizationError.
  explicit PureState(Vector amplitudes);

  /// Scales the vector to unit norm, then constructs.
  static PureState normalized(Vector amplitudes);

  int dim() const { return static_cast<int>(c_.size()); }
  const Vector& amplitudes() const { return c_; }
  Complex amplitude(int n) const { return c_(n); }

  /// Occupancy of the highest retained level, |c_{D-1}|^2.
  double tail_mass() const;

 private:
  Vector c_;
};

/// |<a|b>|^2; global phase drops out.
double fidelity(const PureState& a, const PureState& b);

/// Hermitian, unit-trace density matrix on the truncated basis.
class DensityMatrix {
 public:
  /// Validates Hermiticity and trace within 1e-10 and purity <= 1 + 1e-10.
  explicit DensityMatrix(Matrix rho);

  static DensityMatrix from_pure(const PureState& psi);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }

  /// rho[D-1, D-1], the top-level occupancy.
  double tail_mass() const;

 private:
  Matrix rho_;
};

/// Tr[rho^2]; equals 1 within 1e-10 iff rho is a pure projector.
double purity(const DensityMatrix& rho);

}  // namespace fockbench
