#include "fockbench/state.hpp"

#include <cmath>

#include "fockbench/errors.hpp"

namespace fockbench {

namespace {
constexpr double kNormTol = 1e-12;
constexpr double kRhoTol = 1e-10;
}  // namespace

PureState::PureState(Vector amplitudes) : c_(std::move(amplitudes)) {
  if (c_.size() < 2) {
    throw InvalidDimensionError("state needs at least 2 amplitudes");
  }
  const double norm2 = c_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw NormalizationError("state norm^2 deviates from 1 by " +
                             std::to_string(norm2 - 1.0));
  }
}

PureState PureState::normalized(Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NormalizationError("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

double PureState::tail_mass() const { return std::norm(c_(c_.size() - 1)); }

double fidelity(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("fidelity between states of dimension " +
                                 std::to_string(a.dim()) + " and " +
                                 std::to_string(b.dim()));
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 2) {
    throw InvalidDimensionError("density matrix must be square with dim >= 2");
  }
  const double herm_err = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kRhoTol) {
    throw NormalizationError("density matrix not Hermitian, max deviation " +
                             std::to_string(herm_err));
  }
  const double trace_err = std::abs(rho_.trace() - Complex(1.0, 0.0));
  if (trace_err > kRhoTol) {
    throw NormalizationError("density matrix trace deviates from 1 by " +
                             std::to_string(trace_err));
  }
  const double xi = rho_.squaredNorm();  // Tr[rho^2] for Hermitian rho
  if (!(xi > 0.0) || xi > 1.0 + kRhoTol) {
    throw NormalizationError("purity " + std::to_string(xi) +
                             " outside (0, 1]");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const Vector& c = psi.amplitudes();
  return DensityMatrix(c * c.adjoint());
}

double DensityMatrix::tail_mass() const {
  return rho_(rho_.rows() - 1, rho_.cols() - 1).real();
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

}  // namespace fockbench
