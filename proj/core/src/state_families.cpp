#include "fockbench/state_families.hpp"

#include <cmath>
#include <random>
#include <string>

#include "fockbench/errors.hpp"

namespace fockbench {

namespace {

/// Exact Poisson tail mass P(N >= dim) for intensity lam = |alpha|^2.
double poisson_tail(double lam, int dim) {
  double term = std::exp(-lam);
  double cum = term;
  for (int n = 1; n < dim; ++n) {
    term *= lam / n;
    cum += term;
  }
  return std::max(0.0, 1.0 - cum);
}

}  // namespace

Vector coherent_amplitudes(Complex alpha, int dim) {
  if (dim < 2) {
    throw InvalidDimensionError("coherent state needs dim >= 2");
  }
  const double lam = std::norm(alpha);
  if (lam > 700.0) {
    throw InvalidDimensionError(
        "|alpha|^2 > 700 is not representable in double precision");
  }
  Vector c(dim);
  c(0) = std::exp(-0.5 * lam);
  for (int n = 1; n < dim; ++n) {
    c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  c /= c.norm();
  return c;
}

PureState coherent_state(Complex alpha, int dim) {
  if (dim < 2) {
    throw InvalidDimensionError("coherent state needs dim >= 2");
  }
  const double tail = poisson_tail(std::norm(alpha), dim);
  if (tail > 1e-10) {
    throw InsufficientDimensionError(
        "dim " + std::to_string(dim) + " leaves tail mass " +
            std::to_string(tail) + " for |alpha| = " +
            std::to_string(std::abs(alpha)),
        tail);
  }
  return PureState(coherent_amplitudes(alpha, dim));
}

PureState fock_state(int n, int dim) {
  if (dim < 2) {
    throw InvalidDimensionError("fock state needs dim >= 2");
  }
  if (n < 0 || n >= dim) {
    throw InvalidDimensionError("fock level " + std::to_string(n) +
                                " outside basis of dimension " +
                                std::to_string(dim));
  }
  Vector c = Vector::Zero(dim);
  c(n) = 1.0;
  return PureState(std::move(c));
}

PureState squeezed_vacuum(double r, int dim) {
  if (dim < 2) {
    throw InvalidDimensionError("squeezed vacuum needs dim >= 2");
  }
  Vector c = Vector::Zero(dim);
  c(0) = 1.0;
  const double tanh_r = std::tanh(r);
  for (int n = 0; n + 2 < dim; n += 2) {
    const double step = -tanh_r *
                        std::sqrt(static_cast<double>((n + 1) * (n + 2))) /
                        (n + 2);
    c(n + 2) = c(n) * step;
  }
  c /= c.norm();
  // the top populated level alternates parity with dim, so check both
  const double tail = std::max(std::norm(c(dim - 1)), std::norm(c(dim - 2)));
  if (tail > 1e-8) {
    throw InsufficientDimensionError(
        "dim " + std::to_string(dim) + " leaves tail mass " +
            std::to_string(tail) + " for squeezing r = " + std::to_string(r),
        tail);
  }
  return PureState(std::move(c));
}

PureState random_state(int dim, std::uint64_t seed) {
  if (dim < 2) {
    throw InvalidDimensionError("random state needs dim >= 2");
  }
  std::mt19937_64 eng(seed);
  // uniform in (0, 1); +0.5 keeps log() away from zero
  auto uniform = [&eng] {
    return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
  };
  Vector c(dim);
  for (int n = 0; n < dim; ++n) {
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * kPi * uniform();
    c(n) = Complex(radius * std::cos(angle), radius * std::sin(angle));
  }
  return PureState::normalized(std::move(c));
}

}  // namespace fockbench
