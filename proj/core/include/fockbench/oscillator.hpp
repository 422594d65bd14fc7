#pragma once

#include <cmath>

#include "fockbench/errors.hpp"
#include "fockbench/types.hpp"

namespace fockbench {

/// Physical constants of the oscillator. Defaults are natural units
/// (hbar = m = omega = 1), which every test and experiment uses unless
/// it is specifically probing dimensional behaviour.
struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  OscillatorParams() = default;
  OscillatorParams(double mass, double omega, double hbar)
      : mass(mass), omega(omega), hbar(hbar) {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
      throw ConfigurationError("oscillator parameters must be positive");
    }
  }

  static OscillatorParams natural() { return {}; }

  /// Length scale sigma = sqrt(hbar / (m omega)); sigma^2 m omega == hbar.
  double sigma() const { return std::sqrt(hbar / (mass * omega)); }
  double period() const { return 2.0 * kPi / omega; }
  /// Energy quantum hbar*omega.
  double quantum() const { return hbar * omega; }
};

}  // namespace fockbench
