#pragma once

#include <string>

#include "fockbench/dynamics.hpp"
#include "fockbench/moments.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/state.hpp"

namespace fockbench {

enum class Verdict {
  kSaturating,          // dx_t dp_t = hbar/2 on the whole grid
  kConstantNotMinimal,  // product constant (dL0 = K0 = 0) but above hbar/2
  kOscillating,         // product oscillates at 2 omega
};

std::string verdict_name(Verdict v);

/// Outcome of checking a state against the all-times saturation criterion.
struct CertificationReport {
  Verdict verdict = Verdict::kOscillating;
  double max_violation = 0.0;  // max over grid of |dx_t dp_t - hbar/2|
  double min_product = 0.0;    // min over grid of dx_t dp_t
  double dL0 = 0.0;
  double K0 = 0.0;
  double residual = 0.0;  // ||(a - <a>)|psi>||^2
  double tol = 0.0;
};

/// Evolves the state's moments over the grid (closed form) and classifies.
/// The grid must span at least one full period 2 pi / omega.
/// Tolerances: max_violation and |K0| against tol*hbar, |dL0| against
/// tol*hbar*omega; in natural units all three are just tol.
CertificationReport certify(const PureState& psi, const OperatorSet& ops,
                            const TimeGrid& grid, double tol = 1e-8);

}  // namespace fockbench
