#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fockbench/errors.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/state.hpp"

namespace fockbench {

struct OptimizerConfig {
  int restarts = 8;
  int max_iters = 20000;
  double eta = 0.1;          // initial trial step, adapted per iteration
  double grad_tol = 1e-7;    // stop when ||grad|| falls below (energy units)
  double gap_tol = 1e-9;     // or when dH - hbar omega/2 falls below (energy);
                             // the objective is bounded below by hbar omega/2,
                             // so this certifies near-optimality directly
  std::uint64_t seed = 0;
  double tail_threshold = 1e-8;  // reject minimizers hugging the top level
  int max_dim_doublings = 3;     // continue rejected minimizers at 2D, 4D, ...

  void validate() const;
};

struct RestartOutcome {
  std::uint64_t seed = 0;
  double dh = 0.0;
  double residual = 0.0;
  double fidelity = 0.0;  // |<coherent(<a>)|psi>|^2 for this restart
  int iterations = 0;
  bool converged = false;
  int dim_used = 0;
  double tail_mass = 0.0;
};

struct OptimizationResult {
  PureState state;
  double dh_star = 0.0;
  double residual = 0.0;
  double fidelity_to_coherent = 0.0;
  int iterations = 0;
  bool converged = false;
  int dim_used = 0;
  std::vector<RestartOutcome> restarts;
  std::vector<double> objective_history;  // accepted iterates, best restart
  std::vector<std::string> warnings;      // counterexample candidates etc.
};

/// Thrown when no restart converges; carries the best partial result.
class OptimizationFailureError : public Error {
 public:
  OptimizationFailureError(const std::string& msg, OptimizationResult best)
      : Error(msg), best(std::move(best)) {}
  OptimizationResult best;
};

/// hbar omega (<a^dag a> + 1/2 - |<a>|^2); bounded below by hbar omega / 2
/// in any truncation.
double delta_H_objective(const PureState& psi, const OperatorSet& ops);

/// Gradient of the objective on the unit sphere, projected onto the tangent
/// space at psi (exactly orthogonal to the state). Scaled so that the entries
/// match central finite differences of the normalized objective with respect
/// to the real and imaginary parts of each amplitude.
Vector objective_gradient(const PureState& psi, const OperatorSet& ops);

/// Projected gradient descent with backtracking line search and random
/// restarts. Converged minimizers with tail mass above cfg.tail_threshold
/// are continued at doubled dimension (the theorem being probed concerns
/// the untruncated space). When init is given, every restart starts there.
OptimizationResult minimize_delta_H(const OperatorSet& ops,
                                    const OptimizerConfig& cfg,
                                    const std::optional<PureState>& init = {});

}  // namespace fockbench
