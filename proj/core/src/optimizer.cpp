#include "fockbench/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fockbench/moments.hpp"
#include "fockbench/state_families.hpp"

namespace fockbench {

namespace {

double obj_raw(const Vector& c, const OperatorSet& ops) {
  const Vector ac = ops.a * c;
  const Complex alpha = c.dot(ac);
  return ops.params.quantum() * (ac.squaredNorm() + 0.5 - std::norm(alpha));
}

Vector grad_raw(const Vector& c, const OperatorSet& ops) {
  const Vector ac = ops.a * c;
  const Vector adc = ops.a_dag * c;
  const Complex alpha = c.dot(ac);
  Vector g = ops.params.quantum() *
             (ops.a_dag * ac - std::conj(alpha) * ac - alpha * adc);
  g -= c.dot(g).real() * c;  // tangent projection; c^dag g is real for real F
  return 2.0 * g;
}

struct Descent {
  Vector c;
  double f = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

Descent descend(Vector c, const OperatorSet& ops, const OptimizerConfig& cfg,
                std::vector<double>& history) {
  Descent d;
  d.f = obj_raw(c, ops);
  history.push_back(d.f);
  double eta = cfg.eta;
  for (int it = 0; it < cfg.max_iters; ++it) {
    const Vector g = grad_raw(c, ops);
    const double gn = g.norm();
    d.grad_norm = gn;
    if (gn <= cfg.grad_tol) {
      d.converged = true;
      break;
    }
    // Armijo backtracking; the directional derivative along -g is -||g||^2
    double step = eta;
    double fn = d.f;
    Vector cn;
    bool accepted = false;
    while (step >= 1e-16) {
      cn = c - step * g;
      cn /= cn.norm();
      fn = obj_raw(cn, ops);
      if (fn <= d.f - 1e-4 * step * gn * gn) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      break;  // stuck at roundoff scale, no further progress possible
    }
    c = std::move(cn);
    d.f = fn;
    d.iterations = it + 1;
    eta = std::min(step * 2.0, 1.0);
    history.push_back(d.f);
  }
  d.c = std::move(c);
  return d;
}

Vector zero_pad(const Vector& c, int dim) {
  Vector out = Vector::Zero(dim);
  out.head(c.size()) = c;
  return out;
}

double residual_raw(const Vector& c, const OperatorSet& ops) {
  const Vector ac = ops.a * c;
  const Complex alpha = c.dot(ac);
  return (ac - alpha * c).squaredNorm();
}

double fidelity_to_coherent_raw(const Vector& c, const OperatorSet& ops) {
  const Complex alpha = c.dot(ops.a * c);
  const Vector coh = coherent_amplitudes(alpha, static_cast<int>(c.size()));
  return std::norm(coh.dot(c));
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw ConfigurationError("optimizer needs restarts >= 1");
  if (max_iters < 1) throw ConfigurationError("optimizer needs max_iters >= 1");
  if (!(eta > 0.0)) throw ConfigurationError("optimizer needs eta > 0");
  if (!(grad_tol > 0.0)) throw ConfigurationError("optimizer needs grad_tol > 0");
  if (max_dim_doublings < 0 || max_dim_doublings > 8) {
    throw ConfigurationError("max_dim_doublings outside [0, 8]");
  }
}

double delta_H_objective(const PureState& psi, const OperatorSet& ops) {
  if (psi.dim() != ops.dim) {
    throw DimensionMismatchError("state/operator dimension mismatch");
  }
  return obj_raw(psi.amplitudes(), ops);
}

Vector objective_gradient(const PureState& psi, const OperatorSet& ops) {
  if (psi.dim() != ops.dim) {
    throw DimensionMismatchError("state/operator dimension mismatch");
  }
  return grad_raw(psi.amplitudes(), ops);
}

OptimizationResult minimize_delta_H(const OperatorSet& ops,
                                    const OptimizerConfig& cfg,
                                    const std::optional<PureState>& init) {
  cfg.validate();
  if (init && init->dim() != ops.dim) {
    throw DimensionMismatchError("initial state dimension " +
                                 std::to_string(init->dim()) +
                                 " does not match operators (" +
                                 std::to_string(ops.dim) + ")");
  }

  struct Candidate {
    Vector c;
    RestartOutcome outcome;
    std::vector<double> history;
  };
  std::vector<RestartOutcome> outcomes;
  std::vector<std::string> warnings;
  std::optional<Candidate> best_converged;
  std::optional<Candidate> best_any;

  for (int r = 0; r < cfg.restarts; ++r) {
    const std::uint64_t rseed = cfg.seed + static_cast<std::uint64_t>(r);
    Vector c = init ? init->amplitudes()
                    : random_state(ops.dim, rseed).amplitudes();

    int dim_used = ops.dim;
    OperatorSet enlarged;  // built lazily on dimension doubling
    const OperatorSet* cur = &ops;
    std::vector<double> history;
    Descent d;
    int total_iters = 0;
    bool tail_ok = false;
    for (int doubling = 0; doubling <= cfg.max_dim_doublings; ++doubling) {
      d = descend(std::move(c), *cur, cfg, history);
      total_iters += d.iterations;
      c = std::move(d.c);
      if (!d.converged) break;
      const double tail = std::norm(c(c.size() - 1));
      if (tail <= cfg.tail_threshold) {
        tail_ok = true;
        break;
      }
      if (doubling == cfg.max_dim_doublings) break;
      dim_used *= 2;
      enlarged = build_operators(dim_used, ops.params);
      cur = &enlarged;
      c = zero_pad(c, dim_used);
    }

    Candidate cand;
    cand.outcome.seed = rseed;
    cand.outcome.dh = obj_raw(c, *cur);
    cand.outcome.residual = residual_raw(c, *cur);
    cand.outcome.fidelity = fidelity_to_coherent_raw(c, *cur);
    cand.outcome.iterations = total_iters;
    cand.outcome.converged = d.converged && tail_ok;
    cand.outcome.dim_used = dim_used;
    cand.outcome.tail_mass = std::norm(c(c.size() - 1));
    cand.c = std::move(c);
    cand.history = std::move(history);

    if (cand.outcome.converged && cand.outcome.residual > 1e-6) {
      warnings.push_back(
          "restart " + std::to_string(r) +
          " converged to a stationary point with residual " +
          std::to_string(cand.outcome.residual) +
          " -- counterexample candidate, please report");
    }
    if (d.converged && !tail_ok) {
      warnings.push_back("restart " + std::to_string(r) +
                         " kept tail mass above threshold up to dim " +
                         std::to_string(dim_used) + "; marked non-converged");
    }

    outcomes.push_back(cand.outcome);
    if (!best_any || cand.outcome.dh < best_any->outcome.dh) {
      best_any = cand;
    }
    if (cand.outcome.converged &&
        (!best_converged || cand.outcome.dh < best_converged->outcome.dh)) {
      best_converged = std::move(cand);
    }
  }

  const Candidate& pick = best_converged ? *best_converged : *best_any;
  OptimizationResult res{PureState(pick.c)};
  res.dh_star = pick.outcome.dh;
  res.residual = pick.outcome.residual;
  res.iterations = pick.outcome.iterations;
  res.converged = pick.outcome.converged;
  res.dim_used = pick.outcome.dim_used;
  res.restarts = std::move(outcomes);
  res.objective_history = pick.history;
  res.warnings = std::move(warnings);

  res.fidelity_to_coherent = pick.outcome.fidelity;

  if (!best_converged) {
    throw OptimizationFailureError(
        "no restart converged within " + std::to_string(cfg.max_iters) +
            " iterations",
        std::move(res));
  }
  return res;
}

}  // namespace fockbench
