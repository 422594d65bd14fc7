#include "fockbench/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fockbench/errors.hpp"

namespace fockbench {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json params_json(const OscillatorParams& p) {
  return Json{{"mass", p.mass}, {"omega", p.omega}, {"hbar", p.hbar}};
}

Json grid_json(const TimeGrid& g) {
  return Json{{"t0", g.t0}, {"t1", g.t1}, {"n_samples", g.n_samples}};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string iso8601_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out << content;
  if (!out) {
    throw Error("failed while writing " + path);
  }
}

void write_moment_trajectory_csv(const std::string& path, const MomentSet& m0,
                                 const TimeGrid& grid) {
  std::string body = "t,mean_x,mean_p,var_x,var_p,K,dH,dL,dxdp\n";
  for (int i = 0; i < grid.n_samples; ++i) {
    const double t = grid.t(i);
    const MomentSet m = evolve_moments(m0, t - grid.t0);
    body += fmt(t) + "," + fmt(m.mean_x) + "," + fmt(m.mean_p) + "," +
            fmt(m.var_x) + "," + fmt(m.var_p) + "," + fmt(m.corr_k) + "," +
            fmt(m.delta_h()) + "," + fmt(m.delta_l()) + "," +
            fmt(m.uncertainty_product()) + "\n";
  }
  write_text_file(path, body);
}

void write_qbm_trajectory_csv(const std::string& path,
                              const std::vector<TrajectoryPoint>& points) {
  std::string body = "t,xi,trace_err,min_eig,mean_x,mean_p,var_x,var_p\n";
  for (const auto& pt : points) {
    body += fmt(pt.t) + "," + fmt(pt.xi) + "," + fmt(pt.trace_err) + "," +
            fmt(pt.min_eig) + "," + fmt(pt.mean_x) + "," + fmt(pt.mean_p) +
            "," + fmt(pt.var_x) + "," + fmt(pt.var_p) + "\n";
  }
  write_text_file(path, body);
}

std::string operator_set_json(const OperatorSet& ops) {
  Json doc;
  doc["dim"] = ops.dim;
  doc["params"] = params_json(ops.params);
  doc["matrices"] = Json{{"a", matrix_json(ops.a)},
                         {"a_dag", matrix_json(ops.a_dag)},
                         {"n", matrix_json(ops.n)},
                         {"x", matrix_json(ops.x)},
                         {"p", matrix_json(ops.p)},
                         {"h", matrix_json(ops.h)},
                         {"kinetic", matrix_json(ops.kinetic)},
                         {"potential", matrix_json(ops.potential)},
                         {"lagrangian", matrix_json(ops.lagrangian)}};
  return doc.dump(2) + "\n";
}

std::string certification_json(const CertificationReport& rep,
                               const std::string& state_spec,
                               const OperatorSet& ops, const TimeGrid& grid,
                               const std::string& timestamp) {
  Json doc;
  doc["experiment"] = "certify";
  doc["timestamp"] = timestamp;
  doc["params"] = Json{{"state", state_spec},
                       {"dim", ops.dim},
                       {"oscillator", params_json(ops.params)},
                       {"grid", grid_json(grid)},
                       {"tol", rep.tol}};
  doc["report"] = Json{{"verdict", verdict_name(rep.verdict)},
                       {"max_violation", rep.max_violation},
                       {"min_product", rep.min_product},
                       {"dL0", rep.dL0},
                       {"K0", rep.K0},
                       {"residual", rep.residual},
                       {"tol", rep.tol}};
  return doc.dump(2) + "\n";
}

std::string optimization_json(const OptimizationResult& res,
                              const OptimizerConfig& cfg,
                              const OscillatorParams& params,
                              const std::vector<std::string>& extra_warnings,
                              const std::string& timestamp) {
  Json doc;
  doc["experiment"] = "theorem2";
  doc["timestamp"] = timestamp;
  doc["params"] = Json{{"oscillator", params_json(params)},
                       {"restarts", cfg.restarts},
                       {"max_iters", cfg.max_iters},
                       {"eta", cfg.eta},
                       {"grad_tol", cfg.grad_tol},
                       {"seed", cfg.seed}};
  Json restarts = Json::array();
  for (const auto& r : res.restarts) {
    restarts.push_back(Json{{"seed", r.seed},
                            {"dh", r.dh},
                            {"residual", r.residual},
                            {"fidelity", r.fidelity},
                            {"iterations", r.iterations},
                            {"converged", r.converged},
                            {"dim_used", r.dim_used},
                            {"tail_mass", r.tail_mass}});
  }
  Json warnings = Json::array();
  for (const auto& w : res.warnings) warnings.push_back(w);
  for (const auto& w : extra_warnings) warnings.push_back(w);
  doc["result"] = Json{{"dH_star", res.dh_star},
                       {"residual", res.residual},
                       {"fidelity_to_coherent", res.fidelity_to_coherent},
                       {"iterations", res.iterations},
                       {"converged", res.converged},
                       {"dim_used", res.dim_used}};
  doc["restarts"] = std::move(restarts);
  doc["warnings"] = std::move(warnings);
  return doc.dump(2) + "\n";
}

std::string sieve_json(const SieveReport& rep, const TimeGrid& grid,
                       const std::string& timestamp) {
  Json doc;
  doc["experiment"] = "qbm_sieve";
  doc["timestamp"] = timestamp;
  doc["params"] = Json{{"gamma", rep.params.gamma},
                       {"kT", rep.params.kT},
                       {"oscillator", params_json(rep.params.osc)},
                       {"dim", rep.dim},
                       {"grid", grid_json(grid)}};
  Json states = Json::array();
  for (const auto& e : rep.states) {
    states.push_back(Json{{"label", e.label},
                          {"slope_measured", e.slope_measured},
                          {"slope_initial", e.slope_initial},
                          {"slope_theory", e.slope_theory},
                          {"slope_theory_initial", e.slope_theory_initial},
                          {"rel_dev", e.rel_dev},
                          {"dh", e.dh},
                          {"excluded", e.excluded},
                          {"reason", e.reason}});
  }
  doc["states"] = std::move(states);
  doc["ranking"] = rep.ranking;
  return doc.dump(2) + "\n";
}

}  // namespace fockbench
