#pragma once

#include <string>
#include <vector>

#include "fockbench/certify.hpp"
#include "fockbench/dynamics.hpp"
#include "fockbench/optimizer.hpp"
#include "fockbench/qbm.hpp"

namespace fockbench {

/// Current UTC time as an ISO-8601 string (the one field reports are allowed
/// to differ in between reruns of the same configuration).
std::string iso8601_now();

/// Closed-form moment trajectory, one row per grid point:
/// t, mean_x, mean_p, var_x, var_p, K, dH, dL, dxdp
void write_moment_trajectory_csv(const std::string& path, const MomentSet& m0,
                                 const TimeGrid& grid);

/// Integrated trajectory, one row per sample:
/// t, xi, trace_err, min_eig, mean_x, mean_p, var_x, var_p
void write_qbm_trajectory_csv(const std::string& path,
                              const std::vector<TrajectoryPoint>& points);

/// Debug dump of every matrix, row-major, entries as [re, im] pairs.
std::string operator_set_json(const OperatorSet& ops);

std::string certification_json(const CertificationReport& rep,
                               const std::string& state_spec,
                               const OperatorSet& ops, const TimeGrid& grid,
                               const std::string& timestamp);

std::string optimization_json(const OptimizationResult& res,
                              const OptimizerConfig& cfg,
                              const OscillatorParams& params,
                              const std::vector<std::string>& extra_warnings,
                              const std::string& timestamp);

std::string sieve_json(const SieveReport& rep, const TimeGrid& grid,
                       const std::string& timestamp);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fockbench
