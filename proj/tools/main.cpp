// fockbench CLI: reproducible oscillator experiments emitting JSON + CSV.
//
// Subcommands:
//   certify   -- all-times uncertainty saturation check for one state
//   theorem2  -- variational minimization of the energy difference dH
//   qbm       -- quantum Brownian motion purity sieve over a state family
//
// Exit codes: 0 success, 2 precondition failure, 3 validity exclusions,
// 64 usage error, 1 anything else.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockbench/fockbench.hpp"

namespace fb = fockbench;
using Json = nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) {
    throw UsageError("trailing characters in " + what + " '" + text + "'");
  }
  return v;
}

long long parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) {
    throw UsageError("trailing characters in " + what + " '" + text + "'");
  }
  return v;
}

// spec grammar: coherent:RE,IM | fock:N | squeezed:R | random:SEED
fb::PureState parse_state_spec(const std::string& spec, int dim) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("state spec '" + spec + "' missing ':'");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "coherent") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) {
      throw UsageError("coherent spec needs RE,IM, got '" + rest + "'");
    }
    const double re = parse_double(rest.substr(0, comma), "coherent RE");
    const double im = parse_double(rest.substr(comma + 1), "coherent IM");
    return fb::coherent_state({re, im}, dim);
  }
  if (kind == "fock") {
    return fb::fock_state(static_cast<int>(parse_int(rest, "fock level")), dim);
  }
  if (kind == "squeezed") {
    return fb::squeezed_vacuum(parse_double(rest, "squeezing r"), dim);
  }
  if (kind == "random") {
    return fb::random_state(
        dim, static_cast<std::uint64_t>(parse_int(rest, "random seed")));
  }
  throw UsageError("unknown state kind '" + kind + "'");
}

std::string sanitize_label(const std::string& label) {
  std::string out = label;
  for (char& ch : out) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' &&
        ch != '.') {
      ch = '_';
    }
  }
  return out;
}

Json load_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
  }
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open config file " + path);
  }
  Json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) {
    throw UsageError("config file " + path + " must hold a flat JSON object");
  }
  return cfg;
}

struct CommonFlags {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  std::string out = ".";
  std::string config;  // absorbed; handled by load_config

  fb::OscillatorParams params() const { return {mass, omega, hbar}; }
};

// Config file keys mirror the long flag names; flags given on the command
// line win because they overwrite the config-derived default.
template <typename T>
void cfg_default(const Json& cfg, const char* key, T& value) {
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

void add_common(CLI::App* cmd, CommonFlags& flags, const Json& cfg) {
  cfg_default(cfg, "mass", flags.mass);
  cfg_default(cfg, "omega", flags.omega);
  cfg_default(cfg, "hbar", flags.hbar);
  cfg_default(cfg, "out", flags.out);
  cmd->add_option("--mass", flags.mass, "oscillator mass");
  cmd->add_option("--omega", flags.omega, "oscillator angular frequency");
  cmd->add_option("--hbar", flags.hbar, "reduced Planck constant");
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--config", flags.config,
                  "flat JSON config mirroring the flags (flags override)");
}

void require_dim(int dim) {
  if (dim <= 0) {
    throw UsageError("--dim is required (or provide \"dim\" in the config)");
  }
}

std::string out_path(const CommonFlags& flags, const std::string& name) {
  std::filesystem::create_directories(flags.out);
  return (std::filesystem::path(flags.out) / name).string();
}

int run_certify(const CommonFlags& flags, int dim, const std::string& state_spec,
                double tol, int samples, double periods) {
  require_dim(dim);
  if (state_spec.empty()) {
    throw UsageError("--state is required for certify");
  }
  const fb::OperatorSet ops = fb::build_operators(dim, flags.params());
  const fb::PureState psi = parse_state_spec(state_spec, dim);
  const fb::TimeGrid grid(0.0, periods * ops.params.period(), samples);
  const fb::CertificationReport rep = fb::certify(psi, ops, grid, tol);

  fb::write_text_file(
      out_path(flags, "certify_report.json"),
      fb::certification_json(rep, state_spec, ops, grid, fb::iso8601_now()));
  fb::write_moment_trajectory_csv(out_path(flags, "certify_trajectory.csv"),
                                  fb::moments(psi, ops), grid);
  std::printf("verdict: %s (max violation %.3e, residual %.3e)\n",
              fb::verdict_name(rep.verdict).c_str(), rep.max_violation,
              rep.residual);
  return 0;
}

int run_theorem2(const CommonFlags& flags, int dim,
                 const fb::OptimizerConfig& cfg) {
  require_dim(dim);
  const fb::OperatorSet ops = fb::build_operators(dim, flags.params());
  std::vector<std::string> notes;
  if (dim == 2) {
    notes.push_back(
        "dim=2: the only annihilation eigenstate in this truncation is the "
        "vacuum (alpha = 0); any excited admixture u = |<1|psi>|^2 costs "
        "an extra hbar*omega*u^2 above the hbar*omega/2 floor");
  }

  fb::OptimizationResult res = [&] {
    try {
      return fb::minimize_delta_H(ops, cfg);
    } catch (fb::OptimizationFailureError& e) {
      fb::write_text_file(
          out_path(flags, "theorem2_result.json"),
          fb::optimization_json(e.best, cfg, flags.params(), notes,
                                fb::iso8601_now()));
      throw;
    }
  }();

  fb::write_text_file(out_path(flags, "theorem2_result.json"),
                      fb::optimization_json(res, cfg, flags.params(), notes,
                                            fb::iso8601_now()));
  for (const auto& n : notes) std::fprintf(stderr, "note: %s\n", n.c_str());
  std::printf("dH_star = %.12g (residual %.3e, fidelity %.12g, dim %d)\n",
              res.dh_star, res.residual, res.fidelity_to_coherent,
              res.dim_used);
  return 0;
}

int run_qbm(const CommonFlags& flags, int dim, double gamma, double kT,
            int samples, int substeps, double threshold,
            const std::vector<std::string>& state_specs) {
  require_dim(dim);
  const fb::OperatorSet ops = fb::build_operators(dim, flags.params());
  const fb::QBMParams qbm(gamma, kT, flags.params());

  std::vector<std::string> specs = state_specs;
  if (specs.empty()) {
    specs = {"coherent:1,0", "fock:1",        "fock:2",
             "fock:3",       "squeezed:0.5",  "squeezed:-0.5"};
  }
  std::vector<fb::LabeledState> family;
  family.reserve(specs.size());
  for (const auto& s : specs) {
    family.push_back({s, parse_state_spec(s, dim)});
  }

  const fb::TimeGrid grid(0.0, ops.params.period(), samples);
  const fb::SieveReport rep = fb::sieve_experiment(
      family, ops, qbm, grid, threshold, ops.params.period() / substeps);

  fb::write_text_file(out_path(flags, "sieve_report.json"),
                      fb::sieve_json(rep, grid, fb::iso8601_now()));
  for (const auto& e : rep.states) {
    if (e.excluded) continue;
    fb::write_qbm_trajectory_csv(
        out_path(flags, "qbm_" + sanitize_label(e.label) + ".csv"),
        e.trajectory);
  }

  int excluded_count = 0;
  for (const auto& e : rep.states) {
    if (e.excluded) {
      ++excluded_count;
      std::fprintf(stderr, "excluded %s: %s\n", e.label.c_str(),
                   e.reason.c_str());
    }
  }
  std::printf("ranking (least purity loss first):\n");
  for (std::size_t i = 0; i < rep.ranking.size(); ++i) {
    std::printf("  %zu. %s\n", i + 1, rep.ranking[i].c_str());
  }
  return excluded_count > 0 ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const Json cfg = load_config(argc, argv);

    CLI::App app{"fockbench: truncated Fock-space oscillator experiments"};
    app.require_subcommand(1);

    // certify
    CommonFlags certify_flags;
    int certify_dim = 0;
    std::string certify_state;
    double certify_tol = 1e-8;
    int certify_samples = 1024;
    double certify_periods = 1.0;
    CLI::App* certify = app.add_subcommand(
        "certify", "all-times uncertainty saturation check for one state");
    cfg_default(cfg, "dim", certify_dim);
    cfg_default(cfg, "state", certify_state);
    cfg_default(cfg, "tol", certify_tol);
    cfg_default(cfg, "samples", certify_samples);
    cfg_default(cfg, "periods", certify_periods);
    certify->add_option("--dim", certify_dim, "truncated basis dimension");
    certify->add_option("--state", certify_state,
                        "coherent:RE,IM | fock:N | squeezed:R | random:SEED");
    certify->add_option("--tol", certify_tol, "certification tolerance");
    certify->add_option("--samples", certify_samples, "grid samples");
    certify->add_option("--periods", certify_periods, "grid length in periods");
    add_common(certify, certify_flags, cfg);

    // theorem2
    CommonFlags t2_flags;
    int t2_dim = 0;
    fb::OptimizerConfig t2_cfg;
    CLI::App* t2 = app.add_subcommand(
        "theorem2", "variational minimization of the energy difference dH");
    cfg_default(cfg, "dim", t2_dim);
    cfg_default(cfg, "restarts", t2_cfg.restarts);
    cfg_default(cfg, "iters", t2_cfg.max_iters);
    cfg_default(cfg, "eta", t2_cfg.eta);
    cfg_default(cfg, "grad_tol", t2_cfg.grad_tol);
    cfg_default(cfg, "seed", t2_cfg.seed);
    t2->add_option("--dim", t2_dim, "truncated basis dimension");
    t2->add_option("--restarts", t2_cfg.restarts, "random restarts");
    t2->add_option("--iters", t2_cfg.max_iters, "max iterations per restart");
    t2->add_option("--eta", t2_cfg.eta, "initial step size");
    t2->add_option("--grad-tol", t2_cfg.grad_tol, "gradient norm stop");
    t2->add_option("--seed", t2_cfg.seed, "base RNG seed");
    add_common(t2, t2_flags, cfg);

    // qbm
    CommonFlags qbm_flags;
    int qbm_dim = 40;
    double qbm_gamma = 1e-3;
    double qbm_kT = 100.0;
    int qbm_samples = 256;
    int qbm_substeps = 4000;
    double qbm_threshold = 10.0;
    std::vector<std::string> qbm_states;
    CLI::App* qbm = app.add_subcommand(
        "qbm", "quantum Brownian motion purity sieve over a state family");
    cfg_default(cfg, "dim", qbm_dim);
    cfg_default(cfg, "gamma", qbm_gamma);
    cfg_default(cfg, "kT", qbm_kT);
    cfg_default(cfg, "samples", qbm_samples);
    cfg_default(cfg, "substeps", qbm_substeps);
    cfg_default(cfg, "threshold", qbm_threshold);
    qbm->add_option("--dim", qbm_dim, "truncated basis dimension");
    qbm->add_option("--gamma", qbm_gamma, "damping rate");
    qbm->add_option("--kT", qbm_kT, "temperature (k_B T, energy units)");
    qbm->add_option("--samples", qbm_samples, "output samples per period");
    qbm->add_option("--substeps", qbm_substeps, "integrator steps per period");
    qbm->add_option("--threshold", qbm_threshold, "validity ratio threshold");
    qbm->add_option("--states", qbm_states,
                    "state specs (default: coherent:1,0 fock:1..3 "
                    "squeezed:+-0.5)");
    add_common(qbm, qbm_flags, cfg);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 64;
    }

    if (certify->parsed()) {
      return run_certify(certify_flags, certify_dim, certify_state,
                         certify_tol, certify_samples, certify_periods);
    }
    if (t2->parsed()) {
      return run_theorem2(t2_flags, t2_dim, t2_cfg);
    }
    return run_qbm(qbm_flags, qbm_dim, qbm_gamma, qbm_kT, qbm_samples,
                   qbm_substeps, qbm_threshold, qbm_states);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 64;
  } catch (const fb::InsufficientDimensionError& e) {
    std::fprintf(stderr, "precondition: %s (tail mass %.3e)\n", e.what(),
                 e.tail_mass);
    return 2;
  } catch (const fb::OptimizationFailureError& e) {
    std::fprintf(stderr, "optimization failed: %s\n", e.what());
    return 1;
  } catch (const fb::IntegrationDivergedError& e) {
    std::fprintf(stderr, "integration diverged: %s\n", e.what());
    return 1;
  } catch (const fb::Error& e) {
    std::fprintf(stderr, "precondition: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
