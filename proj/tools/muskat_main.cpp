// muskat: batch driver for the periodic one-phase interface solver.
//
// Subcommands: simulate, validate, converge, spectrum.
// Exit codes: 0 success, 1 invariant failure, 2 usage/config error,
//             3 numerical failure.

#include "muskat/config.hpp"
#include "muskat/csvio.hpp"
#include "muskat/manifest.hpp"
#include "muskat/stepper.hpp"
#include "muskat/validate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
  auto* c = cmd->add_option("--config", opts.config_path, "Path to a key = value config file")
                ->envname("MUSKAT_CONFIG");
  if (needs_config) c->required();
  cmd->add_option("--out", opts.out_dir, "Output directory")->envname("MUSKAT_OUT");
  cmd->add_option("--seed", opts.seed, "RNG seed recorded in the manifest")
      ->envname("MUSKAT_SEED");
  cmd->add_option("--threads", opts.threads, "Internal parallelism cap")
      ->envname("MUSKAT_THREADS");
}

double wall_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Amplitude of Fourier mode k of a snapshot: 2 |u_hat(k)| / n.
double mode_amplitude(const muskat::GridFunction& u, int k) {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = u.grid.node(j);
    re += u[j] * std::cos(k * x);
    im += u[j] * std::sin(k * x);
  }
  const double n = static_cast<double>(u.size());
  return 2.0 * std::hypot(re, im) / n;
}

/// Least-squares slope of ln(amp) against time; returns the decay rate
/// (positive for decay), or NaN if the signal is numerically zero.
double fitted_decay_rate(const std::vector<double>& times,
                         const std::vector<double>& amps) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (amps[i] < 1e-14) continue;
    const double y = std::log(amps[i]);
    sx += times[i];
    sy += y;
    sxx += times[i] * times[i];
    sxy += times[i] * y;
    ++m;
  }
  if (m < 2) return std::nan("");
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nan("");
  return -(m * sxy - sx * sy) / denom;
}

int cmd_simulate(const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  muskat::ParsedConfig cfg = muskat::parse_config_file(opts.config_path);

  muskat::Trajectory traj = muskat::run(cfg.sim);
  if (traj.failed) {
    std::cerr << "simulate: numerical failure: " << traj.failure << "\n";
    return kExitNumerical;
  }

  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  const fs::path out(opts.out_dir);
  muskat::write_trajectory_csv(out / "trajectory.csv", traj);
  muskat::write_diagnostics_csv(out / "diagnostics.csv", traj);

  muskat::RunManifest man;
  man.command = "simulate";
  man.config_echo = cfg.raw;
  man.code_version = muskat::muskat_version();
  man.seed = opts.seed;
  man.add_file(out / "trajectory.csv");
  man.add_file(out / "diagnostics.csv");
  man.wall_seconds = wall_since(t0);
  man.write(out / "manifest.json");
  return kExitOk;
}

int cmd_validate(const CommonOpts& opts) {
  const std::vector<muskat::CheckResult> results = muskat::run_validation(opts.seed);
  bool all_pass = true;
  std::printf("%-36s %-6s %s\n", "check", "status", "detail");
  for (const muskat::CheckResult& r : results) {
    std::printf("%-36s %-6s %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitInvariantFailure;
}

int cmd_converge(const CommonOpts& opts, const std::vector<double>& eps_flag) {
  const auto t0 = std::chrono::steady_clock::now();
  muskat::ParsedConfig cfg = muskat::parse_config_file(opts.config_path);
  std::vector<double> eps = eps_flag.empty() ? cfg.eps_list : eps_flag;
  if (eps.empty()) {
    std::cerr << "converge: no eps list (config key eps_list or --eps)\n";
    return kExitUsage;
  }
  for (std::size_t i = 1; i < eps.size(); ++i) {
    if (!(eps[i] < eps[i - 1]) || !(eps[i] > 0.0)) {
      std::cerr << "converge: eps list must be positive and strictly decreasing\n";
      return kExitUsage;
    }
  }

  muskat::ViscositySweep sweep = muskat::vanishing_viscosity(cfg.sim, eps);
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  const fs::path out(opts.out_dir);
  muskat::write_cauchy_csv(out / "cauchy.csv", eps, sweep.report);

  muskat::RunManifest man;
  man.command = "converge";
  man.config_echo = cfg.raw;
  man.code_version = muskat::muskat_version();
  man.seed = opts.seed;
  man.add_file(out / "cauchy.csv");
  man.wall_seconds = wall_since(t0);
  man.write(out / "manifest.json");
  return sweep.report.complete ? kExitOk : kExitNumerical;
}

int cmd_spectrum(const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  muskat::ParsedConfig cfg = muskat::parse_config_file(opts.config_path);

  std::vector<muskat::SpectrumRow> rows;
  for (int k = 1; k <= 5; ++k) {
    muskat::SimConfig c = cfg.sim;
    c.initial.profile = muskat::InitialData::Profile::kCosine;
    c.initial.mode = k;
    muskat::Trajectory traj = muskat::run(c);
    if (traj.failed) {
      std::cerr << "spectrum: numerical failure at mode " << k << ": " << traj.failure << "\n";
      return kExitNumerical;
    }
    std::vector<double> amps;
    amps.reserve(traj.snapshots.size());
    for (const auto& snap : traj.snapshots) amps.push_back(mode_amplitude(snap, k));
    rows.push_back({k, fitted_decay_rate(traj.times, amps), cfg.sim.kappa * k});
  }

  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  const fs::path out(opts.out_dir);
  muskat::write_spectrum_csv(out / "spectrum.csv", rows);

  muskat::RunManifest man;
  man.command = "spectrum";
  man.config_echo = cfg.raw;
  man.code_version = muskat::muskat_version();
  man.seed = opts.seed;
  man.add_file(out / "spectrum.csv");
  man.wall_seconds = wall_since(t0);
  man.write(out / "manifest.json");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contour-dynamics solver for the periodic one-phase interface problem"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<double> eps_flag;

  CLI::App* simulate = app.add_subcommand("simulate", "Run one trajectory from a config");
  add_common(simulate, opts, true);

  CLI::App* validate = app.add_subcommand("validate", "Run the invariant suite");
  add_common(validate, opts, false);

  CLI::App* converge = app.add_subcommand("converge", "Vanishing-viscosity sweep");
  add_common(converge, opts, true);
  converge->add_option("--eps", eps_flag, "Strictly decreasing epsilon list")->delimiter(',');

  CLI::App* spectrum = app.add_subcommand("spectrum", "Per-mode linearized decay rates");
  add_common(spectrum, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opts);
    if (validate->parsed()) return cmd_validate(opts);
    if (converge->parsed()) return cmd_converge(opts, eps_flag);
    if (spectrum->parsed()) return cmd_spectrum(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
