#pragma once

// Self-checks: numeric pipelines against the closed forms and the variational
// geometric-discord oracle, and the analytic channel against Monte Carlo
// trajectory averages.

#include <cstdint>
#include <string>
#include <vector>

#include "qqd/dephasing.hpp"
#include "qqd/sweep.hpp"

namespace qqd {

/// Random full-rank 2x3 state rho = G G^dagger / Tr(G G^dagger) with G a
/// complex Ginibre matrix drawn from `seed`.
DensityMatrix random_density_matrix(std::uint64_t seed);

struct VerifyOptions {
  std::size_t n_params = 51;
  std::size_t n_times = 41;
  double t_gamma_max = 5.0;
  std::size_t n_random_states = 200;
  std::uint64_t seed = 20120901;
  double closed_form_tol = 1e-8;
  double oracle_tol = 1e-5;
  unsigned workers = 0;
  DirectionSearchOptions search;
};

struct DeviationEntry {
  std::string family;   ///< "entangled", "separable" or "random"
  std::string mode;     ///< noise mode, or "none" for the random-state suite
  std::string measure;  ///< "negativity", "geometric" or "geometric_oracle"
  double max_abs_deviation = 0.0;
  double worst_param = 0.0;    ///< family parameter, or random-state index
  double worst_t_gamma = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_abs_deviation < tolerance; }
};

struct VerifyReport {
  std::vector<DeviationEntry> entries;
  bool passed() const;
  /// Throws ToleranceBreach naming the worst failing entry.
  void throw_if_failed() const;
};

VerifyReport run_verify(const VerifyOptions& options = {});

struct MonteCarloOptions {
  std::vector<double> t_gammas{0.5, 1.0, 2.0};
  double z_threshold = 4.0;
  double pass_fraction = 0.95;
};

struct EntryZScore {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex analytic;
  Complex estimate;
  double std_error = 0.0;
  /// |estimate - analytic| / std_error; 0 when both the deviation and the
  /// standard error vanish, +inf when only the standard error does.
  double z = 0.0;
};

struct MonteCarloPoint {
  double t_gamma = 0.0;
  std::vector<EntryZScore> entries;  ///< all 36, row-major
  double fraction_within = 0.0;
  bool passed = false;
};

struct MonteCarloReport {
  std::vector<MonteCarloPoint> points;
  bool passed() const;
};

/// Compares simulate_trajectories against apply_channel for the family state
/// of `cfg` at each t_gamma of `options`.
MonteCarloReport run_montecarlo(const SweepConfig& cfg, const TrajectoryConfig& tcfg,
                                const MonteCarloOptions& options = {});

/// Same comparison for an arbitrary initial state.
MonteCarloReport run_montecarlo(const DensityMatrix& rho0, const NoiseConfig& noise, const TrajectoryConfig& tcfg,
                                const MonteCarloOptions& options = {});

}  // namespace qqd
