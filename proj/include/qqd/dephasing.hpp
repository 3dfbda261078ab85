#pragma once

// Classical dephasing of the qubit-qutrit pair.
//
// The noise Hamiltonian couples sigma_z (qubit) and c_z = diag(1,0,-1)
// (qutrit) to white-noise fields n_A, n_B (local) and n_AB (shared), each with
// <n(t) n(t')> = Gamma / mu^2 delta(t - t'). Averaged over the fields, entry
// (i,j) of rho is damped by gamma^k(i,j) with gamma = exp(-t Gamma / 8).

#include <array>
#include <cstdint>
#include <optional>

#include "qqd/linalg.hpp"

namespace qqd {

enum class NoiseMode {
  Multilocal,  ///< n_A, n_B active, n_AB = 0
  Collective,  ///< n_AB active, n_A = n_B = 0
  Combined,    ///< all three fields (experimental)
};

/// Damping rate and active noise fields. Throws InvalidConfig unless gamma_rate > 0.
class NoiseConfig {
 public:
  NoiseConfig(double gamma_rate, NoiseMode mode);

  double gamma_rate() const noexcept { return gamma_rate_; }
  NoiseMode mode() const noexcept { return mode_; }

 private:
  double gamma_rate_;
  NoiseMode mode_;
};

/// gamma = exp(-t Gamma / 8) and gamma_tilde = gamma^8 = exp(-t Gamma).
/// All conversions between the two go through here.
class DephasingFactor {
 public:
  /// Throws NegativeTime for t_gamma < 0.
  static DephasingFactor from_t_gamma(double t_gamma);
  /// Throws ParameterOutOfRange unless gamma_tilde is in (0, 1].
  static DephasingFactor from_gamma_tilde(double gamma_tilde);

  double gamma() const noexcept { return gamma_; }
  double gamma_tilde() const noexcept { return gamma_tilde_; }
  double t_gamma() const noexcept { return t_gamma_; }

 private:
  DephasingFactor(double t_gamma, double gamma, double gamma_tilde)
      : t_gamma_(t_gamma), gamma_(gamma), gamma_tilde_(gamma_tilde) {}

  double t_gamma_;
  double gamma_;
  double gamma_tilde_;
};

using ExponentMatrix = std::array<std::array<int, kJointDim>, kJointDim>;

/// k(i,j) with rho(t)[i][j] = rho(0)[i][j] * gamma^k. With dA, dB the sigma_z
/// and c_z eigenvalue differences between basis states i and j:
/// Multilocal dA^2 + dB^2, Collective (dA + dB)^2, Combined the sum of both.
ExponentMatrix dephasing_exponents(NoiseMode mode);

/// Analytic channel. Throws NegativeTime for t < 0.
DensityMatrix apply_channel(const DensityMatrix& rho0, double t, const NoiseConfig& cfg);

struct TrajectoryConfig {
  double mu = 1.0;
  std::size_t n_trajectories = 10000;
  /// Time step; defaults to t / 1000. Must satisfy dt <= t / 100.
  std::optional<double> dt;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks hardware concurrency. Results do not depend on it.
  unsigned workers = 0;
};

struct TrajectoryEstimate {
  DensityMatrix mean;
  /// Row-major standard error of the mean of each complex entry.
  std::array<double, kJointDim * kJointDim> std_error{};

  double se(std::size_t row, std::size_t col) const noexcept {
    return std_error[row * kJointDim + col];
  }
};

/// Monte Carlo average of U rho0 U^dagger over sampled noise histories.
/// Each trajectory draws piecewise-constant Gaussian field values per step
/// from its own counter-based stream keyed by (seed, trajectory index).
/// Throws InvalidTrajectoryConfig if mu <= 0, n_trajectories < 100, or dt is
/// non-positive or coarser than t / 100.
TrajectoryEstimate simulate_trajectories(const DensityMatrix& rho0, double t,
                                         const NoiseConfig& cfg, const TrajectoryConfig& tcfg);

}  // namespace qqd
