#pragma once

// Minimization of a smooth objective over qubit measurement directions:
// an exhaustive (theta, phi) grid followed by Nelder-Mead refinement started
// at the best grid node.

#include <array>
#include <cstddef>
#include <functional>

namespace qqd {

/// Bloch-sphere angles of a two-outcome projective qubit measurement,
/// theta in [0, pi), phi in [0, 2 pi).
struct MeasurementDirection {
  double theta = 0.0;
  double phi = 0.0;

  /// Throws InvalidDirection if either angle is outside its range.
  void validate() const;
  std::array<double, 3> unit_vector() const noexcept;

  /// Canonical angles of the axis +-n (the projector pair is the same for n
  /// and -n). `n` need not be normalized but must be non-zero.
  static MeasurementDirection from_axis(const std::array<double, 3>& n);
  /// Canonical form of arbitrary (possibly out-of-range) angles.
  static MeasurementDirection canonical(double theta, double phi);

  friend bool operator==(const MeasurementDirection&, const MeasurementDirection&) = default;
};

struct DirectionSearchOptions {
  std::size_t theta_points = 64;
  std::size_t phi_points = 128;
  /// Objective spread across the simplex at convergence.
  double f_tol = 1e-8;
  /// Simplex diameter (radians) at convergence.
  double x_tol = 1e-7;
  int max_iterations = 500;
};

struct DirectionSearchResult {
  double value = 0.0;
  MeasurementDirection direction;
  /// Best value on the coarse grid, before refinement.
  double grid_value = 0.0;
  int iterations = 0;
};

/// The objective receives the unit vector n; it is evaluated on the grid
/// theta_i = i pi / theta_points, phi_j = 2 pi j / phi_points (lowest theta,
/// then lowest phi, wins ties), then refined. The refined value never
/// exceeds the grid value.
DirectionSearchResult minimize_over_directions(
    const std::function<double(const std::array<double, 3>&)>& objective,
    const DirectionSearchOptions& options = {});

}  // namespace qqd
