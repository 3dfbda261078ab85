#pragma once

// Correlation quantifiers of a qubit-qutrit state. Entropies are in bits;
// measurements act on the qubit (subsystem A).

#include <array>

#include "qqd/direction_search.hpp"
#include "qqd/linalg.hpp"
#include "qqd/states.hpp"

namespace qqd {

/// rho = (1/6)(I + sum x_i s_i (x) I + sum y_j I (x) l_j + sum t_ij s_i (x) l_j).
struct BlochDecomposition {
  std::array<double, 3> x{};
  std::array<double, 8> y{};
  std::array<std::array<double, 8>, 3> t{};

  /// Rebuilds the 6x6 operator from the coefficients.
  ComplexMatrix reconstruct(const GeneratorSet& basis = generators()) const;
};

struct ClassicalCorrelation {
  double value = 0.0;
  MeasurementDirection direction;
  /// min over directions of the measured conditional entropy.
  double conditional_entropy = 0.0;
};

struct CorrelationRecord {
  double negativity = 0.0;
  double mutual_info = 0.0;
  double classical = 0.0;
  /// mutual_info - classical, unclamped.
  double discord = 0.0;
  double geometric_discord = 0.0;
  double geometric_discord_x2 = 0.0;
  MeasurementDirection optimal_direction;
};

/// Sum over eigenvalues eta of the qubit partial transpose of |eta| - eta.
double negativity(const DensityMatrix& rho);

/// -Tr rho log2 rho; eigenvalues below 1e-12 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

double mutual_information(const DensityMatrix& rho);

/// sum_k p_k S(rho_B^k) after the projective qubit measurement along `dir`.
/// Throws InvalidDirection for angles outside [0, pi) x [0, 2 pi).
double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& dir);

ClassicalCorrelation classical_correlation(const DensityMatrix& rho,
                                           const DirectionSearchOptions& options = {});

/// I - C with the optimal qubit measurement. Unclamped: may dip slightly
/// below zero for zero-discord states.
double quantum_discord(const DensityMatrix& rho, const DirectionSearchOptions& options = {});

BlochDecomposition bloch_decomposition(const DensityMatrix& rho, const GeneratorSet& basis = generators());

/// Closed 2x3 formula |x|^2/6 + |T|^2/9 - k_max, unclamped.
double geometric_discord(const BlochDecomposition& bloch);
/// Clamped at zero.
double geometric_discord(const DensityMatrix& rho);

/// min over qubit measurement axes of ||rho - sum_k (P_k (x) I) rho (P_k (x) I)||^2,
/// clamped at zero. Independent of the Bloch coefficients.
double geometric_discord_variational_oracle(const DensityMatrix& rho,
                                            const DirectionSearchOptions& options = {});

/// Every quantifier at once; the discord uses the classical-correlation optimum.
CorrelationRecord evaluate_correlations(const DensityMatrix& rho, const DirectionSearchOptions& options = {});

}  // namespace qqd
