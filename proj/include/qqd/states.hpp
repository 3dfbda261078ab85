#pragma once

#include <array>

#include "qqd/linalg.hpp"

namespace qqd {

enum class Family { Entangled, Separable };

/// Family label plus its parameter (p for Entangled, r for Separable).
/// Construction rejects values outside [0, 1/2] resp. [0, 1/3].
class StateParameter {
 public:
  StateParameter(Family family, double value);

  Family family() const noexcept { return family_; }
  double value() const noexcept { return value_; }

  /// Upper end of the admissible parameter interval for `family`.
  static double upper_bound(Family family) noexcept;

 private:
  Family family_;
  double value_;
};

struct GeneratorSet {
  std::array<ComplexMatrix, 3> pauli;
  std::array<ComplexMatrix, 8> gellmann;
  ComplexMatrix c_z;
};

/// Pauli triple, standard Gell-Mann octet (lambda_8 = diag(1,1,-2)/sqrt 3) and
/// the spin-1 z operator diag(1, 0, -1).
const GeneratorSet& generators();

DensityMatrix rho_entangled(double p);
DensityMatrix rho_separable(double r);
DensityMatrix family_state(const StateParameter& param);

}  // namespace qqd
