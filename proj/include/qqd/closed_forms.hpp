#pragma once

// Analytic negativity and geometric discord of the two state families as
// functions of the parameter and gamma_tilde = exp(-t Gamma), plus location
// of their non-analytic points.

#include <string>
#include <vector>

#include "qqd/dephasing.hpp"
#include "qqd/states.hpp"

namespace qqd {

/// Arguments of the closed forms. Only Multilocal and Collective modes have
/// closed forms; construction throws InvalidConfig for Combined,
/// ParameterOutOfRange for a bad parameter or gamma_tilde outside (0, 1].
class ClosedFormQuery {
 public:
  ClosedFormQuery(Family family, NoiseMode mode, double param, double gamma_tilde);
  ClosedFormQuery(const StateParameter& param, NoiseMode mode, const DephasingFactor& factor);

  Family family() const noexcept { return family_; }
  NoiseMode mode() const noexcept { return mode_; }
  double param() const noexcept { return param_; }
  double gamma_tilde() const noexcept { return gamma_tilde_; }

 private:
  Family family_;
  NoiseMode mode_;
  double param_;
  double gamma_tilde_;
};

/// Entangled family only; throws UnsupportedFamily for Separable (N is 0 there).
double closed_negativity(const ClosedFormQuery& q);

/// Evaluates every candidate inside max{...} and keeps the largest.
double closed_geometric_discord(const ClosedFormQuery& q);

/// Candidates of the max{...} term in the geometric-discord expression,
/// in the order they appear.
std::vector<double> geometric_discord_branches(const ClosedFormQuery& q);

enum class CriticalKind {
  GeometricBranchSwitch,
  EntanglementSuddenDeath,
};

struct CriticalTime {
  double t_gamma;  ///< dimensionless t * Gamma
  double time;     ///< t_gamma / gamma_rate
  CriticalKind kind;
  std::string description;
};

/// Branch switches of the geometric-discord max{...} and negativity zeros,
/// in increasing time, each bisected to 1e-10 in gamma_tilde.
std::vector<CriticalTime> find_critical_times(Family family, NoiseMode mode, double param,
                                              double gamma_rate = 1.0);

std::string to_string(CriticalKind kind);

}  // namespace qqd
